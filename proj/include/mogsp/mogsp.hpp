// Copyright 2026 The mogsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the solver library. The command line lives in
// mogsp/cli.hpp and additionally needs CLI11.

#ifndef MOGSP_MOGSP_HPP
#define MOGSP_MOGSP_HPP

#include "mogsp/bench.hpp"
#include "mogsp/bottleneck.hpp"
#include "mogsp/dsa.hpp"
#include "mogsp/error.hpp"
#include "mogsp/instance_gen.hpp"
#include "mogsp/io.hpp"
#include "mogsp/label_engine.hpp"
#include "mogsp/model.hpp"
#include "mogsp/oracle.hpp"
#include "mogsp/pareto.hpp"
#include "mogsp/solver.hpp"
#include "mogsp/worst_case.hpp"

#endif  // MOGSP_MOGSP_HPP
