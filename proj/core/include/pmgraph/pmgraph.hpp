// Copyright 2026 The pmgraph Authors
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

#pragma once

#include "pmgraph/adjacency.hpp"
#include "pmgraph/counting.hpp"
#include "pmgraph/error.hpp"
#include "pmgraph/factorization.hpp"
#include "pmgraph/feasibility.hpp"
#include "pmgraph/graph.hpp"
#include "pmgraph/graph_io.hpp"
#include "pmgraph/matching.hpp"
#include "pmgraph/matrix.hpp"
#include "pmgraph/random_net.hpp"
#include "pmgraph/setup_plan.hpp"
#include "pmgraph/state.hpp"
