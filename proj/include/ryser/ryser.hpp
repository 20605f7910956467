// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYSER_RYSER_HPP
#define RYSER_RYSER_HPP

#include "ryser/abdual.hpp"
#include "ryser/basic_sequence.hpp"
#include "ryser/bundled.hpp"
#include "ryser/colored_graph.hpp"
#include "ryser/duality.hpp"
#include "ryser/embedding.hpp"
#include "ryser/error.hpp"
#include "ryser/exact.hpp"
#include "ryser/experiment.hpp"
#include "ryser/extensions.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/io.hpp"
#include "ryser/matching.hpp"
#include "ryser/metrics.hpp"
#include "ryser/oracles.hpp"
#include "ryser/schedule.hpp"
#include "ryser/stability.hpp"
#include "ryser/sunflower.hpp"
#include "ryser/transference.hpp"
#include "ryser/tree_cover.hpp"

#endif  // RYSER_RYSER_HPP
