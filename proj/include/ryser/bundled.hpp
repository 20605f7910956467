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

// Hand-authored stable sequences shipped with the library.
//
// (2,1), relative to M_{2,2}, budget 1:
//   P22 = two edges sharing their part-2 vertex, witness = that vertex;
//   E_2, witness = its part-1 vertex.
//
// (3,1), relative to M_{3,2}, budget 2. Vertices a1, b1 (part 1),
// a2, b2 (part 2), a3, c3 (part 3):
//   Q = {a1a2a3, b1b2a3, a1b2c3, b1a2c3}, witness {a3, c3}
//   T = {a1a2a3, b1b2a3, a1b2c3},         witness {a1, a3}
//   P = {a1a2a3, b1b2a3},                 witness {a3}
//   E_3 = {a1a2a3},                       witness {a1, a2}
// Each item was certified with verify_sequence; the certificate is
// re-checked by the test suite.

#ifndef RYSER_BUNDLED_HPP
#define RYSER_BUNDLED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ryser/stability.hpp"

namespace ryser {

/// Builds a hypergraph from edges listed part by part (edges[i][p] is the
/// part-p vertex id); vertices are created on first sight.
inline PartiteHypergraph hypergraph_from_lists(std::size_t r, const std::vector<std::vector<std::string>>& edges) {
  PartiteHypergraph h(r);
  for (const auto& e : edges) {
    if (e.size() != r) throw InvalidInput("edge list entry must have r ids");
    for (std::size_t p = 0; p < r; ++p)
      if (!h.find(e[p])) h.add_vertex(p, e[p]);
    h.add_edge_named(e);
  }
  return h;
}

inline WitnessedHypergraph witnessed(std::size_t r, const std::vector<std::vector<std::string>>& edges,
                                     const std::vector<std::string>& witness) {
  WitnessedHypergraph w{hypergraph_from_lists(r, edges), {}};
  for (const auto& id : witness) {
    auto v = w.hypergraph.find(id);
    if (!v) throw InvalidInput("witness id '" + id + "' not in hypergraph");
    w.witness.push_back(*v);
  }
  return w;
}

inline StableSequence sequence_r2_nu1() {
  StableSequence s{2, 1, 1, {}, {matching_hypergraph(2, 2)}, CopyMode::part_permuting};
  s.items.push_back(witnessed(2, {{"x1", "x2"}, {"y1", "x2"}}, {"x2"}));
  s.items.push_back(witnessed(2, {{"x1", "x2"}}, {"x1"}));
  return s;
}

inline StableSequence sequence_r3_nu1() {
  StableSequence s{3, 1, 2, {}, {matching_hypergraph(3, 2)}, CopyMode::part_permuting};
  s.items.push_back(
      witnessed(3, {{"a1", "a2", "a3"}, {"b1", "b2", "a3"}, {"a1", "b2", "c3"}, {"b1", "a2", "c3"}}, {"a3", "c3"}));
  s.items.push_back(witnessed(3, {{"a1", "a2", "a3"}, {"b1", "b2", "a3"}, {"a1", "b2", "c3"}}, {"a1", "a3"}));
  s.items.push_back(witnessed(3, {{"a1", "a2", "a3"}, {"b1", "b2", "a3"}}, {"a3"}));
  s.items.push_back(witnessed(3, {{"a1", "a2", "a3"}}, {"a1", "a2"}));
  return s;
}

inline std::vector<std::pair<std::size_t, std::size_t>> bundled_pairs() { return {{2, 1}, {3, 1}}; }

inline std::optional<StableSequence> bundled_sequence(std::size_t r, std::size_t nu) {
  if (r == 2 && nu == 1) return sequence_r2_nu1();
  if (r == 3 && nu == 1) return sequence_r3_nu1();
  return std::nullopt;
}

inline std::string bundled_pairs_string() {
  std::string s;
  for (auto [r, nu] : bundled_pairs()) s += (s.empty() ? "" : ", ") + ("(" + std::to_string(r) + "," + std::to_string(nu) + ")");
  return s;
}

}  // namespace ryser

#endif  // RYSER_BUNDLED_HPP
