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

// The two transforms between r-partite hypergraphs and r-edge-colored
// multigraphs:
//
//   hyper_to_colored: graph vertices are hyperedges; e and f get a color-i
//   edge whenever they share their part-i vertex.
//
//   colored_to_hyper: part i holds the color-i components (isolated vertices
//   are singleton components); every graph vertex v yields the hyperedge
//   whose part-i vertex is the color-i component of v.
//
// Under these, a vertex cover of the hypergraph is a cover of the graph by
// monochromatic components. A matching gives an independent set.

#ifndef RYSER_DUALITY_HPP
#define RYSER_DUALITY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

inline ColoredMultigraph hyper_to_colored(const PartiteHypergraph& h) {
  ColoredMultigraph g(h.r());
  for (std::size_t i = 0; i < h.edge_count(); ++i) g.add_vertex("e" + std::to_string(i));
  for (std::uint32_t i = 0; i < h.edge_count(); ++i)
    for (std::uint32_t j = i + 1; j < h.edge_count(); ++j)
      for (std::uint32_t p = 0; p < h.r(); ++p)
        if (h.edge(i)[p] == h.edge(j)[p]) g.add_edge(i, j, p);
  return g;
}

/// Hypergraph of monochromatic components. Graph vertices lying in the same
/// component in every color produce the same hyperedge; the hypergraph keeps
/// one copy and `edge_of_vertex` records the many-to-one map.
struct ComponentHypergraph {
  PartiteHypergraph hypergraph;
  std::vector<std::size_t> edge_of_vertex;
  // members[p][j]: graph vertices of the color-p component that is vertex j of part p.
  std::vector<std::vector<std::vector<std::uint32_t>>> members;
};

inline ComponentHypergraph colored_to_hyper(const ColoredMultigraph& g) {
  const std::size_t r = g.r();
  if (r < 2) throw InvalidInput("colored_to_hyper needs at least 2 colors");
  ComponentHypergraph out{PartiteHypergraph(r), std::vector<std::size_t>(g.vertex_count()), {}};
  std::vector<std::vector<std::uint32_t>> labels(r);
  for (std::uint32_t c = 0; c < r; ++c) {
    labels[c] = g.component_labels(c);
    out.members.push_back(g.components(c));
    for (const auto& comp : out.members.back())
      out.hypergraph.add_vertex(c, "c" + std::to_string(c + 1) + ":" + g.name(comp.front()));
  }
  std::map<Edge, std::size_t> seen;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    Edge e(r);
    for (std::size_t c = 0; c < r; ++c) e[c] = labels[c][v];
    auto it = seen.find(e);
    if (it == seen.end()) it = seen.emplace(e, out.hypergraph.add_edge(e)).first;
    out.edge_of_vertex[v] = it->second;
  }
  return out;
}

}  // namespace ryser

#endif  // RYSER_DUALITY_HPP
