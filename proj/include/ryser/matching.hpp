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

#ifndef RYSER_MATCHING_HPP
#define RYSER_MATCHING_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

namespace detail {

inline void check_edge_guard(const PartiteHypergraph& h, std::size_t cap, const char* what) {
  if (h.edge_count() > cap)
    throw GuardExceeded(std::string(what) + ": " + std::to_string(h.edge_count()) +
                        " edges exceeds guard of " + std::to_string(cap));
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const PartiteHypergraph& h) : h_(h), used_(h.r()) {
    for (std::size_t p = 0; p < h.r(); ++p) used_[p].assign(h.part_size(p), false);
  }

  std::vector<std::size_t> run(std::size_t stop_at) {
    stop_at_ = stop_at;
    recurse(0);
    return best_;
  }

 private:
  bool fits(const Edge& e) const {
    for (std::size_t p = 0; p < e.size(); ++p)
      if (used_[p][e[p]]) return false;
    return true;
  }

  void mark(const Edge& e, bool value) {
    for (std::size_t p = 0; p < e.size(); ++p) used_[p][e[p]] = value;
  }

  void recurse(std::size_t i) {
    if (best_.size() >= stop_at_) return;
    if (current_.size() > best_.size()) best_ = current_;
    if (current_.size() + (h_.edge_count() - i) <= best_.size()) return;
    for (std::size_t j = i; j < h_.edge_count(); ++j) {
      if (current_.size() + (h_.edge_count() - j) <= best_.size()) return;
      const Edge& e = h_.edge(j);
      if (!fits(e)) continue;
      mark(e, true);
      current_.push_back(j);
      recurse(j + 1);
      current_.pop_back();
      mark(e, false);
      if (best_.size() >= stop_at_) return;
    }
  }

  const PartiteHypergraph& h_;
  std::vector<std::vector<bool>> used_;
  std::vector<std::size_t> current_, best_;
  std::size_t stop_at_ = SIZE_MAX;
};

// Exact minimum cover by depth-bounded branching on the first uncovered edge.
class CoverSearch {
 public:
  explicit CoverSearch(const PartiteHypergraph& h) : h_(h) {}

  std::vector<VertexRef> run() {
    for (std::size_t k = 0;; ++k) {
      budget_ = k;
      found_.reset();
      recurse();
      if (found_) return *found_;
    }
  }

 private:
  std::optional<std::size_t> first_uncovered() const {
    for (std::size_t i = 0; i < h_.edge_count(); ++i) {
      bool hit = false;
      for (const auto& v : chosen_) hit = hit || h_.contains(i, v);
      if (!hit) return i;
    }
    return std::nullopt;
  }

  void recurse() {
    auto e = first_uncovered();
    if (!e) {
      std::vector<VertexRef> c = chosen_;
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (!found_ || c < *found_) found_ = std::move(c);
      return;
    }
    if (chosen_.size() >= budget_) return;
    for (const auto& v : h_.edge_vertices(*e)) {
      chosen_.push_back(v);
      recurse();
      chosen_.pop_back();
    }
  }

  const PartiteHypergraph& h_;
  std::vector<VertexRef> chosen_;
  std::optional<std::vector<VertexRef>> found_;
  std::size_t budget_ = 0;
};

}  // namespace detail

/// A maximum set of pairwise disjoint edges (edge indices, ascending).
/// The search stops early once `stop_at` edges are found.
inline std::vector<std::size_t> maximum_matching(const PartiteHypergraph& h, const Guards& g = {},
                                                 std::size_t stop_at = SIZE_MAX) {
  detail::check_edge_guard(h, g.max_edges, "matching_number");
  return detail::MatchingSearch(h).run(stop_at);
}

/// The matching number nu(H), computed exactly by branch and bound.
inline std::size_t matching_number(const PartiteHypergraph& h, const Guards& g = {}) {
  return maximum_matching(h, g).size();
}

/// A minimum vertex cover; among minimum covers the lexicographically
/// smallest sorted vertex list is returned.
inline std::vector<VertexRef> vertex_cover_min(const PartiteHypergraph& h, const Guards& g = {}) {
  detail::check_edge_guard(h, g.max_edges, "vertex_cover_min");
  return detail::CoverSearch(h).run();
}

}  // namespace ryser

#endif  // RYSER_MATCHING_HPP
