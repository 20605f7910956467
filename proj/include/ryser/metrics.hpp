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

#ifndef RYSER_METRICS_HPP
#define RYSER_METRICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/exact.hpp"

namespace ryser {

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// A finite set with r metrics on it. dists[i][u][v] = d_i(u, v).
struct MetricFamily {
  std::vector<std::string> vertices;
  std::vector<DistanceMatrix> dists;

  std::size_t size() const { return vertices.size(); }
  std::size_t r() const { return dists.size(); }
  const Rational& d(std::size_t metric, std::size_t u, std::size_t v) const { return dists[metric][u][v]; }
};

/// Breadth-first distances inside one color class. Pairs in different
/// components get exactly |V(G)|.
inline DistanceMatrix graph_metric(const ColoredMultigraph& g, std::uint32_t color) {
  if (color >= g.r()) throw PreconditionError("graph_metric: color out of range");
  const std::size_t n = g.vertex_count();
  auto adj = g.color_adjacency(color);
  DistanceMatrix out(n, std::vector<Rational>(n, Rational(static_cast<long>(n))));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::queue<std::uint32_t> q;
    dist[s] = 0;
    q.push(static_cast<std::uint32_t>(s));
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (dist[t] >= 0) out[s][t] = dist[t];
  }
  return out;
}

/// The family (V(G), d_1, ..., d_r) of color-class graph metrics.
inline MetricFamily graph_metric_family(const ColoredMultigraph& g) {
  MetricFamily mf{g.names(), {}};
  for (std::uint32_t c = 0; c < g.r(); ++c) mf.dists.push_back(graph_metric(g, c));
  return mf;
}

struct MetricViolation {
  enum class Kind { nonzero_diagonal, asymmetric, nonpositive, triangle } kind;
  // For triangle: d(x, y) > d(x, z) + d(z, y). Otherwise only x (and y) matter.
  std::size_t x = 0, y = 0, z = 0;

  std::string describe(const std::vector<std::string>* names = nullptr) const {
    auto nm = [&](std::size_t v) { return names ? (*names)[v] : std::to_string(v); };
    switch (kind) {
      case Kind::nonzero_diagonal: return "d(" + nm(x) + "," + nm(x) + ") != 0";
      case Kind::asymmetric: return "d(" + nm(x) + "," + nm(y) + ") != d(" + nm(y) + "," + nm(x) + ")";
      case Kind::nonpositive: return "d(" + nm(x) + "," + nm(y) + ") <= 0 for distinct points";
      case Kind::triangle:
        return "d(" + nm(x) + "," + nm(y) + ") > d(" + nm(x) + "," + nm(z) + ") + d(" + nm(z) + "," + nm(y) + ")";
    }
    return {};
  }
};

/// Checks every metric axiom; the first violation in index order is returned.
inline std::optional<MetricViolation> is_metric(const DistanceMatrix& d) {
  using K = MetricViolation::Kind;
  const std::size_t n = d.size();
  for (const auto& row : d)
    if (row.size() != n) throw PreconditionError("is_metric: matrix is not square");
  for (std::size_t x = 0; x < n; ++x) {
    if (d[x][x] != 0) return MetricViolation{K::nonzero_diagonal, x, x, x};
    for (std::size_t y = 0; y < n; ++y) {
      if (d[x][y] != d[y][x]) return MetricViolation{K::asymmetric, x, y, y};
      if (x != y && d[x][y] <= 0) return MetricViolation{K::nonpositive, x, y, y};
    }
  }
  bool small = true;
  for (const auto& row : d)
    for (const auto& q : row) small = small && q.get_den() == 1 && q.get_num().fits_slong_p() && abs(q.get_num()) < (1L << 40);
  if (small) {
    std::vector<long> flat(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) flat[x * n + y] = d[x][y].get_num().get_si();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (flat[x * n + y] > flat[x * n + z] + flat[z * n + y]) return MetricViolation{K::triangle, x, y, z};
    return std::nullopt;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (d[x][y] > d[x][z] + d[z][y]) return MetricViolation{K::triangle, x, y, z};
  return std::nullopt;
}

/// Every metric of the family is a metric on the common vertex set.
inline bool is_metric_family(const MetricFamily& mf) {
  for (const auto& m : mf.dists) {
    if (m.size() != mf.size() || is_metric(m)) return false;
  }
  return true;
}

/// { v : d_metric(center, v) <= radius }, ascending.
inline std::vector<std::uint32_t> ball(const MetricFamily& mf, std::size_t metric, std::size_t center,
                                       const Threshold& radius) {
  if (metric >= mf.r()) throw PreconditionError("ball: metric index out of range");
  if (center >= mf.size()) throw PreconditionError("ball: center not in V");
  std::vector<std::uint32_t> out;
  for (std::size_t v = 0; v < mf.size(); ++v)
    if (v == center || compare(mf.d(metric, center, v), radius) <= 0) out.push_back(static_cast<std::uint32_t>(v));
  return out;
}

}  // namespace ryser

#endif  // RYSER_METRICS_HPP
