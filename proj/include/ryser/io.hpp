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

// JSON forms of every value the command line reads or writes. Colors are
// 1-based in JSON and 0-based in memory. Exact numbers are JSON integers
// when they fit in 53 bits and strings ("p/q", or "c*k^(p/q)" for
// thresholds) otherwise. Tower-sized integers in certificates are reported
// by bit length only.

#ifndef RYSER_IO_HPP
#define RYSER_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ryser/abdual.hpp"
#include "ryser/colored_graph.hpp"
#include "ryser/exact.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/metrics.hpp"
#include "ryser/schedule.hpp"
#include "ryser/stability.hpp"
#include "ryser/transference.hpp"
#include "ryser/tree_cover.hpp"

namespace ryser {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InvalidInput(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

inline std::string as_id(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput("vertex ids must be strings");
}

}  // namespace detail

inline Json exact_to_json(const Rational& q) {
  if (q.get_den() == 1 && bit_length(q.get_num()) <= 53) return q.get_num().get_si();
  return q.get_str();
}

inline Rational exact_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected an exact number (integer or \"p/q\" string)");
}

inline Json threshold_to_json(const Threshold& t) {
  if (t.is_rational()) return exact_to_json(t.coef);
  return t.str();
}

/// "c" or "c*k^(p/q)".
inline Threshold threshold_from_json(const Json& j) {
  if (!j.is_string()) return Threshold(exact_from_json(j));
  const auto s = j.get<std::string>();
  auto star = s.find('*');
  if (star == std::string::npos) return Threshold(parse_rational(s));
  auto caret = s.find("^(", star);
  auto slash = s.find('/', caret == std::string::npos ? star : caret);
  if (caret == std::string::npos || slash == std::string::npos || s.back() != ')')
    throw InvalidInput("malformed threshold '" + s + "'");
  Rational c = parse_rational(s.substr(0, star));
  Integer k;
  if (k.set_str(s.substr(star + 1, caret - star - 1), 10) != 0) throw InvalidInput("malformed threshold base in '" + s + "'");
  auto p = std::stoul(s.substr(caret + 2, slash - caret - 2));
  auto q = std::stoul(s.substr(slash + 1, s.size() - slash - 2));
  return Threshold(c, k, p, q);
}

// ---- hypergraphs ---------------------------------------------------------

inline Json hypergraph_to_json(const PartiteHypergraph& h) {
  Json parts = Json::array(), edges = Json::array();
  for (std::size_t p = 0; p < h.r(); ++p) parts.push_back(h.part_names(p));
  for (const auto& e : h.edges()) {
    Json ej = Json::array();
    for (std::size_t p = 0; p < h.r(); ++p) ej.push_back(h.part_names(p)[e[p]]);
    edges.push_back(ej);
  }
  return {{"r", h.r()}, {"parts", parts}, {"edges", edges}};
}

inline PartiteHypergraph hypergraph_from_json(const Json& j) {
  const std::size_t r = detail::as_size(detail::field(j, "r"), "r");
  const auto& parts = detail::field(j, "parts");
  if (!parts.is_array() || parts.size() != r) throw InvalidInput("'parts' must list exactly r parts");
  PartiteHypergraph h(r);
  for (std::size_t p = 0; p < r; ++p) {
    if (!parts[p].is_array()) throw InvalidInput("each part must be an array of ids");
    for (const auto& v : parts[p]) h.add_vertex(p, detail::as_id(v));
  }
  const auto& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw InvalidInput("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array()) throw InvalidInput("each edge must be an array of ids");
    std::vector<std::string> ids;
    for (const auto& v : e) ids.push_back(detail::as_id(v));
    h.add_edge_named(ids);
  }
  return h;
}

// ---- colored graphs -------------------------------------------------------

inline Json graph_to_json(const ColoredMultigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v), e.color + 1});
  return {{"r", g.r()}, {"vertices", g.names()}, {"edges", edges}};
}

inline ColoredMultigraph graph_from_json(const Json& j) {
  const std::size_t r = detail::as_size(detail::field(j, "r"), "r");
  ColoredMultigraph g(r);
  const auto& vs = detail::field(j, "vertices");
  if (!vs.is_array()) throw InvalidInput("'vertices' must be an array");
  for (const auto& v : vs) g.add_vertex(detail::as_id(v));
  const auto& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw InvalidInput("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) throw InvalidInput("each edge must be [u, v, color]");
    auto u = g.find(detail::as_id(e[0])), v = g.find(detail::as_id(e[1]));
    if (!u || !v) throw InvalidInput("edge endpoint is not a listed vertex");
    auto c = detail::as_size(e[2], "color");
    if (c < 1 || c > r) throw InvalidInput("edge color must be in 1..r");
    g.add_edge(*u, *v, static_cast<std::uint32_t>(c - 1));
  }
  return g;
}

// ---- metric families ------------------------------------------------------

inline Json metrics_to_json(const MetricFamily& mf) {
  Json ms = Json::array();
  for (const auto& d : mf.dists) {
    Json mat = Json::array();
    for (const auto& row : d) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(exact_to_json(x));
      mat.push_back(jr);
    }
    ms.push_back(mat);
  }
  return {{"vertices", mf.vertices}, {"metrics", ms}};
}

inline MetricFamily metrics_from_json(const Json& j) {
  MetricFamily mf;
  for (const auto& v : detail::field(j, "vertices")) mf.vertices.push_back(detail::as_id(v));
  const std::size_t n = mf.vertices.size();
  for (const auto& mat : detail::field(j, "metrics")) {
    if (!mat.is_array() || mat.size() != n) throw InvalidInput("each metric must be an n x n matrix");
    DistanceMatrix d;
    for (const auto& row : mat) {
      if (!row.is_array() || row.size() != n) throw InvalidInput("each metric must be an n x n matrix");
      std::vector<Rational> out;
      for (const auto& x : row) out.push_back(exact_from_json(x));
      d.push_back(std::move(out));
    }
    mf.dists.push_back(std::move(d));
  }
  return mf;
}

// ---- dualities --------------------------------------------------------------

inline Json embedding_to_json(const DualityEmbedding& d) {
  Json map = Json::object();
  for (std::size_t e = 0; e < d.map.size(); ++e) map[std::to_string(e)] = d.family->vertices[d.map[e]];
  return {{"map", map}, {"a", threshold_to_json(d.a)}, {"b", threshold_to_json(d.b)}};
}

/// Reads an embedding for hypergraph h into family mf.
inline DualityEmbedding embedding_from_json(const Json& j, const PartiteHypergraph& h, const MetricFamily& mf) {
  DualityEmbedding d{h, &mf, std::vector<std::size_t>(h.edge_count(), SIZE_MAX), threshold_from_json(detail::field(j, "a")),
                     threshold_from_json(detail::field(j, "b"))};
  for (const auto& [key, val] : detail::field(j, "map").items()) {
    std::size_t e = 0;
    try {
      e = std::stoul(key);
    } catch (const std::exception&) {
      throw InvalidInput("embedding keys must be edge indices");
    }
    if (e >= h.edge_count()) throw InvalidInput("embedding key out of range");
    auto id = detail::as_id(val);
    auto it = std::find(mf.vertices.begin(), mf.vertices.end(), id);
    if (it == mf.vertices.end()) throw InvalidInput("embedding image '" + id + "' is not a point");
    d.map[e] = static_cast<std::size_t>(it - mf.vertices.begin());
  }
  for (auto x : d.map)
    if (x == SIZE_MAX) throw InvalidInput("embedding must map every edge");
  return d;
}

// ---- sequences --------------------------------------------------------------

inline std::string to_string(CopyMode m) { return m == CopyMode::part_permuting ? "part_permuting" : "part_respecting"; }

inline Json sequence_to_json(const StableSequence& s) {
  Json items = Json::array(), rels = Json::array();
  for (const auto& it : s.items) {
    Json w = Json::array();
    for (const auto& v : it.witness) w.push_back(it.hypergraph.name(v));
    items.push_back({{"hypergraph", hypergraph_to_json(it.hypergraph)}, {"witness", w}});
  }
  for (const auto& rel : s.relatives) rels.push_back(hypergraph_to_json(rel));
  return {{"r", s.r}, {"nu", s.nu}, {"c", s.c}, {"mode", to_string(s.mode)}, {"relatives", rels}, {"items", items}};
}

inline StableSequence sequence_from_json(const Json& j) {
  StableSequence s;
  s.r = detail::as_size(detail::field(j, "r"), "r");
  s.nu = detail::as_size(detail::field(j, "nu"), "nu");
  s.c = detail::as_size(detail::field(j, "c"), "c");
  if (j.contains("mode")) {
    auto m = j.at("mode").get<std::string>();
    if (m == "part_permuting") s.mode = CopyMode::part_permuting;
    else if (m == "part_respecting") s.mode = CopyMode::part_respecting;
    else throw InvalidInput("unknown copy mode '" + m + "'");
  }
  for (const auto& rel : detail::field(j, "relatives")) s.relatives.push_back(hypergraph_from_json(rel));
  for (const auto& it : detail::field(j, "items")) {
    WitnessedHypergraph w{hypergraph_from_json(detail::field(it, "hypergraph")), {}};
    for (const auto& id : detail::field(it, "witness")) {
      auto v = w.hypergraph.find(detail::as_id(id));
      if (!v) throw InvalidInput("witness id '" + detail::as_id(id) + "' is not a vertex of its item");
      w.witness.push_back(*v);
    }
    s.items.push_back(std::move(w));
  }
  return s;
}

inline Json certification_to_json(const Certification& c) {
  Json items = Json::array();
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    Json ext = Json::array();
    for (const auto& x : c.items[i].extensions)
      ext.push_back({{"edge", x.edge}, {"contains", x.pattern ? Json(x.pattern_label) : Json(nullptr)}});
    items.push_back({{"item", i + 1}, {"ok", c.items[i].ok}, {"extensions", ext}});
  }
  Json out{{"certified", c.certified}, {"items", items}};
  if (c.failure) {
    Json f{{"reason", c.failure->reason}, {"message", c.failure->describe()}};
    f["item"] = c.failure->item ? Json(*c.failure->item + 1) : Json(nullptr);
    if (c.failure->extension) f["extension"] = hypergraph_to_json(*c.failure->extension);
    out["failure"] = f;
  }
  return out;
}

// ---- schedules and certificates ---------------------------------------------

inline Json big_to_json(const Integer& x) {
  if (bit_length(x) <= 53) return x.get_si();
  return Json{{"bits", bit_length(x)}};
}

inline Json big_to_json(const Rational& q) {
  if (q.get_den() == 1) return big_to_json(q.get_num());
  if (bit_length(q.get_num()) + bit_length(q.get_den()) <= 256) return q.get_str();
  return Json{{"bits", bit_length(q.get_num())}, {"den_bits", bit_length(q.get_den())}};
}

inline Json schedule_to_json(const ParameterSchedule& s) {
  Json k = Json::array(), m = Json::array();
  for (const auto& x : s.k) k.push_back(big_to_json(x));
  for (const auto& x : s.m) m.push_back(big_to_json(x));
  return {{"mode", to_string(s.mode)}, {"r", s.r}, {"ell", s.ell}, {"k", k}, {"m", m},
          {"engine_bound", engine_bound_string(s.r, s.ell)}};
}

inline Json history_to_json(const std::vector<HistoryEntry>& h) {
  Json out = Json::array();
  for (const auto& e : h) out.push_back({{"item", e.item + 1}, {"m", big_to_json(e.m)}, {"k", big_to_json(e.k)}});
  return out;
}

inline Json certificate_to_json(const ColoredMultigraph& g, const TreeCover& tc) {
  Json trees = Json::array();
  for (const auto& t : tc.trees) {
    Json parents = Json::object();
    for (auto [v, p] : t.parent) parents[g.name(v)] = g.name(p);
    Json vs = Json::array();
    for (auto v : t.vertices) vs.push_back(g.name(v));
    trees.push_back({{"color", t.color + 1},
                     {"root", g.name(t.root)},
                     {"parents", parents},
                     {"vertices", vs},
                     {"certified_radius", t.certified_radius.get_str()},
                     {"measured_diameter", t.measured_diameter},
                     {"tree_diameter", t.tree_diameter},
                     {"eccentricity", t.eccentricity}});
  }
  return {{"r", tc.r},
          {"nu", tc.nu},
          {"count", tc.trees.size()},
          {"trees", trees},
          {"schedule",
           {{"mode", to_string(tc.mode)},
            {"ell", tc.ell},
            {"engine_bound", tc.engine_bound},
            {"engine_radius_bits", tc.engine_radius_bits},
            {"small_graph", tc.small_graph}}},
          {"steps", history_to_json(tc.steps)}};
}

/// Reads the tree part of a certificate back against its graph.
inline TreeCover certificate_from_json(const Json& j, const ColoredMultigraph& g) {
  TreeCover tc;
  tc.r = detail::as_size(detail::field(j, "r"), "r");
  tc.nu = detail::as_size(detail::field(j, "nu"), "nu");
  auto vid = [&](const Json& x) {
    auto v = g.find(detail::as_id(x));
    if (!v) throw InvalidInput("certificate names unknown vertex '" + detail::as_id(x) + "'");
    return *v;
  };
  for (const auto& t : detail::field(j, "trees")) {
    MonoTree mt;
    auto c = detail::as_size(detail::field(t, "color"), "color");
    if (c < 1) throw InvalidInput("tree color must be >= 1");
    mt.color = static_cast<std::uint32_t>(c - 1);
    mt.root = vid(detail::field(t, "root"));
    for (const auto& [k, v] : detail::field(t, "parents").items()) mt.parent[vid(Json(k))] = vid(v);
    if (t.contains("vertices"))
      for (const auto& v : t.at("vertices")) mt.vertices.push_back(vid(v));
    std::sort(mt.vertices.begin(), mt.vertices.end());
    mt.certified_radius = parse_rational(detail::field(t, "certified_radius").get<std::string>());
    mt.measured_diameter = detail::as_size(detail::field(t, "measured_diameter"), "measured_diameter");
    tc.trees.push_back(std::move(mt));
  }
  return tc;
}

}  // namespace ryser

#endif  // RYSER_IO_HPP
