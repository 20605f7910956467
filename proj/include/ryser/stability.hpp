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

// Ryser-stability certificates.
//
// A hypergraph H with cover C is c-Ryser-stable relative to patterns
// R_1..R_k when every H' containing H is either covered by C or contains
// some R_j. Checking all H' is infinite; it suffices to check H + e for a
// single uncovered edge e, because any uncovered H' has such an edge and
// H + e is a subhypergraph of H'. Up to isomorphism there are finitely many
// H + e (see canonical_edge_extensions), which makes the check finite.

#ifndef RYSER_STABILITY_HPP
#define RYSER_STABILITY_HPP

#include <future>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ryser/embedding.hpp"
#include "ryser/extensions.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/matching.hpp"

namespace ryser {

struct WitnessedHypergraph {
  PartiteHypergraph hypergraph;
  std::vector<VertexRef> witness;
};

struct StableSequence {
  std::size_t r = 2, nu = 1, c = 1;
  std::vector<WitnessedHypergraph> items;
  std::vector<PartiteHypergraph> relatives;
  CopyMode mode = CopyMode::part_permuting;
};

/// A pattern an extension may contain, with a label for transcripts.
struct Pattern {
  std::string label;
  const PartiteHypergraph* hypergraph;
};

struct ExtensionCheck {
  std::string edge;                    // the added edge, by vertex id
  std::optional<std::size_t> pattern;  // index into the pattern list
  std::string pattern_label;
};

struct WitnessReport {
  bool ok = true;
  std::vector<ExtensionCheck> extensions;
  std::optional<std::size_t> failing;           // index into extensions
  std::optional<PartiteHypergraph> failing_graph;
};

inline WitnessReport check_witness(const WitnessedHypergraph& item, std::span<const Pattern> patterns,
                                   CopyMode mode = CopyMode::part_permuting, const Guards& g = {}) {
  const auto& h = item.hypergraph;
  for (const auto& v : item.witness)
    if (v.part >= h.r() || v.index >= h.part_size(v.part))
      throw PreconditionError("check_witness: witness vertex not in the hypergraph");
  if (!h.covered_by(item.witness)) throw PreconditionError("check_witness: witness does not cover the hypergraph");
  WitnessReport report;
  for (auto& x : canonical_edge_extensions(h, item.witness, mode, g)) {
    ExtensionCheck rec{x.hypergraph.edge_string(x.added), std::nullopt, {}};
    for (std::size_t j = 0; j < patterns.size() && !rec.pattern; ++j)
      if (contains_copy(x.hypergraph, *patterns[j].hypergraph, mode, g)) {
        rec.pattern = j;
        rec.pattern_label = patterns[j].label;
      }
    report.extensions.push_back(std::move(rec));
    if (!report.extensions.back().pattern && report.ok) {
      report.ok = false;
      report.failing = report.extensions.size() - 1;
      report.failing_graph = std::move(x.hypergraph);
    }
  }
  return report;
}

/// Convenience form: patterns are the relatives, labelled by position.
inline WitnessReport check_witness(const WitnessedHypergraph& item, std::span<const PartiteHypergraph> relatives,
                                   CopyMode mode = CopyMode::part_permuting, const Guards& g = {}) {
  std::vector<Pattern> pats;
  for (std::size_t j = 0; j < relatives.size(); ++j) pats.push_back({"relative " + std::to_string(j + 1), &relatives[j]});
  return check_witness(item, std::span<const Pattern>(pats), mode, g);
}

struct SequenceFailure {
  std::optional<std::size_t> item;  // 0-based; absent for whole-sequence defects
  std::string reason;
  std::optional<PartiteHypergraph> extension;

  std::string describe() const {
    return (item ? "item " + std::to_string(*item + 1) + ": " : std::string()) + reason;
  }
};

struct Certification {
  bool certified = false;
  std::vector<WitnessReport> items;
  std::optional<SequenceFailure> failure;
};

/// Patterns for item i: earlier items first, then the relatives.
inline std::vector<Pattern> prefix_patterns(const StableSequence& seq, std::size_t i) {
  std::vector<Pattern> pats;
  for (std::size_t j = 0; j < i; ++j) pats.push_back({"item " + std::to_string(j + 1), &seq.items[j].hypergraph});
  for (std::size_t j = 0; j < seq.relatives.size(); ++j)
    pats.push_back({"relative " + std::to_string(j + 1), &seq.relatives[j]});
  return pats;
}

namespace detail {

inline std::optional<SequenceFailure> structural_failure(const StableSequence& seq, const Guards& g) {
  if (seq.items.empty()) return SequenceFailure{std::nullopt, "sequence has no items", {}};
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const auto& it = seq.items[i];
    if (it.hypergraph.r() != seq.r) return SequenceFailure{i, "uniformity differs from r", {}};
    if (it.witness.size() > seq.c)
      return SequenceFailure{i, "witness has " + std::to_string(it.witness.size()) + " vertices, budget is " +
                                    std::to_string(seq.c), {}};
    for (const auto& v : it.witness)
      if (v.part >= it.hypergraph.r() || v.index >= it.hypergraph.part_size(v.part))
        return SequenceFailure{i, "witness vertex outside the hypergraph", {}};
    if (!it.hypergraph.covered_by(it.witness)) return SequenceFailure{i, "witness is not a vertex cover", {}};
  }
  for (const auto& rel : seq.relatives)
    if (rel.r() != seq.r) return SequenceFailure{std::nullopt, "relative has wrong uniformity", {}};
  auto m = matching_hypergraph(seq.r, seq.nu + 1);
  bool has_matching = false;
  for (const auto& rel : seq.relatives) has_matching = has_matching || are_isomorphic(rel, m, seq.mode, g);
  if (!has_matching) return SequenceFailure{std::nullopt, "relatives do not include M_{r,nu+1}", {}};
  if (!are_isomorphic(seq.items.back().hypergraph, single_edge(seq.r), seq.mode, g))
    return SequenceFailure{seq.items.size() - 1, "last item is not a single edge", {}};
  return std::nullopt;
}

}  // namespace detail

/// Certifies every item against its prefix plus the relatives. Items are
/// checked concurrently; the reported failure is the first one in item order.
inline Certification verify_sequence(const StableSequence& seq, const Guards& g = {}) {
  Certification cert;
  if (auto f = detail::structural_failure(seq, g)) {
    cert.failure = std::move(f);
    return cert;
  }
  std::vector<std::future<WitnessReport>> jobs;
  for (std::size_t i = 0; i < seq.items.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&seq, &g, i] {
      auto pats = prefix_patterns(seq, i);
      return check_witness(seq.items[i], std::span<const Pattern>(pats), seq.mode, g);
    }));
  for (auto& j : jobs) cert.items.push_back(j.get());
  for (std::size_t i = 0; i < cert.items.size(); ++i) {
    auto& rep = cert.items[i];
    if (rep.ok) continue;
    cert.failure = SequenceFailure{i, "extension by " + rep.extensions[*rep.failing].edge +
                                          " contains no earlier item or relative",
                                   rep.failing_graph};
    cert.items.resize(i + 1);
    return cert;
  }
  cert.certified = true;
  return cert;
}

/// Raised when a hypergraph fed to the cover extractor has too large a
/// matching; carries nu+1 disjoint edges.
class MatchingHypothesisError : public PreconditionError {
 public:
  MatchingHypothesisError(std::vector<std::size_t> m)
      : PreconditionError("matching-number hypothesis violated"), matching(std::move(m)) {}
  std::vector<std::size_t> matching;
};

struct SequenceCover {
  std::vector<VertexRef> cover;
  std::optional<std::size_t> item;  // absent for edgeless input
  std::optional<HyperEmbedding> embedding;
};

/// A cover of size <= c from a certified sequence: take the first item with a
/// copy in H and push its witness through the copy.
inline SequenceCover cover_from_sequence(const PartiteHypergraph& h, const StableSequence& seq, const Guards& g = {}) {
  if (h.r() != seq.r) throw PreconditionError("cover_from_sequence: uniformity mismatch");
  if (h.edge_count() == 0) return {};
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    auto copy = contains_copy(h, seq.items[i].hypergraph, seq.mode, g);
    if (!copy) continue;
    SequenceCover out{{}, i, copy};
    for (const auto& v : seq.items[i].witness)
      if (auto w = copy->image(v)) out.cover.push_back(*w);
    std::sort(out.cover.begin(), out.cover.end());
    out.cover.erase(std::unique(out.cover.begin(), out.cover.end()), out.cover.end());
    if (h.covered_by(out.cover)) return out;
    Guards wide = g;
    wide.max_edges = std::max(g.max_edges, g.max_search_edges);
    auto m = maximum_matching(h, wide, seq.nu + 1);
    if (m.size() > seq.nu) throw MatchingHypothesisError(std::move(m));
    throw InternalError("cover_from_sequence: sequence not sound (item " + std::to_string(i + 1) +
                        " witness image misses an edge)");
  }
  throw InternalError("cover_from_sequence: no item embeds, but the last item is a single edge");
}

}  // namespace ryser

#endif  // RYSER_STABILITY_HPP
