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

// The transference engine.
//
// A step holds an (m, km)-duality phi of a stable item H with witness C. It
// either finds that the radius-km balls around phi(e_j) (one per witness
// vertex u_j, in the metric of u_j's part) cover V, or it grows H by an
// uncovered edge e' sent to an uncovered point v. The grown map is an
// (m', k^{1/4r} m')-duality, so a copy of an earlier item (or of the
// matching M_{r,nu+1}) inside H + e' inherits a duality at the new scale.
//
// The driver starts from the final single edge at the largest scale and
// walks down the sequence. Item indices strictly decrease, so it stops
// within ell steps. Landing in the matching contradicts the premise that
// every nu+1 points contain a pair at distance <= 1.
//
// Sequence items are stored together with a part permutation: a copy found
// with parts relabelled is carried as the relabelled item, so its parts
// always line up with the metric indices.

#ifndef RYSER_TRANSFERENCE_HPP
#define RYSER_TRANSFERENCE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ryser/abdual.hpp"
#include "ryser/colored_graph.hpp"
#include "ryser/embedding.hpp"
#include "ryser/exact.hpp"
#include "ryser/metrics.hpp"
#include "ryser/schedule.hpp"
#include "ryser/stability.hpp"

namespace ryser {

/// The premise failed: carries nu+1 points no two of which are at distance
/// <= 1 in any metric (an independent set, for graph metrics).
class PremiseViolation : public PreconditionError {
 public:
  PremiseViolation(std::string what, std::vector<std::uint32_t> pts)
      : PreconditionError(std::move(what)), points(std::move(pts)) {}
  std::vector<std::uint32_t> points;
};

struct TPrime {
  std::size_t s = 0, t_prime = 0;
  Rational m_prime;
};

/// The t' scan. m_sorted holds m_1 <= ... <= m_r; boundaries are m_0 = m
/// and m_{r+1} = k m. Asserts all three inequalities before returning.
inline TPrime find_t_prime(const std::vector<Rational>& m_sorted, const Rational& m, const Integer& k,
                           std::size_t r) {
  if (m_sorted.size() != r) throw PreconditionError("find_t_prime: need r values");
  if (m < 1) throw PreconditionError("find_t_prime: m must be >= 1");
  if (k <= pow(2UL, 9 * r)) throw PreconditionError("find_t_prime: k must exceed 2^{9r}");
  for (std::size_t i = 1; i < r; ++i)
    if (m_sorted[i] < m_sorted[i - 1]) throw PreconditionError("find_t_prime: values must be sorted");
  std::vector<Rational> mm{m};
  mm.insert(mm.end(), m_sorted.begin(), m_sorted.end());
  mm.push_back(Rational(k) * m);
  const unsigned long q = 3 * r;
  const Threshold third_m(m, k, 1, q);
  TPrime out;
  for (std::size_t i = 0; i < mm.size(); ++i)
    if (compare(mm[i], third_m) <= 0) out.s = i;
  if (out.s > r) throw InternalError("find_t_prime: s > r");
  bool found = false;
  for (std::size_t t = out.s; t <= r && !found; ++t)
    if (compare(mm[t + 1], Threshold(mm[t], k, 1, q)) > 0) {
      out.t_prime = t;
      found = true;
    }
  if (!found) throw InternalError("find_t_prime: no t' exists");
  const auto tp = out.t_prime;
  if (!(compare(mm[tp + 1], third_m) > 0)) throw InternalError("find_t_prime: m_{t'+1} <= k^{1/3r} m");
  if (!(compare(mm[tp + 1], Threshold(mm[tp], k, 1, q)) > 0))
    throw InternalError("find_t_prime: m_{t'+1} <= k^{1/3r} m_{t'}");
  if (!(compare(mm[tp], Threshold(m, k, 1, 2)) <= 0)) throw InternalError("find_t_prime: m_{t'} > sqrt(k) m");
  out.m_prime = mm[tp] + m;
  return out;
}

/// The inequality chain m <= m' < k^{1/4r} m' <= k^{1/4r}(1+sqrt k) m
/// <= 2 k^{1/4r+1/2} m <= (k - sqrt k) m < k m, plus the margin
/// k^{1/3r}/2 >= k^{1/4r}. Returns the name of each verified link; throws
/// InternalError on the first failure.
inline std::vector<std::string> check_step_chain(const Rational& m, const Rational& m_prime, const Integer& k,
                                                 std::size_t r) {
  std::vector<std::string> ok;
  auto need = [&](bool cond, const char* name) {
    if (!cond) throw InternalError(std::string("inequality chain failed: ") + name);
    ok.emplace_back(name);
  };
  need(m >= 1 && m <= m_prime, "m <= m'");
  need(k > 1 && m_prime > 0, "m' < k^{1/4r} m'");
  need(compare(Rational(m_prime - m), Threshold(m, k, 1, 2)) <= 0, "k^{1/4r} m' <= k^{1/4r}(1+sqrt k) m");
  need(k >= 1, "k^{1/4r}(1+sqrt k) m <= 2 k^{1/4r+1/2} m");
  {
    // 2 k^{1/4r} + 1 <= sqrt(k), via ceil(k^{1/4r}) and floor(sqrt k).
    Integer root = floor_root(k, 4 * r);
    if (pow(root, 4 * r) != k) root += 1;
    need(2 * root + 1 <= floor_root(k, 2), "2 k^{1/4r+1/2} m <= (k - sqrt k) m");
  }
  need(k >= 1, "(k - sqrt k) m < k m");
  need(k >= pow(2UL, 12 * r), "k^{1/3r}/2 >= k^{1/4r}");
  return ok;
}

struct HistoryEntry {
  std::size_t item = 0;  // 0-based sequence index
  Rational m;
  Integer k;
};

/// Engine state: a relabelled copy of item `item` with an (m, k m)-duality.
struct TransferenceState {
  std::size_t item = 0;
  PartiteHypergraph hypergraph;
  std::vector<VertexRef> witness;
  std::vector<std::size_t> phi;
  std::vector<std::size_t> part_perm;  // item part p sits in part part_perm[p]
  Rational m;
  Integer k;
  std::vector<HistoryEntry> history;
};

struct Ball {
  std::size_t metric = 0, center = 0;
  Rational radius;
  std::vector<std::uint32_t> members;
};

struct TransferenceStep {
  enum class Kind { ball_cover, dual_growth, premise_violation } kind = Kind::ball_cover;
  std::vector<Ball> balls;
  // Growth data.
  std::size_t uncovered = 0;
  std::vector<std::size_t> part_order;  // sorted position -> part
  std::vector<Rational> m_sorted;
  TPrime tp;
  PartiteHypergraph grown;
  std::vector<std::size_t> grown_phi;
  std::vector<std::string> fresh;       // ids of the u*_t used by e'
  Threshold b_prime;                    // k^{1/4r} m'
  std::string pattern_label;
  std::optional<std::size_t> pattern_item, pattern_relative;
  TransferenceState next;               // restricted duality (m', k^{1/4r} m')
  std::vector<std::uint32_t> independent;  // premise violation witness
  std::vector<std::string> checks;
};

namespace detail {

/// Pattern `pat` relabelled through a copy, so pattern part p becomes part sigma[p].
inline PartiteHypergraph permute_parts(const PartiteHypergraph& pat, const std::vector<std::size_t>& sigma) {
  const std::size_t r = pat.r();
  PartiteHypergraph out(r);
  std::vector<std::size_t> inv(r);
  for (std::size_t p = 0; p < r; ++p) inv[sigma[p]] = p;
  for (std::size_t hp = 0; hp < r; ++hp)
    for (const auto& nm : pat.part_names(inv[hp])) out.add_vertex(hp, nm);
  for (const auto& e : pat.edges()) {
    Edge f(r);
    for (std::size_t p = 0; p < r; ++p) f[sigma[p]] = e[p];
    out.add_edge(f);
  }
  return out;
}

inline std::vector<VertexRef> permute_witness(const std::vector<VertexRef>& w, const std::vector<std::size_t>& sigma) {
  std::vector<VertexRef> out;
  for (const auto& v : w) out.push_back({static_cast<std::uint32_t>(sigma[v.part]), v.index});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_matching_pattern(const PartiteHypergraph& h) {
  if (h.edge_count() < 2) return false;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j)
      for (std::size_t p = 0; p < h.r(); ++p)
        if (h.edge(i)[p] == h.edge(j)[p]) return false;
  return true;
}

}  // namespace detail

/// The initial state: the final single edge mapped to point 0 at scale
/// (m, k m). Any map of one edge is a duality.
inline TransferenceState initial_state(const StableSequence& seq, const Rational& m, const Integer& k) {
  const auto& last = seq.items.back();
  TransferenceState st;
  st.item = seq.items.size() - 1;
  st.hypergraph = last.hypergraph;
  st.witness = last.witness;
  st.phi.assign(st.hypergraph.edge_count(), 0);
  std::iota(st.phi.begin(), st.phi.end(), std::size_t{0});
  st.part_perm.resize(seq.r);
  std::iota(st.part_perm.begin(), st.part_perm.end(), std::size_t{0});
  st.m = m;
  st.k = k;
  st.history.push_back({st.item, m, k});
  return st;
}

/// One application of the transference lemma at scale k = state.k.
inline TransferenceStep transference_step(const TransferenceState& st, const StableSequence& seq,
                                          const MetricFamily& mf, const Guards& g = {}) {
  const std::size_t r = seq.r;
  const auto& h = st.hypergraph;
  const Integer& k = st.k;
  const Rational& m = st.m;
  if (mf.r() != r || h.r() != r) throw PreconditionError("transference_step: uniformity mismatch");
  if (k <= pow(2UL, 9 * r)) throw PreconditionError("transference_step: k must exceed 2^{9r}");
  if (h.edge_count() == 0) throw PreconditionError("transference_step: empty hypergraph");
  const Rational km = Rational(k) * m;
  if (auto bad = is_ab_duality(h, mf, st.phi, Threshold(m), Threshold(km)))
    throw InternalError("transference_step: state is not an (m, km)-duality: " + bad->describe());

  TransferenceStep out;
  std::vector<bool> covered(mf.size(), false);
  for (const auto& u : st.witness) {
    std::size_t ej = 0;
    while (ej < h.edge_count() && !h.contains(ej, u)) ++ej;
    if (ej == h.edge_count()) throw PreconditionError("transference_step: witness vertex lies on no edge");
    Ball b{u.part, st.phi[ej], km, ball(mf, u.part, st.phi[ej], Threshold(km))};
    for (auto x : b.members) covered[x] = true;
    out.balls.push_back(std::move(b));
  }
  auto first_gap = std::find(covered.begin(), covered.end(), false);
  if (first_gap == covered.end()) {
    out.kind = TransferenceStep::Kind::ball_cover;
    return out;
  }
  out.kind = TransferenceStep::Kind::dual_growth;
  const std::size_t v = static_cast<std::size_t>(first_gap - covered.begin());
  out.uncovered = v;
  if (std::find(st.phi.begin(), st.phi.end(), v) != st.phi.end())
    throw InternalError("transference_step: uncovered point lies in the image of phi");
  out.checks.emplace_back("v not in Im(phi)");

  // m_t and f_t per part, then parts sorted by m_t (ties by part index).
  std::vector<Rational> mt(r);
  std::vector<std::size_t> ft(r, 0);
  for (std::size_t t = 0; t < r; ++t) {
    mt[t] = mf.d(t, st.phi[0], v);
    for (std::size_t f = 1; f < h.edge_count(); ++f)
      if (mf.d(t, st.phi[f], v) < mt[t]) {
        mt[t] = mf.d(t, st.phi[f], v);
        ft[t] = f;
      }
  }
  out.part_order.resize(r);
  std::iota(out.part_order.begin(), out.part_order.end(), std::size_t{0});
  std::stable_sort(out.part_order.begin(), out.part_order.end(), [&](auto a, auto b) { return mt[a] < mt[b]; });
  for (auto p : out.part_order) out.m_sorted.push_back(mt[p]);
  out.tp = find_t_prime(out.m_sorted, m, k, r);
  out.checks.insert(out.checks.end(),
                    {"m_{t'+1} > k^{1/3r} m", "m_{t'+1} > k^{1/3r} m_{t'}", "m_{t'} <= sqrt(k) m"});
  const Rational& mp = out.tp.m_prime;
  for (auto& c : check_step_chain(m, mp, k, r)) out.checks.push_back(std::move(c));

  // e': f_t's vertex in the first t' sorted parts, a fresh vertex elsewhere.
  out.grown = h;
  Edge e_new(r);
  for (std::size_t pos = 0; pos < r; ++pos) {
    const std::size_t t = out.part_order[pos];
    if (pos < out.tp.t_prime) {
      e_new[t] = h.edge(ft[t])[t];
    } else {
      auto name = fresh_name(out.grown, "u*" + std::to_string(t + 1));
      e_new[t] = out.grown.add_vertex(t, name).index;
      out.fresh.push_back(name);
    }
  }
  if (out.grown.has_edge(e_new)) throw InternalError("transference_step: e' is already an edge");
  out.grown.add_edge(e_new);
  out.grown_phi = st.phi;
  out.grown_phi.push_back(v);
  out.b_prime = Threshold(mp, k, 1, 4 * r);
  if (auto bad = is_ab_duality(out.grown, mf, out.grown_phi, Threshold(mp), out.b_prime))
    throw InternalError("transference_step: grown map is not an (m', k^{1/4r} m')-duality: " + bad->describe());
  out.checks.emplace_back("phi' is an (m', k^{1/4r} m')-duality");
  if (out.grown.covered_by(st.witness)) throw InternalError("transference_step: C still covers H + e'");
  out.checks.emplace_back("C does not cover H + e'");

  // The first earlier item, then the first relative, with a copy in H + e'.
  std::optional<HyperEmbedding> copy;
  const PartiteHypergraph* pattern = nullptr;
  const std::vector<VertexRef>* pattern_witness = nullptr;
  for (std::size_t j = 0; j < st.item && !copy; ++j)
    if ((copy = contains_copy(out.grown, seq.items[j].hypergraph, seq.mode, g))) {
      out.pattern_item = j;
      out.pattern_label = "item " + std::to_string(j + 1);
      pattern = &seq.items[j].hypergraph;
      pattern_witness = &seq.items[j].witness;
    }
  for (std::size_t j = 0; j < seq.relatives.size() && !copy; ++j)
    if ((copy = contains_copy(out.grown, seq.relatives[j], seq.mode, g))) {
      out.pattern_relative = j;
      out.pattern_label = "relative " + std::to_string(j + 1);
      pattern = &seq.relatives[j];
    }
  if (!copy)
    throw InternalError("transference_step: H + e' contains no earlier item or relative (item " +
                        std::to_string(st.item + 1) + " is not stable)");

  TransferenceState& nx = out.next;
  nx.hypergraph = detail::permute_parts(*pattern, copy->part_map);
  for (std::size_t f = 0; f < pattern->edge_count(); ++f) nx.phi.push_back(out.grown_phi[copy->edge_map[f]]);
  nx.part_perm = copy->part_map;
  nx.m = mp;
  nx.k = k;
  nx.history = st.history;
  if (pattern_witness) {
    nx.item = *out.pattern_item;
    nx.witness = detail::permute_witness(*pattern_witness, copy->part_map);
  }
  if (auto bad = is_ab_duality(nx.hypergraph, mf, nx.phi, Threshold(mp), out.b_prime))
    throw InternalError("transference_step: restricted map is not a duality: " + bad->describe());
  out.checks.emplace_back("restriction is an (m', k^{1/4r} m')-duality");

  if (out.pattern_relative) {
    if (!detail::is_matching_pattern(*pattern))
      throw InternalError("transference_step: landed in a relative that is not a matching");
    out.kind = TransferenceStep::Kind::premise_violation;
    for (auto x : nx.phi) out.independent.push_back(static_cast<std::uint32_t>(x));
    std::sort(out.independent.begin(), out.independent.end());
    for (std::size_t a = 0; a < out.independent.size(); ++a)
      for (std::size_t b = a + 1; b < out.independent.size(); ++b)
        for (std::size_t t = 0; t < r; ++t)
          if (mf.d(t, out.independent[a], out.independent[b]) <= 1)
            throw InternalError("transference_step: matching images are not sparse");
    out.checks.emplace_back("matching images pairwise > 1 apart");
  }
  return out;
}

/// Points no two of which are within distance 1 in any metric, of maximum
/// size; used to test the premise. Guarded to 64 points.
inline std::vector<std::uint32_t> sparse_subset(const MetricFamily& mf) {
  if (mf.size() > 64) throw GuardExceeded("premise check: more than 64 points");
  std::vector<std::uint64_t> adj(mf.size(), 0);
  for (std::size_t u = 0; u < mf.size(); ++u)
    for (std::size_t v = u + 1; v < mf.size(); ++v)
      for (std::size_t t = 0; t < mf.r(); ++t)
        if (mf.d(t, u, v) <= 1) {
          adj[u] |= 1ULL << v;
          adj[v] |= 1ULL << u;
          break;
        }
  std::uint64_t best = detail::IndependentSetSearch(std::move(adj)).run();
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < mf.size(); ++v)
    if (best >> v & 1ULL) out.push_back(v);
  return out;
}

struct BallCoverResult {
  std::vector<Ball> balls;
  std::vector<HistoryEntry> history;
  std::vector<TransferenceStep> steps;
  std::size_t steps_taken = 0;
};

/// Drives the engine from the single edge down the sequence until the balls
/// cover V. With `check_premise`, first verifies that no nu+1 points are
/// pairwise more than 1 apart in every metric.
inline BallCoverResult ball_cover(const MetricFamily& mf, const StableSequence& seq, const ParameterSchedule& sched,
                                  bool check_premise = true, const Guards& g = {}) {
  if (mf.size() == 0) return {};
  if (mf.r() != seq.r || sched.r != seq.r) throw PreconditionError("ball_cover: uniformity mismatch");
  if (sched.ell != seq.items.size()) throw PreconditionError("ball_cover: schedule length differs from sequence");
  if (check_premise) {
    auto sparse = sparse_subset(mf);
    if (sparse.size() > seq.nu) {
      sparse.resize(seq.nu + 1);
      throw PremiseViolation("premise violated: " + std::to_string(seq.nu + 1) + " points pairwise more than 1 apart",
                             std::move(sparse));
    }
  }
  const std::size_t last = seq.items.size() - 1;
  BallCoverResult res;
  auto st = initial_state(seq, sched.m_item(last), sched.k_item(last));
  while (true) {
    auto step = transference_step(st, seq, mf, g);
    ++res.steps_taken;
    if (step.kind == TransferenceStep::Kind::ball_cover) {
      if (step.balls.size() > seq.c) throw InternalError("ball_cover: more than c balls");
      res.balls = std::move(step.balls);
      res.history = st.history;
      res.steps.push_back(std::move(step));
      return res;
    }
    if (step.kind == TransferenceStep::Kind::premise_violation)
      throw PremiseViolation("independence hypothesis violated: the engine reached M_{r,nu+1}", step.independent);
    // Land on item j with parameters (m', k_j m').
    auto nx = std::move(step.next);
    const std::size_t j = nx.item;
    if (j >= st.item) throw InternalError("ball_cover: item index did not decrease");
    const Integer& kj = sched.k_item(j);
    if (cmp_power(kj, st.k, 1, 4 * sched.r) > 0) throw InternalError("ball_cover: k_j > k_i^{1/4r}");
    if (nx.m > Rational(sched.m_item(j))) throw InternalError("ball_cover: m' > m_j");
    nx.k = kj;
    if (auto bad = is_ab_duality(nx.hypergraph, mf, nx.phi, Threshold(nx.m), Threshold(Rational(kj) * nx.m)))
      throw InternalError("ball_cover: landing map is not an (m', k_j m')-duality: " + bad->describe());
    nx.history.push_back({j, nx.m, kj});
    step.next = TransferenceState{};
    res.steps.push_back(std::move(step));
    st = std::move(nx);
  }
}

}  // namespace ryser

#endif  // RYSER_TRANSFERENCE_HPP
