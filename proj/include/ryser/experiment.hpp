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

// Seeded instance generation and batch runs. Every trial's certificate is
// written to disk, read back and re-validated; nothing is trusted from
// memory. Reports are line-delimited JSON, one line per trial in trial
// order followed by one summary line.

#ifndef RYSER_EXPERIMENT_HPP
#define RYSER_EXPERIMENT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "ryser/io.hpp"
#include "ryser/oracles.hpp"
#include "ryser/tree_cover.hpp"

namespace ryser {

enum class InstanceKind { complete_random_coloring, clique_union, file };

inline std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::complete_random_coloring: return "complete-random-coloring";
    case InstanceKind::clique_union: return "clique-union";
    case InstanceKind::file: return "file";
  }
  return "?";
}

inline InstanceKind parse_instance_kind(const std::string& s) {
  if (s == "complete-random-coloring") return InstanceKind::complete_random_coloring;
  if (s == "clique-union") return InstanceKind::clique_union;
  if (s == "file") return InstanceKind::file;
  throw InvalidInput("unknown instance kind '" + s + "'");
}

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t r = 2;
  std::size_t nu = 1;
  std::size_t n_min = 5, n_max = 20;
  InstanceKind kind = InstanceKind::complete_random_coloring;
  std::size_t trials = 1;
  ScheduleMode mode = ScheduleMode::paper;
  std::string output;      // NDJSON report path; empty means none
  std::string graph_path;  // for kind == file
  double cross_edge_probability = 0.0;  // clique-union only
  std::size_t workers = 0;              // 0 = hardware concurrency
  Guards guards;
};

inline void validate_config(const ExperimentConfig& cfg) {
  if (cfg.r < 2) throw InvalidInput("experiment: r must be >= 2");
  if (cfg.n_min > cfg.n_max) throw InvalidInput("experiment: n range is empty");
  if (cfg.kind == InstanceKind::clique_union && cfg.nu < 1) throw InvalidInput("experiment: clique-union needs nu >= 1");
  if (cfg.kind == InstanceKind::file && cfg.graph_path.empty()) throw InvalidInput("experiment: kind 'file' needs a graph path");
  if (cfg.cross_edge_probability < 0 || cfg.cross_edge_probability > 1)
    throw InvalidInput("experiment: cross-edge probability must be in [0, 1]");
}

/// Trial t of the configuration. The stream depends only on (seed, t).
inline ColoredMultigraph gen_instance(const ExperimentConfig& cfg, std::size_t trial = 0) {
  validate_config(cfg);
  if (cfg.kind == InstanceKind::file) return graph_from_json(read_json_file(cfg.graph_path));
  std::seed_seq ss{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                   static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(ss);
  const auto n = std::uniform_int_distribution<std::size_t>(cfg.n_min, cfg.n_max)(rng);
  std::uniform_int_distribution<std::uint32_t> color(0, static_cast<std::uint32_t>(cfg.r - 1));
  ColoredMultigraph g(cfg.r);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  if (cfg.kind == InstanceKind::complete_random_coloring) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v, color(rng));
    return g;
  }
  // Clique union: the first nu vertices seed the cliques, the rest land
  // uniformly, so no clique is empty once n >= nu.
  std::vector<std::size_t> clique(n);
  std::uniform_int_distribution<std::size_t> pick(0, cfg.nu - 1);
  for (std::size_t i = 0; i < n; ++i) clique[i] = i < cfg.nu ? i : pick(rng);
  std::bernoulli_distribution cross(cfg.cross_edge_probability);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const bool same = clique[u] == clique[v];
      if (same || cross(rng)) g.add_edge(u, v, color(rng));
    }
  return g;
}

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t n = 0;
  std::optional<std::size_t> alpha;
  std::string status;  // "cover", "premise_violation", "unsupported", "guard", "internal_error", "error"
  std::string message;
  std::size_t count = 0;
  std::vector<std::size_t> diameters;
  std::optional<std::size_t> oracle_count;
  std::vector<std::string> independent_set;
  bool valid = false;
  double runtime_ms = 0;

  Json to_json() const {
    Json j{{"trial", trial}, {"n", n}, {"status", status}, {"valid", valid}, {"runtime_ms", runtime_ms}};
    j["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
    if (status == "cover") {
      j["count"] = count;
      j["diameters"] = diameters;
      j["oracle_count"] = oracle_count ? Json(*oracle_count) : Json(nullptr);
    }
    if (!independent_set.empty()) j["independent_set"] = independent_set;
    if (!message.empty()) j["message"] = message;
    return j;
  }
};

struct ExperimentReport {
  std::vector<TrialRecord> trials;

  Json summary() const {
    std::size_t covers = 0, valid = 0, violations = 0, max_count = 0, max_diam = 0, oracle_gaps = 0;
    for (const auto& t : trials) {
      if (t.status == "cover") {
        ++covers;
        max_count = std::max(max_count, t.count);
        for (auto d : t.diameters) max_diam = std::max(max_diam, d);
        if (t.oracle_count && *t.oracle_count > t.count) ++oracle_gaps;
      }
      if (t.status == "premise_violation") ++violations;
      if (t.valid) ++valid;
    }
    return {{"summary", true},        {"trials", trials.size()},       {"covers", covers},
            {"valid", valid},         {"premise_violations", violations}, {"max_count", max_count},
            {"max_diameter", max_diam}, {"oracle_below_count", oracle_gaps}};
  }

  bool all_valid() const {
    return std::all_of(trials.begin(), trials.end(), [](const TrialRecord& t) { return t.valid; });
  }
};

namespace detail {

inline std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("ryser-cert-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

/// Writes the certificate, reads it back and validates the copy.
inline std::optional<std::string> revalidate_from_disk(const ColoredMultigraph& g, const TreeCover& tc,
                                                       const std::string& tag) {
  const auto path = scratch_dir() / ("trial-" + tag + ".json");
  write_json_file(path.string(), certificate_to_json(g, tc));
  auto back = certificate_from_json(read_json_file(path.string()), g);
  std::filesystem::remove(path);
  return validate_tree_cover(g, back);
}

inline TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto g = gen_instance(cfg, trial);
    rec.n = g.vertex_count();
    rec.alpha = independence_number(g, cfg.guards);
    try {
      auto tc = end_to_end(g, cfg.mode, cfg.guards);
      rec.status = "cover";
      rec.count = tc.trees.size();
      for (const auto& t : tc.trees) rec.diameters.push_back(t.measured_diameter);
      auto problem = revalidate_from_disk(g, tc, std::to_string(cfg.seed) + "-" + std::to_string(trial));
      rec.valid = !problem;
      if (problem) rec.message = *problem;
      if (tc.trees.size() > (g.r() - 1) * *rec.alpha) {
        rec.valid = false;
        rec.message = "tree count exceeds (r-1)alpha";
      }
      try {
        rec.oracle_count = oracle_min_component_cover(g, cfg.guards);
        if (*rec.oracle_count > rec.count) {
          rec.valid = false;
          rec.message = "tree count below the exact optimum";
        }
      } catch (const GuardExceeded&) {
      }
    } catch (const PremiseViolation& e) {
      rec.status = "premise_violation";
      rec.message = e.what();
      for (auto v : e.points) rec.independent_set.push_back(g.name(v));
      rec.valid = is_independent_set(g, e.points);
    }
  } catch (const Unsupported& e) {
    rec.status = "unsupported";
    rec.message = e.what();
  } catch (const GuardExceeded& e) {
    rec.status = "guard";
    rec.message = e.what();
  } catch (const InternalError& e) {
    rec.status = "internal_error";
    rec.message = e.what();
  } catch (const Error& e) {
    rec.status = "error";
    rec.message = e.what();
  }
  rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace detail

/// Runs every trial (concurrently, up to the worker cap) and merges records
/// in trial order. Engine errors are recorded per trial; the batch goes on.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentReport rep;
  std::size_t workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  rep.trials.resize(cfg.trials);
  for (std::size_t start = 0; start < cfg.trials; start += workers) {
    const std::size_t stop = std::min(cfg.trials, start + workers);
    std::vector<std::future<TrialRecord>> batch;
    for (std::size_t t = start; t < stop; ++t)
      batch.push_back(std::async(std::launch::async, detail::run_trial, std::cref(cfg), t));
    for (std::size_t t = start; t < stop; ++t) rep.trials[t] = batch[t - start].get();
  }
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) throw InvalidInput("cannot write '" + cfg.output + "'");
    for (const auto& t : rep.trials) out << t.to_json().dump() << "\n";
    if (!rep.trials.empty()) out << rep.summary().dump() << "\n";
  }
  return rep;
}

}  // namespace ryser

#endif  // RYSER_EXPERIMENT_HPP
