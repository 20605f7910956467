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

// ryser: command-line front end.
//
// Exit codes: 0 success, 1 bad input / failed verification / guard,
// 2 premise violation, 3 unsupported (r, alpha), 4 internal assertion.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ryser/ryser.hpp"

namespace {

using namespace ryser;

constexpr int kOk = 0, kFailed = 1, kPremise = 2, kUnsupported = 3, kInternal = 4;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t max_edges = Guards{}.max_edges;
  std::size_t max_vertices = Guards{}.max_vertices;
  std::string format = "json";

  Guards guards() const {
    Guards g;
    g.max_edges = max_edges;
    g.max_vertices = max_vertices;
    return g;
  }
};

Globals G;

void emit(const Json& j, const std::string& out = {}) {
  if (!out.empty()) {
    write_json_file(out, j);
    return;
  }
  if (G.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text: one "key: value" line per top-level field
  if (!j.is_object()) {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

std::vector<VertexRef> resolve(const PartiteHypergraph& h, const std::vector<std::string>& ids) {
  std::vector<VertexRef> out;
  for (const auto& id : ids) {
    auto v = h.find(id);
    if (!v) throw InvalidInput("'" + id + "' is not a vertex");
    out.push_back(*v);
  }
  return out;
}

CopyMode parse_copy_mode(const std::string& s) {
  if (s == "part_permuting" || s == "part-permuting") return CopyMode::part_permuting;
  if (s == "part_respecting" || s == "part-respecting") return CopyMode::part_respecting;
  throw InvalidInput("unknown copy mode '" + s + "'");
}

Json independent_set_json(const ColoredMultigraph& g, const PremiseViolation& e) {
  Json pts = Json::array();
  for (auto v : e.points) pts.push_back(g.name(v));
  return {{"status", "premise_violation"},
          {"message", e.what()},
          {"independent_set", pts},
          {"verified", is_independent_set(g, e.points)}};
}

Json cover_json(const ColoredMultigraph& g, const TreeCover& tc) {
  Json j = certificate_to_json(g, tc);
  auto problem = validate_tree_cover(g, tc);
  j["status"] = "cover";
  j["validation"] = problem ? Json(*problem) : Json("ok");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic tree covers from Ryser-stable sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", G.seed, "Seed for generated instances");
  app.add_option("--guard-max-edges", G.max_edges, "Edge cap for exact matching and cover");
  app.add_option("--guard-max-vertices", G.max_vertices, "Vertex cap for exact independence number");
  app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<int()> action;
  std::string out;

  // convert
  auto* convert = app.add_subcommand("convert", "Hypergraph <-> colored multigraph");
  std::string conv_h, conv_g;
  convert->add_option("--hypergraph", conv_h, "Hypergraph JSON to turn into a colored graph");
  convert->add_option("--graph", conv_g, "Colored graph JSON to turn into a hypergraph");
  convert->add_option("--out", out, "Write result here");
  convert->callback([&] {
    action = [&] {
      if (conv_h.empty() == conv_g.empty()) throw InvalidInput("convert: give exactly one of --hypergraph, --graph");
      if (!conv_h.empty()) {
        emit(graph_to_json(hyper_to_colored(hypergraph_from_json(read_json_file(conv_h)))), out);
      } else {
        auto g = graph_from_json(read_json_file(conv_g));
        auto ch = colored_to_hyper(g);
        Json j = hypergraph_to_json(ch.hypergraph);
        j["edge_of_vertex"] = ch.edge_of_vertex;
        emit(j, out);
      }
      return kOk;
    };
  });

  // metric
  auto* metric = app.add_subcommand("metric", "Graph metrics, axiom check, balls");
  std::string met_g, met_m;
  std::size_t ball_color = 0;
  std::string ball_center, ball_radius;
  metric->add_option("--graph", met_g, "Colored graph JSON (metrics built from it)");
  metric->add_option("--metrics", met_m, "Metric family JSON to check");
  metric->add_option("--ball-color", ball_color, "Metric index (1-based) for --ball-center");
  metric->add_option("--ball-center", ball_center, "Report the ball around this vertex");
  metric->add_option("--ball-radius", ball_radius, "Exact ball radius");
  metric->add_option("--out", out, "Write result here");
  metric->callback([&] {
    action = [&] {
      if (met_g.empty() == met_m.empty()) throw InvalidInput("metric: give exactly one of --graph, --metrics");
      MetricFamily mf =
          !met_g.empty() ? graph_metric_family(graph_from_json(read_json_file(met_g))) : metrics_from_json(read_json_file(met_m));
      Json checks = Json::array();
      bool all = true;
      for (std::size_t i = 0; i < mf.dists.size(); ++i) {
        auto bad = is_metric(mf.dists[i]);
        all = all && !bad;
        checks.push_back({{"metric", i + 1}, {"is_metric", !bad}, {"violation", bad ? Json(bad->describe(&mf.vertices)) : Json(nullptr)}});
      }
      Json j = metrics_to_json(mf);
      j["checks"] = checks;
      if (!ball_center.empty()) {
        auto it = std::find(mf.vertices.begin(), mf.vertices.end(), ball_center);
        if (it == mf.vertices.end()) throw InvalidInput("ball center is not a point");
        if (ball_color < 1 || ball_color > mf.r()) throw InvalidInput("--ball-color must be in 1..r");
        auto members = ball(mf, ball_color - 1, static_cast<std::size_t>(it - mf.vertices.begin()),
                            Threshold(parse_rational(ball_radius.empty() ? "0" : ball_radius)));
        Json names = Json::array();
        for (auto v : members) names.push_back(mf.vertices[v]);
        j["ball"] = names;
      }
      emit(j, out);
      return all ? kOk : kFailed;
    };
  });

  // find-dual
  auto* fdual = app.add_subcommand("find-dual", "Search for or check an (a,b)-duality");
  std::string fd_h, fd_m, fd_g, fd_a = "1", fd_b = "2", fd_check;
  fdual->add_option("--hypergraph", fd_h, "Hypergraph JSON")->required();
  fdual->add_option("--metrics", fd_m, "Metric family JSON");
  fdual->add_option("--graph", fd_g, "Colored graph JSON (graph metrics)");
  fdual->add_option("-a,--a", fd_a, "Parameter a (exact, or c*k^(p/q))");
  fdual->add_option("-b,--b", fd_b, "Parameter b (exact, or c*k^(p/q))");
  fdual->add_option("--check", fd_check, "Validate this embedding JSON instead of searching");
  fdual->add_option("--out", out, "Write result here");
  fdual->callback([&] {
    action = [&] {
      if (fd_m.empty() == fd_g.empty()) throw InvalidInput("find-dual: give exactly one of --metrics, --graph");
      auto h = hypergraph_from_json(read_json_file(fd_h));
      MetricFamily mf =
          !fd_m.empty() ? metrics_from_json(read_json_file(fd_m)) : graph_metric_family(graph_from_json(read_json_file(fd_g)));
      if (!fd_check.empty()) {
        auto d = embedding_from_json(read_json_file(fd_check), h, mf);
        auto bad = is_ab_duality(d);
        emit({{"valid", !bad}, {"violation", bad ? Json(bad->describe()) : Json(nullptr)}}, out);
        return bad ? kFailed : kOk;
      }
      Guards g = G.guards();
      auto d = find_ab_dual(h, mf, threshold_from_json(Json(fd_a)), threshold_from_json(Json(fd_b)), g);
      emit({{"found", d.has_value()}, {"embedding", d ? embedding_to_json(*d) : Json(nullptr)}}, out);
      return kOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Certify a stable sequence or re-check a cover certificate");
  std::string v_seq, v_cert, v_graph, v_mode;
  verify->add_option("--sequence", v_seq, "Stable sequence JSON");
  verify->add_option("--certificate", v_cert, "Cover certificate JSON (needs --graph)");
  verify->add_option("--graph", v_graph, "Colored graph the certificate refers to");
  verify->add_option("--copy-mode", v_mode, "part_permuting or part_respecting (overrides the file)");
  verify->add_option("--out", out, "Write the sequence with transcripts here");
  verify->callback([&] {
    action = [&] {
      if (!v_cert.empty()) {
        if (v_graph.empty()) throw InvalidInput("verify --certificate needs --graph");
        auto g = graph_from_json(read_json_file(v_graph));
        auto tc = certificate_from_json(read_json_file(v_cert), g);
        auto bad = validate_tree_cover(g, tc);
        emit({{"valid", !bad}, {"problem", bad ? Json(*bad) : Json(nullptr)}, {"trees", tc.trees.size()}}, out);
        return bad ? kFailed : kOk;
      }
      if (v_seq.empty()) throw InvalidInput("verify: give --sequence or --certificate");
      auto seq = sequence_from_json(read_json_file(v_seq));
      if (!v_mode.empty()) seq.mode = parse_copy_mode(v_mode);
      auto cert = verify_sequence(seq, G.guards());
      Json j = sequence_to_json(seq);
      j["transcripts"] = certification_to_json(cert);
      emit(j, out);
      return cert.certified ? kOk : kFailed;
    };
  });

  // gen-sequence
  auto* gen = app.add_subcommand("gen-sequence", "Generate and certify the basic-hypergraph sequence");
  std::size_t g_r = 2, g_nu = 1, g_vmax = GenerationCaps{}.vertex_max;
  std::optional<std::size_t> g_petals, g_bmax;
  gen->add_option("--r", g_r, "Uniformity")->required();
  gen->add_option("--nu", g_nu, "Matching number")->required();
  gen->add_option("--petals", g_petals, "Petals per sunflower (default (nu+1)r)");
  gen->add_option("--bmax", g_bmax, "Largest residue edge count");
  gen->add_option("--vertex-max", g_vmax, "Vertex cap per shape");
  gen->add_option("--out", out, "Write the sequence here");
  gen->callback([&] {
    action = [&] {
      GenerationCaps caps;
      caps.petals = g_petals;
      caps.b_max = g_bmax;
      caps.vertex_max = g_vmax;
      auto res = generate_basic_sequence(g_r, g_nu, caps, CopyMode::part_permuting, G.guards());
      Json j = sequence_to_json(res.sequence);
      j["transcripts"] = certification_to_json(res.certification);
      Json levels = Json::array();
      for (auto [a, b] : res.levels) levels.push_back({a, b});
      j["levels"] = levels;
      j["length_bound_ok"] = res.length_bound_ok;
      emit(j, out);
      return res.certification.certified ? kOk : kFailed;
    };
  });

  // cover / end-to-end
  auto* cover = app.add_subcommand("cover", "Tree cover from a graph and a stable sequence");
  auto* e2e = app.add_subcommand("end-to-end", "Tree cover using the bundled sequence for (r, alpha)");
  std::string c_graph, c_seq, c_sched = "paper";
  for (auto* sc : {cover, e2e}) {
    sc->add_option("--graph", c_graph, "Colored graph JSON")->required();
    sc->add_option("--schedule", c_sched, "paper or adaptive")->check(CLI::IsMember({"paper", "adaptive"}));
    sc->add_option("--out", out, "Write the certificate here");
  }
  cover->add_option("--sequence", c_seq, "Stable sequence JSON (default: bundled for (r, alpha))");
  auto run_cover = [&](bool use_file) {
    auto g = graph_from_json(read_json_file(c_graph));
    const auto mode = parse_schedule_mode(c_sched);
    try {
      TreeCover tc;
      if (use_file && !c_seq.empty()) {
        auto seq = sequence_from_json(read_json_file(c_seq));
        auto cert = verify_sequence(seq, G.guards());
        if (!cert.certified) throw InvalidInput("sequence does not certify: " + cert.failure->describe());
        tc = tree_cover(g, seq, cached_schedule(seq.r, seq.items.size(), mode), G.guards());
      } else {
        tc = end_to_end(g, mode, G.guards());
      }
      emit(cover_json(g, tc), out);
      return kOk;
    } catch (const PremiseViolation& e) {
      emit(independent_set_json(g, e), out);
      return kPremise;
    }
  };
  cover->callback([&] { action = [&] { return run_cover(true); }; });
  e2e->callback([&] { action = [&] { return run_cover(false); }; });

  // experiment
  auto* exp = app.add_subcommand("experiment", "Seeded batch of end-to-end runs (NDJSON)");
  ExperimentConfig cfg;
  std::string x_kind = "complete-random-coloring", x_sched = "paper";
  exp->add_option("--r", cfg.r, "Number of colors");
  exp->add_option("--nu", cfg.nu, "Clique count for clique-union");
  exp->add_option("--n-min", cfg.n_min, "Smallest n");
  exp->add_option("--n-max", cfg.n_max, "Largest n");
  exp->add_option("--kind", x_kind, "complete-random-coloring, clique-union or file");
  exp->add_option("--trials", cfg.trials, "Number of trials");
  exp->add_option("--schedule", x_sched, "paper or adaptive")->check(CLI::IsMember({"paper", "adaptive"}));
  exp->add_option("--output", cfg.output, "NDJSON report path (default stdout)");
  exp->add_option("--graph", cfg.graph_path, "Graph for kind 'file'");
  exp->add_option("--cross-prob", cfg.cross_edge_probability, "Cross-edge probability for clique-union");
  exp->add_option("--workers", cfg.workers, "Concurrent trials (0 = all cores)");
  exp->callback([&] {
    action = [&] {
      cfg.seed = G.seed;
      cfg.kind = parse_instance_kind(x_kind);
      cfg.mode = parse_schedule_mode(x_sched);
      cfg.guards = G.guards();
      auto rep = run_experiment(cfg);
      if (cfg.output.empty())
        for (const auto& t : rep.trials) std::cout << t.to_json().dump() << "\n";
      if (!rep.trials.empty()) std::cout << rep.summary().dump() << "\n";
      return rep.all_valid() ? kOk : kFailed;
    };
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force reference answers");
  std::string o_kind, o_h, o_g, o_pat, o_wit, o_met, o_a = "1", o_b = "2";
  std::size_t o_depth = 2;
  orc->add_option("kind", o_kind, "matching, cover, independence, components, copy, stability or dual")
      ->required()
      ->check(CLI::IsMember({"matching", "cover", "independence", "components", "copy", "stability", "dual"}));
  orc->add_option("--hypergraph", o_h, "Hypergraph JSON");
  orc->add_option("--graph", o_g, "Colored graph JSON");
  orc->add_option("--pattern", o_pat, "Pattern hypergraph JSON (copy, stability; repeatable via commas)");
  orc->add_option("--witness", o_wit, "Comma-separated cover vertex ids (stability)");
  orc->add_option("--metrics", o_met, "Metric family JSON (dual)");
  orc->add_option("--a", o_a, "Parameter a (dual)");
  orc->add_option("--b", o_b, "Parameter b (dual)");
  orc->add_option("--depth", o_depth, "Superset depth (stability, <= 2)");
  orc->callback([&] {
    action = [&] {
      auto need = [](const std::string& s, const char* flag) {
        if (s.empty()) throw InvalidInput(std::string("oracle: needs ") + flag);
        return read_json_file(s);
      };
      Json j{{"oracle", o_kind}};
      if (o_kind == "matching") j["value"] = oracle_matching_number(hypergraph_from_json(need(o_h, "--hypergraph")));
      if (o_kind == "cover") j["value"] = oracle_cover_number(hypergraph_from_json(need(o_h, "--hypergraph")));
      if (o_kind == "independence") j["value"] = oracle_independence_number(graph_from_json(need(o_g, "--graph")));
      if (o_kind == "components") {
        Guards g = G.guards();
        j["value"] = oracle_min_component_cover(graph_from_json(need(o_g, "--graph")), g);
      }
      if (o_kind == "copy")
        j["value"] = oracle_contains_copy(hypergraph_from_json(need(o_h, "--hypergraph")),
                                          hypergraph_from_json(need(o_pat, "--pattern")));
      if (o_kind == "stability") {
        auto h = hypergraph_from_json(need(o_h, "--hypergraph"));
        std::vector<PartiteHypergraph> pats;
        for (const auto& p : split_ids(o_pat)) pats.push_back(hypergraph_from_json(read_json_file(p)));
        auto c = resolve(h, split_ids(o_wit));
        auto v = oracle_superset_stability(h, c, pats, o_depth);
        j["value"] = v.ok;
        if (v.failing) j["failing"] = hypergraph_to_json(*v.failing);
      }
      if (o_kind == "dual") {
        auto h = hypergraph_from_json(need(o_h, "--hypergraph"));
        auto mf = metrics_from_json(need(o_met, "--metrics"));
        j["value"] = oracle_has_dual(h, mf, parse_rational(o_a), parse_rational(o_b));
      }
      emit(j);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Unsupported& e) {
    std::cerr << e.what() << "\n";
    return kUnsupported;
  } catch (const PremiseViolation& e) {
    std::cerr << "premise violation: " << e.what() << "\n";
    return kPremise;
  } catch (const MatchingHypothesisError& e) {
    std::cerr << e.what() << "\n";
    return kPremise;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
