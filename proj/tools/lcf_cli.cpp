// lcf: rank, rigidity and balancedness toolkit for looped simple
// graphs (linearly constrained frameworks).
//
// Graph JSON comes in on stdin or via --input; results go to stdout as
// JSON. Exit codes: 0 = verdict computed, 1 = counterexample found
// (verify/sweep), 2 = usage error.

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcf/balance.hpp"
#include "lcf/constructions.hpp"
#include "lcf/enumerate.hpp"
#include "lcf/graph.hpp"
#include "lcf/json_io.hpp"
#include "lcf/matroid_rank.hpp"
#include "lcf/rigidity.hpp"
#include "lcf/sparsity.hpp"
#include "lcf/verify.hpp"

namespace {

using lcf::json;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  if (const char* env = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

lcf::LoopedSimpleGraph read_graph(const std::string& input_path) {
  std::string text;
  if (input_path.empty() || input_path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input_path);
    if (!in) throw lcf::ParamsInvalid("cannot open input file " + input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return lcf::graph_from_json_text(text);
}

json verdict_json(const lcf::BalancednessVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["witness_cut"] = v.witness_cut ? json(*v.witness_cut) : json(nullptr);
  j["witness_component"] =
      v.witness_component ? json(*v.witness_component) : json(nullptr);
  j["deficiency"] = v.deficiency ? json(*v.deficiency) : json(nullptr);
  return j;
}

json cover_json(const lcf::LoopedSimpleGraph& g, const lcf::Cover& c) {
  json j;
  j["X0"] = c.X0;
  j["parts"] = c.parts;
  j["T"] = lcf::elements_to_json(g, c.excluded);
  return j;
}

json rank_report_json(const lcf::LoopedSimpleGraph& g,
                      const lcf::RankReport& r) {
  json j;
  j["rank"] = r.rank;
  j["method"] = r.method == lcf::RankMethod::kMatrixOracle ? "matrix-oracle"
                                                           : "cover-formula";
  j["trials"] = r.trials;
  j["modulus_bits"] = r.modulus_bits;
  j["certificate"] =
      r.certificate ? cover_json(g, *r.certificate) : json(nullptr);
  return j;
}

json element_json(const lcf::LoopedSimpleGraph& g, const lcf::Element& e) {
  return lcf::elements_to_json(g, {e});
}

json run_json(const lcf::VerificationRun& run) {
  json j;
  j["theorem"] = run.theorem;
  j["seed"] = run.seed;
  j["requested_samples"] = run.requested_samples;
  j["instances_checked"] = run.instances_checked;
  j["conclusion_checks"] = run.conclusion_checks;
  j["sampler_attempts"] = run.sampler_attempts;
  j["budget_exhausted"] = run.budget_exhausted;
  j["wall_seconds"] = run.wall_seconds;
  j["pass"] = run.all_pass();
  j["counterexamples"] = json::array();
  for (const auto& ce : run.counterexamples) {
    json b;
    b["graph"] = lcf::graph_to_json(ce.graph);
    b["F"] = lcf::elements_to_json(ce.graph, ce.f_set);
    b["d"] = ce.d;
    b["t"] = ce.t;
    b["note"] = ce.note;
    j["counterexamples"].push_back(b);
  }
  return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linearly constrained framework rigidity toolkit"};
  app.require_subcommand(1);

  std::string input_path;
  app.add_option("--input", input_path,
                 "graph JSON file (default: stdin)")
      ->configurable(false);

  // generate
  auto* generate = app.add_subcommand("generate", "emit a named graph family");
  std::string family;
  int gen_k = 3, gen_t = 3, gen_s = 1;
  generate->add_option("--family", family,
                       "Gk|Ht|Tks|Gks|fig1G|fig1H|fig2G|fig2H|fig2K")
      ->required();
  generate->add_option("--k", gen_k, "cycle length / branching parameter");
  generate->add_option("--t", gen_t, "clique parameter for Ht");
  generate->add_option("--s", gen_s, "depth parameter for Tks/Gks");

  // balanced
  auto* balanced = app.add_subcommand("balanced", "balancedness predicates");
  std::string kind;
  int bal_k = 0;
  std::uint64_t bal_budget = env_u64("LCF_BALANCE_BUDGET",
                                     lcf::kDefaultBalanceBudget);
  balanced->add_option("--kind", kind, "k|weak|essential")->required();
  balanced->add_option("--k", bal_k, "balance parameter")->required();
  balanced->add_option("--budget", bal_budget, "(T, component) check budget");

  // rank / rigid / redundant / global2
  auto* rank_cmd = app.add_subcommand("rank", "randomized generic rank");
  auto* rigid_cmd = app.add_subcommand("rigid", "L_d-rigidity");
  auto* redundant_cmd =
      app.add_subcommand("redundant", "redundant L_d-rigidity");
  auto* global2_cmd =
      app.add_subcommand("global2", "global L_2-rigidity characterisation");
  int dim = 2;
  int trials = lcf::default_trials();
  std::uint64_t seed = lcf::kDefaultSeed;
  for (auto* cmd : {rank_cmd, rigid_cmd, redundant_cmd}) {
    cmd->add_option("-d,--dim", dim, "dimension")->required();
    cmd->add_option("--trials", trials, "rank trials");
    cmd->add_option("--seed", seed, "rng seed");
  }
  global2_cmd->add_option("--trials", trials, "rank trials");
  global2_cmd->add_option("--seed", seed, "rng seed");

  // sparse / tight-witness / dtight-search
  auto* sparse_cmd = app.add_subcommand("sparse", "t-sparsity pebble game");
  int sparse_t = 1;
  sparse_cmd->add_option("-t,--t", sparse_t, "sparsity parameter")->required();

  auto* witness_cmd = app.add_subcommand(
      "tight-witness", "t-tight witness on 2t looped vertices");
  int witness_t = 1;
  witness_cmd->add_option("-t,--t", witness_t, "tightness parameter")
      ->required();

  auto* dtight_cmd = app.add_subcommand(
      "dtight-search", "spanning d-tight K_{d+2}-free subgraph search");
  int dtight_d = 2;
  std::uint64_t dtight_budget = 20'000'000;
  dtight_cmd->add_option("-d,--dim", dtight_d, "dimension")->required();
  dtight_cmd->add_option("--budget", dtight_budget, "search node budget");

  // cover-rank / thin-value
  auto* cover_cmd =
      app.add_subcommand("cover-rank", "combinatorial rank of G^{[d-t]}");
  int cover_d = 2, cover_t = 1;
  cover_cmd->add_option("-d,--dim", cover_d, "dimension")->required();
  cover_cmd->add_option("-t,--t", cover_t, "count parameter")->required();

  auto* thin_cmd = app.add_subcommand(
      "thin-value", "value of an admissible 1-thin cover (d = 2)");
  std::string cover_path;
  thin_cmd->add_option("--cover", cover_path, "cover JSON file")->required();

  // verify / sweep
  auto* verify_cmd =
      app.add_subcommand("verify", "theorem verification (sampled)");
  std::string theorem;
  int v_d = 2, v_t = 1, v_nmax = 7, v_samples = 30, v_fcap = 200;
  std::uint64_t v_seed = lcf::kDefaultSeed;
  verify_cmd->add_option("--theorem", theorem, "d_geq2|weak6|main")
      ->required();
  verify_cmd->add_option("-d,--dim", v_d, "dimension (d_geq2)");
  verify_cmd->add_option("-t,--t", v_t, "count parameter (d_geq2)");
  verify_cmd->add_option("--nmax", v_nmax, "max vertex count");
  verify_cmd->add_option("--samples", v_samples, "hypothesis-satisfying samples");
  verify_cmd->add_option("--seed", v_seed, "rng seed");
  verify_cmd->add_option("--fcap", v_fcap, "max F sets per instance");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "exhaustive cross-oracle sweep (cover formula vs matrix)");
  int s_d = 2, s_t = 1, s_nmax = 5, s_trials = lcf::default_trials();
  std::uint64_t s_seed = lcf::kDefaultSeed;
  sweep_cmd->add_option("-d,--dim", s_d, "dimension")->required();
  sweep_cmd->add_option("-t,--t", s_t, "count parameter")->required();
  sweep_cmd->add_option("--nmax", s_nmax, "max vertex count");
  sweep_cmd->add_option("--trials", s_trials, "rank trials");
  sweep_cmd->add_option("--seed", s_seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (generate->parsed()) {
      lcf::LoopedSimpleGraph g;
      if (family == "Gk") g = lcf::gen_Gk(gen_k);
      else if (family == "Ht") g = lcf::gen_Ht(gen_t);
      else if (family == "Tks") g = lcf::gen_Tks(gen_k, gen_s);
      else if (family == "Gks") g = lcf::gen_Gks(gen_k, gen_s);
      else {
        auto figs = lcf::gen_fig_graphs();
        auto it = figs.find(family);
        if (it == figs.end())
          throw lcf::ParamsInvalid("unknown family " + family);
        g = it->second;
      }
      emit(lcf::graph_to_json(g));
      return 0;
    }

    if (balanced->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      lcf::BalancednessVerdict v;
      if (kind == "k") v = lcf::is_k_balanced(g, bal_k, bal_budget);
      else if (kind == "weak") v = lcf::is_weakly_k_balanced(g, bal_k, bal_budget);
      else if (kind == "essential")
        v = lcf::is_essentially_k_balanced(g, bal_k, bal_budget);
      else throw lcf::ParamsInvalid("unknown kind " + kind);
      json j = verdict_json(v);
      j["kind"] = kind;
      j["k"] = bal_k;
      emit(j);
      return 0;
    }

    if (rank_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      emit(rank_report_json(g, lcf::generic_rank(g, dim, trials, seed)));
      return 0;
    }

    if (rigid_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      lcf::RankReport report;
      bool rigid = lcf::is_Ld_rigid(g, dim, &report, trials, seed);
      json j;
      j["rigid"] = rigid;
      j["rank"] = report.rank;
      j["required"] = dim * g.vertex_count();
      emit(j);
      return 0;
    }

    if (redundant_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      auto result = lcf::is_redundantly_Ld_rigid(g, dim, trials, seed);
      json j;
      j["redundant"] = result.redundant;
      j["failing_element"] = result.failing_element
                                 ? element_json(g, *result.failing_element)
                                 : json(nullptr);
      emit(j);
      return 0;
    }

    if (global2_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      auto diag = lcf::is_globally_L2_rigid_char(g, trials, seed);
      json j;
      j["globally_rigid"] = diag.globally_rigid;
      j["components"] = json::array();
      for (std::size_t i = 0; i < diag.components.size(); ++i) {
        json c;
        c["vertices"] = diag.components[i];
        c["ok"] = static_cast<bool>(diag.component_ok[i]);
        j["components"].push_back(c);
      }
      j["failing_pair"] = diag.failing_pair
                              ? json({(*diag.failing_pair)[0],
                                      (*diag.failing_pair)[1]})
                              : json(nullptr);
      j["loopless_component"] = diag.loopless_component
                                    ? json(*diag.loopless_component)
                                    : json(nullptr);
      emit(j);
      return 0;
    }

    if (sparse_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      auto cert = lcf::is_t_sparse(g, sparse_t);
      json j;
      j["sparse"] = cert.sparse;
      j["tight"] = cert.sparse &&
                   g.element_count() == sparse_t * g.vertex_count();
      j["violating_set"] =
          cert.violating_set ? json(*cert.violating_set) : json(nullptr);
      emit(j);
      return 0;
    }

    if (witness_cmd->parsed()) {
      std::vector<lcf::VertexId> S(2 * witness_t);
      std::iota(S.begin(), S.end(), 0);
      emit(lcf::graph_to_json(lcf::build_t_tight_witness(S, witness_t)));
      return 0;
    }

    if (dtight_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      auto sub = lcf::find_spanning_d_tight_Kd2_free(g, dtight_d, dtight_budget);
      json j;
      j["found"] = sub.has_value();
      j["subgraph"] = sub ? lcf::graph_to_json(*sub) : json(nullptr);
      emit(j);
      return 0;
    }

    if (cover_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      emit(rank_report_json(g, lcf::rank_by_cover(g, cover_d, cover_t)));
      return 0;
    }

    if (thin_cmd->parsed()) {
      lcf::LoopedSimpleGraph g = read_graph(input_path);
      std::ifstream in(cover_path);
      if (!in) throw lcf::ParamsInvalid("cannot open cover file " + cover_path);
      json cj = json::parse(in);
      lcf::ThinCover2D cover;
      cover.X0 = cj.value("X0", std::vector<int>{});
      for (const auto& p : cj.value("parts", json::array()))
        cover.parts.push_back(p.get<std::vector<int>>());
      for (const auto& i : cj.value("Lprime", json::array())) {
        std::size_t idx = i.get<std::size_t>();
        if (idx >= g.loops().size())
          throw lcf::ParamsInvalid("Lprime index out of range");
        cover.Lprime.push_back(g.loops()[idx]);
      }
      json j;
      j["value"] = lcf::thin_cover_value(g, cover);
      emit(j);
      return 0;
    }

    if (verify_cmd->parsed()) {
      lcf::VerificationRun run;
      if (theorem == "d_geq2")
        run = lcf::verify_thm_d_geq2(v_d, v_t, v_nmax, v_samples, v_seed, v_fcap);
      else if (theorem == "weak6")
        run = lcf::verify_thm_weak6(v_nmax, v_samples, v_seed, v_fcap);
      else if (theorem == "main")
        run = lcf::verify_thm_main(v_nmax, v_samples, v_seed);
      else throw lcf::ParamsInvalid("unknown theorem " + theorem);
      emit(run_json(run));
      return run.all_pass() ? 0 : 1;
    }

    if (sweep_cmd->parsed()) {
      auto run = lcf::cross_oracle_sweep(s_d, s_t, s_nmax, s_trials, s_seed);
      emit(run_json(run));
      return run.all_pass() ? 0 : 1;
    }
  } catch (const lcf::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const json::exception& err) {
    std::cerr << "error: bad JSON input: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
