#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "simdel/baselines.hpp"
#include "simdel/bench.hpp"
#include "simdel/dp.hpp"
#include "simdel/error.hpp"
#include "simdel/exact.hpp"
#include "simdel/gadgets.hpp"
#include "simdel/ilp.hpp"
#include "simdel/oracle.hpp"

using json = nlohmann::json;
using namespace simdel;

namespace {

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

json solution_json(const ProblemInstance& inst, const Solution& sol) {
  json out{{"problem", to_string(inst.kind)},
           {"feasible", sol.feasible},
           {"size", sol.size()},
           {"budget", inst.budget},
           {"deleted", edges_json(sol.deleted)},
           {"residual", sol.residual}};
  if (inst.threshold) out["threshold"] = *inst.threshold;
  return out;
}

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ProblemInstance as_problem(ProblemInstance inst, const std::string& problem) {
  if (problem.empty()) return inst;
  const auto kind = parse_problem_kind(problem);
  if (kind == inst.kind) return inst;
  if (inst.kind == ProblemKind::Eliminating) return lift_es(inst, kind);
  throw InputError("instance is " + std::string(to_string(inst.kind)) + ", cannot solve it as " + problem);
}

SetCoverFamily random_family(std::size_t universe, std::size_t sets, std::size_t budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  SetCoverFamily f;
  f.universe_size = universe;
  f.budget = budget;
  f.sets.resize(sets);
  for (auto& s : f.sets) {
    for (std::uint32_t u = 0; u < universe; ++u) {
      if (coin(rng)) s.push_back(u);
    }
  }
  // Every element needs a home before padding.
  std::uniform_int_distribution<std::size_t> any(0, sets - 1);
  for (std::uint32_t u = 0; u < universe; ++u) {
    bool present = false;
    for (const auto& s : f.sets) present = present || std::find(s.begin(), s.end(), u) != s.end();
    if (!present) f.sets[any(rng)].push_back(u);
  }
  return uniformize_family(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge deletions that remove or reduce common-neighbor similarity"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string out_path;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Exact solvers");
  std::string problem;
  std::string mode = "decide";
  std::string algo = "vc";
  bool dump_ilp = false;
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--problem", problem, "es | rts | rms (eliminating instances can be lifted)");
  solve->add_option("--mode", mode, "decide | minimize (vc only)")->check(CLI::IsMember({"decide", "minimize"}));
  solve->add_option("--algo", algo, "vc | ilp | dp | special")->check(CLI::IsMember({"vc", "ilp", "dp", "special"}));
  solve->add_flag("--dump-model", dump_ilp, "Print the integer program instead of solving (ilp)");
  solve->add_option("--out", out_path);
  solve->add_option("--seed", seed);

  auto* baseline = app.add_subcommand("baseline", "Greedy, high-Jaccard or random deletions");
  std::string baseline_algo = "greedy";
  baseline->add_option("--instance", instance_path)->required();
  baseline->add_option("--algo", baseline_algo)->check(CLI::IsMember({"greedy", "hj", "random"}));
  baseline->add_option("--seed", seed);
  baseline->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search on small instances");
  bool optimum = false;
  oracle->add_option("--instance", instance_path)->required();
  oracle->add_flag("--optimum", optimum, "Search every size, not just up to the budget");
  oracle->add_option("--out", out_path);
  oracle->add_option("--seed", seed);

  auto* approx = app.add_subcommand("approx", "Matching-based 2-approximation for eliminating");
  approx->add_option("--instance", instance_path)->required();
  approx->add_option("--out", out_path);
  approx->add_option("--seed", seed);

  auto* gen = app.add_subcommand("gen", "Random graphs and reduction instances");
  std::string model;
  std::size_t n = 0, m = 0, attach = 2, budget = 0, coverage = 0, sets = 4;
  gen->add_option("--model", model)->required()->check(
      CLI::IsMember({"ba", "er", "star-pvc", "usc", "vc3reg", "pad"}));
  gen->add_option("--n", n, "Vertices (universe size for usc)");
  gen->add_option("--m", m, "Edges");
  gen->add_option("--attach", attach, "Edges per new vertex (ba)");
  gen->add_option("--k", budget, "Budget");
  gen->add_option("--s", coverage, "Edges to cover (star-pvc)");
  gen->add_option("--sets", sets, "Sets before padding (usc)");
  gen->add_option("--instance", instance_path, "Eliminating instance to pad (pad)");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "Compare the exact solver with the baselines");
  BenchConfig cfg;
  std::string algos = "fpta,greedy,hj,random";
  std::size_t timeout_ms = 300'000;
  bool no_timing = false;
  bench->add_option("--source", cfg.source, "Edge list, ba:<n>:<attach> or er:<n>:<m>")->required();
  bench->add_option("--dataset", cfg.dataset);
  bench->add_option("--s-size", cfg.s_size);
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--graph-seed", cfg.graph_seed);
  bench->add_option("--algos", algos);
  bench->add_option("--reps", cfg.repetitions);
  bench->add_option("--timeout-ms", timeout_ms);
  bench->add_flag("--no-timing", no_timing, "Leave time_ms empty so output is reproducible");
  bench->add_option("--out", out_path);
  bench->add_option("--instance", instance_path, "Alias for --source");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto inst = as_problem(load_instance(instance_path), problem);
      if (algo == "ilp") {
        if (dump_ilp) {
          const auto model = build_ilp(inst.kind == ProblemKind::Eliminating
                                           ? lift_es(inst, ProblemKind::ReducingTotal)
                                           : inst);
          std::ostringstream text;
          dump_model(text, model);
          emit(out_path, text.str());
          return 0;
        }
        IlpStats stats;
        auto j = solution_json(inst, solve_with_ilp(inst, &stats));
        j["algorithm"] = "ilp";
        j["nodes_explored"] = stats.nodes_explored;
        emit(out_path, dump(j));
      } else if (algo == "dp") {
        DpStats stats;
        const auto sol = inst.kind == ProblemKind::Eliminating ? solve_es_dp(inst, &stats) : solve_rts_dp(inst, &stats);
        auto j = solution_json(inst, sol);
        j["algorithm"] = "dp";
        j["coupled_edges"] = stats.coupled_edges;
        j["max_relevant"] = stats.max_relevant;
        emit(out_path, dump(j));
      } else if (algo == "special") {
        const auto input = as_all_pairs(inst);
        if (!input) throw InputError("instance is not an all-pairs eliminating instance with C = E");
        auto j = solution_json(inst, solve_es_all_pairs(*input));
        j["algorithm"] = "special";
        emit(out_path, dump(j));
      } else {
        EsStats stats;
        const auto sol = solve_es(inst, mode == "minimize" ? SolveMode::Minimize : SolveMode::Decide, &stats);
        auto j = solution_json(inst, sol);
        j["algorithm"] = "vc";
        j["mode"] = mode;
        j["forced"] = stats.forced;
        j["conflict_vertices"] = stats.conflict_vertices;
        j["conflict_edges"] = stats.conflict_edges;
        j["nodes_explored"] = stats.nodes_explored;
        emit(out_path, dump(j));
      }
    } else if (*baseline) {
      const auto inst = load_instance(instance_path);
      const auto kind = parse_baseline(baseline_algo);
      const auto run = kind == Baseline::Greedy        ? greedy_es(inst)
                       : kind == Baseline::HighJaccard ? hj_es(inst)
                                                       : random_es(inst, seed);
      json j{{"algorithm", to_string(run.algorithm)}, {"deleted", edges_json(run.deleted)},
             {"edges_deleted", run.deleted.size()},   {"succeeded", run.succeeded},
             {"iterations", run.iterations}};
      if (run.seed) j["seed"] = *run.seed;
      emit(out_path, dump(j));
    } else if (*oracle) {
      const auto inst = load_instance(instance_path);
      const auto res = oracle_decide(inst, optimum ? OracleMode::Optimum : OracleMode::Decide);
      json j{{"problem", to_string(inst.kind)}, {"feasible", res.feasible}, {"witness", edges_json(res.witness)},
             {"subsets_checked", res.subsets_checked}};
      j["optimum"] = res.optimum ? json(*res.optimum) : json(nullptr);
      emit(out_path, dump(j));
    } else if (*approx) {
      const auto inst = load_instance(instance_path);
      auto j = solution_json(inst, approx_es(inst));
      j["algorithm"] = "approx";
      emit(out_path, dump(j));
    } else if (*gen) {
      std::ostringstream text;
      if (model == "ba" || model == "er") {
        write_edge_list(text, model == "ba" ? gen_ba(n, attach, seed) : gen_er(n, m, seed));
      } else if (model == "star-pvc") {
        write_instance(text, gadget_pvc_to_rts({gen_er(n, m, seed), budget, coverage}));
      } else if (model == "usc") {
        if (sets == 0) throw InputError("--sets must be positive");
        write_instance(text, gadget_usc_to_rms(random_family(n, sets, budget, seed)));
      } else if (model == "vc3reg") {
        write_instance(text, gadget_vc3_to_rms(gen_cubic(n, seed), budget));
      } else {
        if (instance_path.empty()) throw InputError("pad needs --instance");
        write_instance(text, gadget_pad_avg_degree(load_instance(instance_path)));
      }
      emit(out_path, text.str());
    } else if (*bench) {
      cfg.algorithms.clear();
      std::stringstream list(algos);
      for (std::string a; std::getline(list, a, ',');) cfg.algorithms.push_back(a);
      cfg.timing = !no_timing;
      cfg.timeout = std::chrono::milliseconds(timeout_ms);
      if (cfg.dataset.empty()) cfg.dataset = cfg.source;
      std::ostringstream text;
      emit_csv(text, run_bench(cfg));
      emit(out_path, text.str());
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
