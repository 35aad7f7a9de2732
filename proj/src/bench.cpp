#include "simdel/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "simdel/baselines.hpp"
#include "simdel/error.hpp"
#include "simdel/exact.hpp"
#include "simdel/gadgets.hpp"

namespace simdel {

namespace {

const std::vector<std::string> kAlgorithms{"fpta", "greedy", "hj", "random"};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t to_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw InputError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

struct Timed {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

void validate(const BenchConfig& cfg) {
  for (const auto& a : cfg.algorithms) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
      throw InputError("unknown algorithm '" + a + "'");
    }
  }
  if (cfg.repetitions == 0) throw InputError("repetitions must be positive");
  const auto parts = split(cfg.source, ':');
  if (parts.size() == 3 && (parts[0] == "ba" || parts[0] == "er")) {
    to_u64(parts[1], "vertex count");
    to_u64(parts[2], "generator parameter");
  } else if (cfg.source.empty()) {
    throw InputError("bench needs a graph source");
  }
}

Graph load_bench_graph(const BenchConfig& cfg) {
  const auto parts = split(cfg.source, ':');
  if (parts.size() == 3 && parts[0] == "ba") {
    return gen_ba(to_u64(parts[1], "vertex count"), to_u64(parts[2], "attachment"), cfg.graph_seed);
  }
  if (parts.size() == 3 && parts[0] == "er") {
    return gen_er(to_u64(parts[1], "vertex count"), to_u64(parts[2], "edge count"), cfg.graph_seed);
  }
  std::ifstream in(cfg.source);
  if (!in) throw InputError("cannot open edge list '" + cfg.source + "'");
  return parse_edge_list(in).graph;
}

std::vector<VertexPair> sample_target_pairs(const Graph& g, std::size_t count, std::uint64_t seed) {
  const std::size_t n = g.n();
  const std::size_t all = n < 2 ? 0 : n * (n - 1) / 2;
  if (count > all) throw InputError("more target pairs requested than vertex pairs");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n == 0 ? 0 : n - 1));
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexPair> out;
  // Dense requests would stall rejection sampling; take a shuffled prefix instead.
  if (count * 2 > all) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) out.push_back({a, b});
    }
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(count);
    return out;
  }
  while (out.size() < count) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b) continue;
    const auto e = make_edge(a, b);
    if (seen.insert((std::uint64_t{e.u} << 32) | e.v).second) out.push_back(e);
  }
  return out;
}

ProblemInstance bench_instance(const Graph& g, std::size_t s_size, std::uint64_t seed) {
  return make_instance(ProblemKind::Eliminating, g, sample_target_pairs(g, s_size, seed), std::nullopt, g.m());
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  const auto inst = bench_instance(load_bench_graph(cfg), cfg.s_size, cfg.seed);

  std::vector<BenchRecord> out;
  std::optional<std::size_t> exact;
  for (const auto& algo : cfg.algorithms) {
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      BenchRecord rec;
      rec.dataset = cfg.dataset;
      rec.s_size = cfg.s_size;
      rec.algorithm = algo;
      rec.seed = algo == "random" ? cfg.seed + rep : cfg.seed;

      Timed clock;
      if (algo == "fpta") {
        const auto sol = solve_es(inst, SolveMode::Minimize);
        const auto ms = clock.ms();
        rec.edges_deleted = sol.size();
        rec.succeeded = sol.feasible ? "true" : "false";
        if (cfg.timing) rec.time_ms = ms;
        if (sol.feasible) exact = sol.size();
      } else {
        BaselineRun run;
        if (algo == "greedy") run = greedy_es(inst, cfg.timeout);
        else if (algo == "hj") run = hj_es(inst);
        else run = random_es(inst, rec.seed);
        const auto ms = clock.ms();
        rec.edges_deleted = run.deleted.size();
        rec.succeeded = run.timed_out ? "timeout" : run.succeeded ? "true" : "false";
        if (cfg.timing) rec.time_ms = ms;
        if (run.succeeded && !check_solution(inst, run.deleted).feasible) {
          throw std::logic_error(algo + " reported success on an infeasible deletion set");
        }
      }
      out.push_back(std::move(rec));
    }
  }

  if (exact) {
    for (const auto& rec : out) {
      if (rec.algorithm != "fpta" && rec.succeeded == "true" && rec.edges_deleted < *exact) {
        throw std::logic_error("exact solver beaten by " + rec.algorithm);
      }
    }
  }
  return out;
}

void emit_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "dataset,s_size,algorithm,edges_deleted,succeeded,time_ms,seed\n";
  for (const auto& r : records) {
    out << r.dataset << ',' << r.s_size << ',' << r.algorithm << ',' << r.edges_deleted << ',' << r.succeeded << ',';
    if (r.time_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.time_ms);
      out << buf;
    }
    out << ',' << r.seed << '\n';
  }
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "dataset,s_size,algorithm,edges_deleted,succeeded,time_ms,seed") {
    throw ParseError(1, "missing bench csv header");
  }
  std::vector<BenchRecord> out;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw ParseError(number, "expected 7 fields");
    BenchRecord r;
    r.dataset = f[0];
    r.s_size = to_u64(f[1], "s_size");
    r.algorithm = f[2];
    r.edges_deleted = to_u64(f[3], "edges_deleted");
    r.succeeded = f[4];
    if (!f[5].empty()) {
      try {
        r.time_ms = std::stod(f[5]);
      } catch (const std::exception&) {
        throw ParseError(number, "bad time_ms");
      }
    }
    r.seed = to_u64(f[6], "seed");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace simdel
