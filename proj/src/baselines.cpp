#include "simdel/baselines.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "simdel/error.hpp"

namespace simdel {

namespace {

/// Adjacency that supports deletion, with the running number of
/// (target pair, common neighbor) incidences.
class WorkingGraph {
 public:
  explicit WorkingGraph(const ProblemInstance& inst) : targets_(inst.targets), adj_(inst.graph.n()) {
    for (Vertex v = 0; v < inst.graph.n(); ++v) {
      const auto nb = inst.graph.neighbors(v);
      adj_[v].assign(nb.begin(), nb.end());
    }
    for (const auto& p : targets_) total_ += inst.graph.count_common_neighbors(p.u, p.v);
  }

  bool adjacent(Vertex a, Vertex b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

  /// Common-neighbor incidences that disappear with {a, b}.
  std::size_t gain(const Edge& e) const {
    std::size_t g = 0;
    for (const auto& p : targets_) {
      if (p.u == e.u && p.v != e.v && adjacent(e.v, p.v)) ++g;
      if (p.v == e.u && p.u != e.v && adjacent(e.v, p.u)) ++g;
      if (p.u == e.v && p.v != e.u && adjacent(e.u, p.v)) ++g;
      if (p.v == e.v && p.u != e.u && adjacent(e.u, p.u)) ++g;
    }
    return g;
  }

  void remove(const Edge& e) {
    total_ -= gain(e);
    auto drop = [&](Vertex a, Vertex b) { adj_[a].erase(std::lower_bound(adj_[a].begin(), adj_[a].end(), b)); };
    drop(e.u, e.v);
    drop(e.v, e.u);
  }

  std::size_t total() const noexcept { return total_; }

 private:
  std::vector<VertexPair> targets_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t total_ = 0;
};

void require_eliminating(const ProblemInstance& inst) {
  if (inst.kind != ProblemKind::Eliminating) throw InputError("baselines expect an eliminating instance");
  require_valid(inst);
}

BaselineRun delete_in_order(const ProblemInstance& inst, const std::vector<Edge>& order, BaselineRun run) {
  WorkingGraph work(inst);
  for (const auto& e : order) {
    if (work.total() == 0) break;
    work.remove(e);
    run.deleted.push_back(e);
    ++run.iterations;
  }
  run.succeeded = work.total() == 0;
  return run;
}

}  // namespace

std::string_view to_string(Baseline b) {
  switch (b) {
    case Baseline::Greedy: return "greedy";
    case Baseline::HighJaccard: return "hj";
    case Baseline::Random: return "random";
  }
  return "?";
}

Baseline parse_baseline(std::string_view name) {
  if (name == "greedy") return Baseline::Greedy;
  if (name == "hj" || name == "high-jaccard") return Baseline::HighJaccard;
  if (name == "random") return Baseline::Random;
  throw InputError("unknown baseline '" + std::string(name) + "'");
}

BaselineRun greedy_es(const ProblemInstance& inst, std::optional<std::chrono::milliseconds> time_limit) {
  require_eliminating(inst);
  const auto start = std::chrono::steady_clock::now();
  BaselineRun run;
  run.algorithm = Baseline::Greedy;

  WorkingGraph work(inst);
  std::vector<Edge> remaining = inst.candidates;
  while (work.total() > 0) {
    if (time_limit && std::chrono::steady_clock::now() - start > *time_limit) {
      run.timed_out = true;
      break;
    }
    ++run.iterations;
    std::size_t best_gain = 0;
    std::size_t best = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const auto g = work.gain(remaining[i]);
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    if (best_gain == 0) break;
    work.remove(remaining[best]);
    run.deleted.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  run.succeeded = work.total() == 0;
  return run;
}

BaselineRun hj_es(const ProblemInstance& inst) {
  require_eliminating(inst);
  const auto& g = inst.graph;
  struct Ranked {
    Edge e;
    std::size_t shared;
    std::size_t joint;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(inst.candidates.size());
  for (const auto& e : inst.candidates) {
    const auto shared = g.count_common_neighbors(e.u, e.v);
    ranked.push_back({e, shared, g.degree(e.u) + g.degree(e.v) - shared});
  }
  // shared/joint descending, compared exactly.
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return a.shared * b.joint > b.shared * a.joint;
  });
  std::vector<Edge> order;
  order.reserve(ranked.size());
  for (const auto& r : ranked) order.push_back(r.e);

  BaselineRun run;
  run.algorithm = Baseline::HighJaccard;
  return delete_in_order(inst, order, std::move(run));
}

BaselineRun random_es(const ProblemInstance& inst, std::uint64_t seed) {
  require_eliminating(inst);
  std::vector<Edge> order = inst.candidates;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  BaselineRun run;
  run.algorithm = Baseline::Random;
  run.seed = seed;
  return delete_in_order(inst, order, std::move(run));
}

}  // namespace simdel
