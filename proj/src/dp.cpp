#include "simdel/dp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "simdel/error.hpp"

namespace simdel {

namespace {

constexpr std::size_t kMaxCoupled = 24;
constexpr std::size_t kMaxRelevant = 30;

struct Option {
  std::size_t size = 0;
  std::size_t residual = 0;
  std::uint32_t mask = 0;  // over DpVertex::relevant
};

std::vector<DpVertex> dp_vertices(const ProblemInstance& inst) {
  std::vector<DpVertex> out(inst.graph.n());
  for (Vertex v = 0; v < inst.graph.n(); ++v) out[v].v = v;
  for (std::size_t i = 0; i < inst.targets.size(); ++i) {
    const auto& p = inst.targets[i];
    for (Vertex w : inst.graph.common_neighbors(p.u, p.v)) out[w].pairs.push_back(i);
  }
  for (auto& dv : out) {
    for (auto i : dv.pairs) {
      for (Vertex x : {inst.targets[i].u, inst.targets[i].v}) {
        if (inst.is_candidate(make_edge(dv.v, x))) dv.relevant.push_back(x);
      }
    }
    std::sort(dv.relevant.begin(), dv.relevant.end());
    dv.relevant.erase(std::unique(dv.relevant.begin(), dv.relevant.end()), dv.relevant.end());
    if (dv.relevant.size() > inst.graph.degree(dv.v)) throw std::logic_error("R(v) larger than N(v)");
  }
  return out;
}

/// Distinct (|X|, residual) outcomes of one vertex, Gray-code order.
std::vector<Option> vertex_options(const ProblemInstance& inst, const DpVertex& dv, DpStats* stats) {
  const auto r = dv.relevant.size();
  if (r > kMaxRelevant) throw SizeError("vertex has too many relevant endpoints for the degree DP");

  // For every pair, which bits of X hit it.
  std::vector<std::uint32_t> hits(dv.pairs.size(), 0);
  for (std::size_t j = 0; j < dv.pairs.size(); ++j) {
    const auto& p = inst.targets[dv.pairs[j]];
    for (std::size_t b = 0; b < r; ++b) {
      if (dv.relevant[b] == p.u || dv.relevant[b] == p.v) hits[j] |= std::uint32_t{1} << b;
    }
  }
  std::vector<std::size_t> hit_count(dv.pairs.size(), 0);

  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> seen;
  std::uint32_t mask = 0;
  std::size_t gamma = 0;
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      const auto bit = static_cast<std::uint32_t>(std::countr_zero(step));
      const std::uint32_t flip = std::uint32_t{1} << bit;
      const bool adding = (mask & flip) == 0;
      mask ^= flip;
      for (std::size_t j = 0; j < hits.size(); ++j) {
        if ((hits[j] & flip) == 0) continue;
        if (adding) {
          if (hit_count[j]++ == 0) ++gamma;
        } else if (--hit_count[j] == 0) {
          --gamma;
        }
      }
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    seen.try_emplace({size, dv.pairs.size() - gamma}, mask);
  }
  if (stats != nullptr) {
    stats->subsets_evaluated += total;
    stats->max_relevant = std::max(stats->max_relevant, r);
  }

  std::vector<Option> out;
  for (const auto& [key, m] : seen) out.push_back({key.first, key.second, m});
  return out;
}

struct Filled {
  DpTable table;
  std::vector<std::vector<Option>> options;
};

Filled fill(const ProblemInstance& inst, DpStats* stats) {
  Filled f;
  auto& table = f.table;
  table.vertices = dp_vertices(inst);

  std::size_t incidences = 0;
  std::size_t deletable = 0;
  for (const auto& dv : table.vertices) {
    incidences += dv.pairs.size();
    deletable += dv.relevant.size();
  }
  table.layers = inst.graph.n() + 1;
  table.budget = std::min(inst.budget, deletable);
  table.threshold = std::min(*inst.threshold, incidences);

  const auto kk = table.budget + 1;
  const auto tt = table.threshold + 1;
  table.cells.assign(table.layers * kk * tt, 0);
  std::fill_n(table.cells.begin(), kk * tt, char{1});

  for (std::size_t i = 1; i < table.layers; ++i) {
    f.options.push_back(vertex_options(inst, table.vertices[i - 1], stats));
    const auto* prev = &table.cells[(i - 1) * kk * tt];
    auto* cur = &table.cells[i * kk * tt];
    for (const auto& opt : f.options.back()) {
      for (std::size_t k = opt.size; k < kk; ++k) {
        for (std::size_t t = opt.residual; t < tt; ++t) {
          if (prev[(k - opt.size) * tt + (t - opt.residual)]) cur[k * tt + t] = 1;
        }
      }
    }
  }
  return f;
}

std::vector<Edge> recover(const Filled& f) {
  const auto& table = f.table;
  std::vector<Edge> out;
  std::size_t k = table.budget;
  std::size_t t = table.threshold;
  for (std::size_t i = table.layers - 1; i > 0; --i) {
    const auto& dv = table.vertices[i - 1];
    bool stepped = false;
    for (const auto& opt : f.options[i - 1]) {
      if (opt.size > k || opt.residual > t || !table.at(i - 1, k - opt.size, t - opt.residual)) continue;
      for (std::size_t b = 0; b < dv.relevant.size(); ++b) {
        if ((opt.mask >> b & 1U) != 0) out.push_back(make_edge(dv.v, dv.relevant[b]));
      }
      k -= opt.size;
      t -= opt.residual;
      stepped = true;
      break;
    }
    if (!stepped) throw std::logic_error("dp witness recovery lost its path");
  }
  return out;
}

/// Graph and candidates with the chosen coupled edges gone and the rest frozen.
ProblemInstance fix_coupled(const ProblemInstance& inst, const std::vector<Edge>& coupled,
                            std::uint32_t deleted_mask) {
  std::vector<Edge> gone;
  for (std::size_t b = 0; b < coupled.size(); ++b) {
    if ((deleted_mask >> b & 1U) != 0) gone.push_back(coupled[b]);
  }
  std::vector<Edge> candidates;
  for (const auto& e : inst.candidates) {
    if (!std::binary_search(coupled.begin(), coupled.end(), e)) candidates.push_back(e);
  }
  return make_instance(inst.kind, inst.graph.without_edges(gone), inst.targets, std::move(candidates),
                       inst.budget - gone.size(), inst.threshold);
}

}  // namespace

std::vector<Edge> coupled_edges(const ProblemInstance& inst) {
  const auto vertices = dp_vertices(inst);
  std::vector<Edge> out;
  for (const auto& dv : vertices) {
    for (Vertex x : dv.relevant) {
      if (x > dv.v && std::binary_search(vertices[x].relevant.begin(), vertices[x].relevant.end(), dv.v)) {
        out.push_back(make_edge(dv.v, x));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DpTable fill_dp_table(const ProblemInstance& inst, DpStats* stats) {
  if (inst.kind != ProblemKind::ReducingTotal) throw InputError("the degree DP expects a reducing-total instance");
  require_valid(inst);
  return fill(inst, stats).table;
}

bool is_monotone(const DpTable& table) {
  for (std::size_t i = 0; i < table.layers; ++i) {
    for (std::size_t k = 0; k <= table.budget; ++k) {
      for (std::size_t t = 0; t <= table.threshold; ++t) {
        if (!table.at(i, k, t)) continue;
        if (k < table.budget && !table.at(i, k + 1, t)) return false;
        if (t < table.threshold && !table.at(i, k, t + 1)) return false;
      }
    }
  }
  return true;
}

Solution solve_rts_dp(const ProblemInstance& inst, DpStats* stats) {
  if (inst.kind != ProblemKind::ReducingTotal) throw InputError("solve_rts_dp expects a reducing-total instance");
  require_valid(inst);

  const auto coupled = coupled_edges(inst);
  if (coupled.size() > kMaxCoupled) throw SizeError("too many coupled edges for the degree DP");
  if (stats != nullptr) stats->coupled_edges = coupled.size();

  // Fewer fixed deletions first, so the witness tends to stay small.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << coupled.size()); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) <= inst.budget) masks.push_back(m);
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  for (auto m : masks) {
    const auto sub = coupled.empty() ? inst : fix_coupled(inst, coupled, m);
    const auto filled = fill(sub, stats);
    if (stats != nullptr) ++stats->rounds;
    if (!is_monotone(filled.table)) throw std::logic_error("dp table lost monotonicity");
    if (!filled.table.at(filled.table.layers - 1, filled.table.budget, filled.table.threshold)) continue;

    auto deleted = recover(filled);
    for (std::size_t b = 0; b < coupled.size(); ++b) {
      if ((m >> b & 1U) != 0) deleted.push_back(coupled[b]);
    }
    auto sol = check_solution(inst, deleted);
    if (!sol.feasible) throw std::logic_error("dp witness fails the feasibility check");
    return sol;
  }

  Solution sol;
  sol.residual = residual_common_neighbors(inst, {});
  return sol;
}

Solution solve_es_dp(const ProblemInstance& inst, DpStats* stats) {
  if (inst.kind != ProblemKind::Eliminating) throw InputError("solve_es_dp expects an eliminating instance");
  require_valid(inst);
  const auto sol = solve_rts_dp(lift_es(inst, ProblemKind::ReducingTotal), stats);
  if (!sol.feasible) return sol;
  return check_solution(inst, sol.deleted);
}

}  // namespace simdel
