#include "simdel/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "simdel/error.hpp"

namespace simdel {

namespace {

constexpr std::uint64_t kSubsetCap = std::uint64_t{1} << 24;
constexpr std::size_t kNoLeg = static_cast<std::size_t>(-1);

struct Wedge {
  std::size_t pair;
  std::size_t leg_a;  // candidate index, or kNoLeg when the edge is not deletable
  std::size_t leg_b;
};

/// Σ_{j ≤ top} C(n, j), saturating at cap + 1.
std::uint64_t subsets_up_to(std::size_t n, std::size_t top) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t j = 0; j <= top && j <= n; ++j) {
    total += binom;
    if (total > kSubsetCap) return kSubsetCap + 1;
    // C(n, j+1) = C(n, j) (n-j) / (j+1); binom stays below 2^25 so the product fits.
    binom = std::min<std::uint64_t>(binom * (n - j) / (j + 1), kSubsetCap + 1);
  }
  return total;
}

}  // namespace

OracleResult oracle_decide(const ProblemInstance& inst, OracleMode mode) {
  require_valid(inst);
  const auto& cand = inst.candidates;
  const std::size_t top = mode == OracleMode::Optimum ? cand.size() : std::min(inst.budget, cand.size());
  if (subsets_up_to(cand.size(), top) > kSubsetCap) {
    throw SizeError("oracle search space exceeds 2^24 subsets");
  }

  auto index_of = [&](Vertex a, Vertex b) {
    const auto e = make_edge(a, b);
    const auto it = std::lower_bound(cand.begin(), cand.end(), e);
    return it != cand.end() && *it == e ? static_cast<std::size_t>(it - cand.begin()) : kNoLeg;
  };
  std::vector<Wedge> wedges;
  for (std::size_t i = 0; i < inst.targets.size(); ++i) {
    const auto& p = inst.targets[i];
    for (Vertex w : inst.graph.common_neighbors(p.u, p.v)) {
      wedges.push_back({i, index_of(p.u, w), index_of(p.v, w)});
    }
  }

  std::vector<char> deleted(cand.size(), 0);
  std::vector<std::size_t> residual(inst.targets.size());
  auto meets = [&] {
    std::fill(residual.begin(), residual.end(), 0);
    for (const auto& w : wedges) {
      const bool cut = (w.leg_a != kNoLeg && deleted[w.leg_a]) || (w.leg_b != kNoLeg && deleted[w.leg_b]);
      if (!cut) ++residual[w.pair];
    }
    switch (inst.kind) {
      case ProblemKind::Eliminating:
        return std::all_of(residual.begin(), residual.end(), [](std::size_t r) { return r == 0; });
      case ProblemKind::ReducingTotal:
        return std::accumulate(residual.begin(), residual.end(), std::size_t{0}) <= *inst.threshold;
      case ProblemKind::ReducingMax:
        return std::all_of(residual.begin(), residual.end(), [&](std::size_t r) { return r <= *inst.threshold; });
    }
    return false;
  };

  OracleResult out;
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= top; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      std::fill(deleted.begin(), deleted.end(), 0);
      for (auto i : pick) deleted[i] = 1;
      ++out.subsets_checked;
      if (meets()) {
        out.optimum = size;
        out.feasible = size <= inst.budget;
        for (auto i : pick) out.witness.push_back(cand[i]);
        return out;
      }
      // Next combination in lexicographic order.
      std::size_t j = size;
      while (j > 0 && pick[j - 1] == cand.size() - size + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t l = j; l < size; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return out;
}

}  // namespace simdel
