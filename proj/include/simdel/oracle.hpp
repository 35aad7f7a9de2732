#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

struct OracleResult {
  bool feasible = false;               // some F ⊆ C with |F| ≤ k meets the condition
  std::optional<std::size_t> optimum;  // smallest such |F| among the sizes searched
  std::vector<Edge> witness;           // a smallest F found, canonical
  std::uint64_t subsets_checked = 0;
};

enum class OracleMode {
  Decide,   // sizes 0..k
  Optimum,  // sizes 0..|C|, ignoring k for the search
};

/// Exhaustive search over subsets of C by increasing size, so the first hit
/// is minimum. Refuses with SizeError when the sizes to search hold more than
/// 2^24 subsets in total.
OracleResult oracle_decide(const ProblemInstance& inst, OracleMode mode = OracleMode::Decide);

}  // namespace simdel
