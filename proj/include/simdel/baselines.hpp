#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

enum class Baseline { Greedy, HighJaccard, Random };

std::string_view to_string(Baseline b);
/// greedy / hj / random
Baseline parse_baseline(std::string_view name);

/// Baselines ignore the budget and report how many deletions they needed.
struct BaselineRun {
  Baseline algorithm = Baseline::Greedy;
  std::optional<std::uint64_t> seed;  // random only
  std::vector<Edge> deleted;          // in deletion order
  bool succeeded = false;             // every target pair ended with no common neighbor
  std::size_t iterations = 0;
  bool timed_out = false;
};

/// Deletes the candidate edge removing the most common neighbors of target
/// pairs, smallest edge on ties, until none remain or nothing helps. Gives up
/// with timed_out set once the optional time limit passes.
BaselineRun greedy_es(const ProblemInstance& inst,
                      std::optional<std::chrono::milliseconds> time_limit = std::nullopt);

/// Deletes candidates by descending Jaccard similarity of their endpoints in
/// the original graph until every target pair has disjoint neighborhoods.
BaselineRun hj_es(const ProblemInstance& inst);

/// Deletes candidates in a seeded uniform random order until done.
BaselineRun random_es(const ProblemInstance& inst, std::uint64_t seed);

}  // namespace simdel
