#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

/// Are there `budget` vertices touching at least `coverage` edges?
struct PvcInstance {
  Graph graph;
  std::size_t budget = 0;
  std::size_t coverage = 0;  // s <= m
};

/// Set cover over {0, ..., universe_size - 1}. Sets may repeat.
struct SetCoverFamily {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> sets;
  std::size_t budget = 0;
};

/// The common number of sets every element lies in, or nullopt when elements
/// disagree (or the universe is empty).
std::optional<std::size_t> uniform_frequency(const SetCoverFamily& family);

/// Star with center r = n and leaf u_v = v for every non-isolated v; target
/// pairs are the source edges, k' = k, t = m - s.
ProblemInstance gadget_pvc_to_rts(const PvcInstance& source);

/// Root r = 0, element vertices x_u = 1 + u, set vertices y_D after them.
/// Targets {r, x_u}; k = b, t = f - 1. Requires a uniform family.
ProblemInstance gadget_usc_to_rms(const SetCoverFamily& family);

/// Pads every element u up to frequency |D| + 1 with singleton sets {u}.
/// Every element must already lie in some set.
SetCoverFamily uniformize_family(const SetCoverFamily& family);

/// x_u = u and y_u = n + u; x_u is joined to x_v, y_v for every neighbor v
/// and to y_u. Targets {y_u, y_v} per source edge, k' = k, t = 1. Requires a
/// 3-regular source.
ProblemInstance gadget_vc3_to_rms(const Graph& cubic, std::size_t budget);

/// Hangs a path of n^2 new vertices off vertex 0. Targets, candidates and
/// budget are unchanged, so candidates become an explicit list.
ProblemInstance gadget_pad_avg_degree(const ProblemInstance& inst);

/// Preferential attachment from a clique on attach + 1 vertices; each new
/// vertex adds `attach` distinct edges.
Graph gen_ba(std::size_t n, std::size_t attach, std::uint64_t seed);

/// Uniform graph with exactly m edges.
Graph gen_er(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random simple 3-regular graph by the pairing model (n even, n >= 4).
Graph gen_cubic(std::size_t n, std::uint64_t seed);

}  // namespace simdel
