#pragma once

#include <span>
#include <string_view>

#include "simdel/graph.hpp"

namespace simdel {

/// Local similarity measures: each depends only on N(x) and N(y) and is zero
/// exactly when the two neighborhoods are disjoint.
enum class Measure { CommonNeighbors, Jaccard, AdamicAdar };

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view name);

/// Similarity of x and y; zero when x == y.
///
/// Adamic/Adar uses the natural log and skips common neighbors of degree <= 1
/// (unreachable for x != y, since such a vertex cannot touch both).
double similarity(const Graph& g, Measure m, Vertex x, Vertex y);

/// Sum of similarity over the listed pairs (zero for an empty list).
double total_similarity(const Graph& g, Measure m, std::span<const VertexPair> pairs);

}  // namespace simdel
