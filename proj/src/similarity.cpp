#include "simdel/similarity.hpp"

#include <cmath>
#include <string>

#include "simdel/error.hpp"

namespace simdel {

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::CommonNeighbors: return "common-neighbors";
    case Measure::Jaccard: return "jaccard";
    case Measure::AdamicAdar: return "adamic-adar";
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  if (name == "common-neighbors" || name == "cn") return Measure::CommonNeighbors;
  if (name == "jaccard") return Measure::Jaccard;
  if (name == "adamic-adar" || name == "aa") return Measure::AdamicAdar;
  throw InputError("unknown similarity measure '" + std::string(name) + "'");
}

double similarity(const Graph& g, Measure m, Vertex x, Vertex y) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) {
    throw InputError("similarity query with out-of-range vertex");
  }
  if (x == y) return 0.0;
  switch (m) {
    case Measure::CommonNeighbors:
      return static_cast<double>(g.count_common_neighbors(x, y));
    case Measure::Jaccard: {
      const auto common = g.count_common_neighbors(x, y);
      const auto uni = g.degree(x) + g.degree(y) - common;
      return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
    }
    case Measure::AdamicAdar: {
      double sum = 0.0;
      for (Vertex w : g.common_neighbors(x, y)) {
        const auto d = g.degree(w);
        if (d > 1) sum += 1.0 / std::log(static_cast<double>(d));
      }
      return sum;
    }
  }
  return 0.0;
}

double total_similarity(const Graph& g, Measure m, std::span<const VertexPair> pairs) {
  double sum = 0.0;
  for (const auto& p : pairs) sum += similarity(g, m, p.u, p.v);
  return sum;
}

}  // namespace simdel
