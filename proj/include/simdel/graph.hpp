#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace simdel {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored canonically as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Target pairs share the edge representation; only the meaning differs.
using VertexPair = Edge;

constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
  }
};

/// Sorts and deduplicates after canonicalizing every entry.
std::vector<Edge> canonical_edge_set(std::vector<Edge> edges);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  double avg_degree = 0.0;  // 2m / n, zero for the empty graph
};

/// Immutable undirected simple graph over dense ids 0..n-1.
/// Edges are sorted canonically; neighbor lists are sorted slices of one flat array.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are merged. Self-loops and endpoints >= n throw InputError.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sorted neighbor list of v. Throws InputError when v is out of range.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_vertex(Vertex v) const noexcept { return v < n(); }
  bool has_edge(Vertex a, Vertex b) const noexcept;
  bool has_edge(const Edge& e) const noexcept { return has_edge(e.u, e.v); }

  /// Position of e in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge& e) const noexcept;

  /// N(x) ∩ N(y), ascending. Throws InputError when x == y or an id is invalid.
  std::vector<Vertex> common_neighbors(Vertex x, Vertex y) const;
  std::size_t count_common_neighbors(Vertex x, Vertex y) const;

  GraphStats stats() const;

  /// Copy with the listed edges removed; edges not present are ignored.
  Graph without_edges(std::span<const Edge> removed) const;

 private:
  std::span<const Vertex> list(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // neighbors of v: [offsets_[v], offsets_[v + 1])
  std::vector<Vertex> neighbors_;
};

/// Edge list read from text, with the original label of each dense id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;  // labels[id] = label as it appeared in the input
};

/// Whitespace-separated integer pairs, one per line. Lines starting with '#'
/// or '%' are comments. Labels are remapped to dense ids in first-appearance
/// order; self-loops and repeated edges are dropped. Extra columns (weights,
/// timestamps as found in KONECT files) are ignored.
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list(std::string_view text);

/// Writes one "a b" line per edge. Uses labels when given, ids otherwise.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::uint64_t> labels = {});

}  // namespace simdel
