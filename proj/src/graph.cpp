#include "simdel/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "simdel/error.hpp"

namespace simdel {

std::vector<Edge> canonical_edge_set(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : offsets_(n + 1, 0) {
  edges_ = canonical_edge_set(std::move(edges));
  for (const auto& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw InputError("edge endpoint " + std::to_string(e.v) + " out of range (n=" +
                       std::to_string(n) + ")");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  // Edges arrive sorted by (u, v), so every list fills in ascending order:
  // smaller neighbors first (as the v side), then larger ones (as the u side).
  neighbors_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    neighbors_[fill[e.u]++] = e.v;
    neighbors_[fill[e.v]++] = e.u;
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= n()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n()) + ")");
  }
  return list(v);
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= n() || b >= n() || a == b) return false;
  if (list(a).size() > list(b).size()) std::swap(a, b);
  const auto nb = list(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const noexcept {
  const Edge c = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), c);
  if (it == edges_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Vertex> Graph::common_neighbors(Vertex x, Vertex y) const {
  if (x == y) throw InputError("common neighbors of a vertex with itself are undefined");
  auto nx = neighbors(x);
  auto ny = neighbors(y);
  std::vector<Vertex> out;
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(out));
  return out;
}

std::size_t Graph::count_common_neighbors(Vertex x, Vertex y) const {
  if (x == y) throw InputError("common neighbors of a vertex with itself are undefined");
  auto nx = neighbors(x);
  auto ny = neighbors(y);
  std::size_t count = 0;
  for (auto i = nx.begin(), j = ny.begin(); i != nx.end() && j != ny.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

GraphStats Graph::stats() const {
  GraphStats s;
  s.n = n();
  s.m = m();
  for (Vertex v = 0; v < n(); ++v) s.max_degree = std::max(s.max_degree, list(v).size());
  s.avg_degree = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
  return s;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  const auto drop = canonical_edge_set({removed.begin(), removed.end()});
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Graph(n(), std::move(kept));
}

namespace {

bool parse_label(std::string_view token, std::uint64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

LabeledGraph parse_edge_list(std::istream& in) {
  std::unordered_map<std::uint64_t, Vertex> ids;
  std::vector<std::uint64_t> labels;
  std::vector<Edge> edges;
  auto id_of = [&](std::uint64_t label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a;
    if (!(fields >> a)) continue;
    if (a.front() == '#' || a.front() == '%') continue;
    std::string b;
    if (!(fields >> b)) throw ParseError(line_no, "expected two vertex labels");
    std::uint64_t la = 0;
    std::uint64_t lb = 0;
    if (!parse_label(a, la)) throw ParseError(line_no, "not a non-negative integer: '" + a + "'");
    if (!parse_label(b, lb)) throw ParseError(line_no, "not a non-negative integer: '" + b + "'");
    const Vertex u = id_of(la);
    const Vertex v = id_of(lb);
    if (u != v) edges.push_back(make_edge(u, v));
  }
  if (in.bad()) throw InputError("read error while parsing edge list");
  return {Graph(labels.size(), std::move(edges)), std::move(labels)};
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != g.n()) {
    throw InputError("label table size does not match vertex count");
  }
  for (const auto& e : g.edges()) {
    if (labels.empty()) {
      out << e.u << ' ' << e.v << '\n';
    } else {
      out << labels[e.u] << ' ' << labels[e.v] << '\n';
    }
  }
}

}  // namespace simdel
