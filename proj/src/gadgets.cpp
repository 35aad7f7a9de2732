#include "simdel/gadgets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "simdel/error.hpp"

namespace simdel {

namespace {

std::uint64_t pair_code(Vertex a, Vertex b) {
  const auto e = make_edge(a, b);
  return (std::uint64_t{e.u} << 32) | e.v;
}

}  // namespace

std::optional<std::size_t> uniform_frequency(const SetCoverFamily& family) {
  if (family.universe_size == 0) return std::nullopt;
  std::vector<std::size_t> freq(family.universe_size, 0);
  for (const auto& set : family.sets) {
    auto sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("set lists an element twice");
    }
    for (auto u : sorted) {
      if (u >= family.universe_size) throw InputError("set element " + std::to_string(u) + " outside the universe");
      ++freq[u];
    }
  }
  if (std::adjacent_find(freq.begin(), freq.end(), std::not_equal_to<>()) != freq.end()) return std::nullopt;
  return freq.front();
}

ProblemInstance gadget_pvc_to_rts(const PvcInstance& source) {
  const auto& g = source.graph;
  if (source.coverage > g.m()) throw InputError("coverage target exceeds the number of edges");
  const auto r = static_cast<Vertex>(g.n());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 0) edges.push_back(make_edge(v, r));
  }
  return make_instance(ProblemKind::ReducingTotal, Graph(g.n() + 1, std::move(edges)),
                       std::vector<VertexPair>(g.edges().begin(), g.edges().end()), std::nullopt,
                       source.budget, g.m() - source.coverage);
}

ProblemInstance gadget_usc_to_rms(const SetCoverFamily& family) {
  if (family.sets.empty() && family.universe_size > 0) throw InputError("empty family cannot cover a nonempty universe");
  const auto f = uniform_frequency(family);
  if (!f) throw InputError("set family is not uniform");
  if (*f == 0) throw InputError("elements lie in no set");

  const auto x = [](std::size_t u) { return static_cast<Vertex>(1 + u); };
  const auto y = [&](std::size_t d) { return static_cast<Vertex>(1 + family.universe_size + d); };
  std::vector<Edge> edges;
  for (std::size_t d = 0; d < family.sets.size(); ++d) {
    edges.push_back(make_edge(0, y(d)));
    for (auto u : family.sets[d]) edges.push_back(make_edge(x(u), y(d)));
  }
  std::vector<VertexPair> targets;
  for (std::size_t u = 0; u < family.universe_size; ++u) targets.push_back(make_edge(0, x(u)));
  return make_instance(ProblemKind::ReducingMax, Graph(1 + family.universe_size + family.sets.size(), std::move(edges)),
                       std::move(targets), std::nullopt, family.budget, *f - 1);
}

SetCoverFamily uniformize_family(const SetCoverFamily& family) {
  std::vector<std::size_t> freq(family.universe_size, 0);
  for (const auto& set : family.sets) {
    for (auto u : set) {
      if (u >= family.universe_size) throw InputError("set element " + std::to_string(u) + " outside the universe");
      ++freq[u];
    }
  }
  SetCoverFamily out = family;
  const auto total = family.sets.size();
  for (std::uint32_t u = 0; u < family.universe_size; ++u) {
    if (freq[u] == 0) throw InputError("element " + std::to_string(u) + " lies in no set");
    for (std::size_t i = freq[u]; i <= total; ++i) out.sets.push_back({u});
  }
  return out;
}

ProblemInstance gadget_vc3_to_rms(const Graph& cubic, std::size_t budget) {
  const auto n = cubic.n();
  for (Vertex v = 0; v < n; ++v) {
    if (cubic.degree(v) != 3) throw InputError("source graph is not 3-regular");
  }
  const auto yv = [&](Vertex u) { return static_cast<Vertex>(n + u); };
  std::vector<Edge> edges;
  for (const auto& e : cubic.edges()) {
    edges.push_back(make_edge(e.u, e.v));
    edges.push_back(make_edge(e.u, yv(e.v)));
    edges.push_back(make_edge(e.v, yv(e.u)));
  }
  for (Vertex u = 0; u < n; ++u) edges.push_back(make_edge(u, yv(u)));
  std::vector<VertexPair> targets;
  for (const auto& e : cubic.edges()) targets.push_back(make_edge(yv(e.u), yv(e.v)));

  Graph g(2 * n, std::move(edges));
  if (g.stats().max_degree > 7) throw std::logic_error("cubic gadget exceeds degree 7");
  return make_instance(ProblemKind::ReducingMax, std::move(g), std::move(targets), std::nullopt, budget, 1);
}

ProblemInstance gadget_pad_avg_degree(const ProblemInstance& inst) {
  const auto n = inst.graph.n();
  if (n == 0) throw InputError("padding needs at least one vertex");
  if (n > 4096) throw SizeError("padding would add more than 2^24 vertices");
  const auto extra = n * n;
  std::vector<Edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
  edges.push_back(make_edge(0, static_cast<Vertex>(n)));
  for (std::size_t i = 0; i + 1 < extra; ++i) {
    edges.push_back(make_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(n + i + 1)));
  }
  return make_instance(inst.kind, Graph(n + extra, std::move(edges)), inst.targets, inst.candidates, inst.budget,
                       inst.threshold);
}

Graph gen_ba(std::size_t n, std::size_t attach, std::uint64_t seed) {
  if (attach == 0) throw InputError("attachment count must be positive");
  if (n < attach + 1) throw InputError("need at least attach + 1 vertices");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> ends;  // every edge endpoint, so sampling follows degree
  for (Vertex a = 0; a <= attach; ++a) {
    for (Vertex b = a + 1; b <= attach; ++b) {
      edges.push_back({a, b});
      ends.push_back(a);
      ends.push_back(b);
    }
  }
  std::vector<Vertex> chosen;
  for (auto v = static_cast<Vertex>(attach + 1); v < n; ++v) {
    chosen.clear();
    while (chosen.size() < attach) {
      std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
      const Vertex w = ends[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), w) == chosen.end()) chosen.push_back(w);
    }
    for (Vertex w : chosen) {
      edges.push_back(make_edge(v, w));
      ends.push_back(v);
      ends.push_back(w);
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_er(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t all = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > all) throw InputError("more edges requested than vertex pairs");
  std::mt19937_64 rng(seed);
  // Sample whichever side is smaller: the edges or the missing pairs.
  const bool complement = m > all / 2;
  const auto want = complement ? all - m : m;
  std::unordered_set<std::uint64_t> picked;
  std::vector<Edge> sampled;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n == 0 ? 0 : n - 1));
  while (sampled.size() < want) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || !picked.insert(pair_code(a, b)).second) continue;
    sampled.push_back(make_edge(a, b));
  }
  if (!complement) return Graph(n, std::move(sampled));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!picked.contains(pair_code(a, b))) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InputError("3-regular graphs need an even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), 3, v);
  while (true) {
    std::shuffle(points.begin(), points.end(), rng);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const Vertex a = points[i];
      const Vertex b = points[i + 1];
      simple = a != b && seen.insert(pair_code(a, b)).second;
      edges.push_back(make_edge(a, b));
    }
    if (simple) return Graph(n, std::move(edges));
  }
}

}  // namespace simdel
