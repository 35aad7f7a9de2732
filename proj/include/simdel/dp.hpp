#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

/// What one vertex can do: delete edges towards some X ⊆ R(v).
struct DpVertex {
  Vertex v = 0;
  std::vector<std::size_t> pairs;  // targets with both endpoints in N(v)
  std::vector<Vertex> relevant;    // R(v): endpoints of those pairs reachable by a candidate edge
};

/// T(i, k', t'): can vertices v_1..v_i be handled with k' deletions while
/// leaving at most t' common-neighbor incidences among the target pairs.
struct DpTable {
  std::size_t layers = 0;     // n + 1
  std::size_t budget = 0;     // largest k' (clamped)
  std::size_t threshold = 0;  // largest t' (clamped)
  std::vector<DpVertex> vertices;
  std::vector<char> cells;

  bool at(std::size_t i, std::size_t k, std::size_t t) const {
    return cells[(i * (budget + 1) + k) * (threshold + 1) + t] != 0;
  }
};

struct DpStats {
  std::size_t coupled_edges = 0;
  std::size_t rounds = 0;             // sub-instances after fixing coupled edges
  std::size_t max_relevant = 0;       // max |R(v)|
  std::uint64_t subsets_evaluated = 0;
};

/// Edges {a, b} in C where a is a common neighbor of a pair containing b and
/// b of a pair containing a. Deleting one changes two vertices' contributions,
/// which the per-vertex recurrence cannot see.
std::vector<Edge> coupled_edges(const ProblemInstance& inst);

/// Fills the table for a reducing-total instance. Exact when coupled_edges is
/// empty; otherwise it charges coupled edges as if they were independent.
DpTable fill_dp_table(const ProblemInstance& inst, DpStats* stats = nullptr);

/// entry(i,k,t) ⇒ entry(i,k+1,t) and entry(i,k,t+1).
bool is_monotone(const DpTable& table);

/// Exact reducing-total decision. Coupled edges are fixed first, each either
/// deleted or kept, and the recurrence runs on what remains. Throws SizeError
/// past 24 coupled edges.
Solution solve_rts_dp(const ProblemInstance& inst, DpStats* stats = nullptr);

/// Eliminating through the t = 0 lift.
Solution solve_es_dp(const ProblemInstance& inst, DpStats* stats = nullptr);

}  // namespace simdel
