#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

/// Vertices grouped by the set of target pairs they are a common neighbor of.
///
/// Pair sets index into the instance's targets (bit i = targets[i]); endpoint
/// sets index into TypePartition::endpoints. Members of one type also agree on
/// which of their edges towards V(X) are candidates, so any member can stand
/// in for any other.
struct VertexType {
  std::uint32_t covered_pairs = 0;  // X
  std::uint64_t deletable = 0;      // endpoints d in V(X) with {member, d} in C
  std::vector<Vertex> members;      // ascending
  bool coupled = false;             // singleton sharing a deletable edge with another type

  std::size_t count() const noexcept { return members.size(); }
};

struct TypePartition {
  std::vector<Vertex> endpoints;  // distinct target endpoints, ascending
  std::vector<VertexType> types;  // ordered by smallest member
};

/// One way a vertex of a type can participate: delete its edges to D ⊆ V(X).
struct ParticipationPattern {
  std::uint64_t deleted_endpoints = 0;  // D
  std::size_t cost = 0;                 // edges charged to this pattern (λ)
  std::uint32_t covered_pairs = 0;      // pairs of X with an endpoint in D
};

/// An edge {a, b} where a is a common neighbor of a pair containing b and vice
/// versa. Both endpoints become singleton types, and the model forces them to
/// agree on whether the edge is deleted; only the smaller endpoint pays for it.
struct Coupling {
  Edge edge;
  std::size_t type_a = 0;  // type of edge.u
  std::size_t type_b = 0;  // type of edge.v
  std::size_t endpoint_in_a = 0;  // index of edge.v in endpoints
  std::size_t endpoint_in_b = 0;  // index of edge.u in endpoints
};

/// Integer program over pattern counts Z(X;P) and residual counts Y({x,y}):
///
///   reducing-total:  Σ Y <= t
///   reducing-max:    Γ <= t,  Y <= Γ for every pair
///   budget:          Σ λ(X,P) Z(X;P) <= k
///   per type:        Σ_P Z(X;P) = n(X)
///   per pair:        Y({x,y}) = Σ_{X∋{x,y}} n(X) - Σ_{X∋{x,y}} Σ_{P covers {x,y}} Z(X;P)
///   per coupling:    Σ_{P deletes the edge} Z(Xa;P) = Σ_{P deletes the edge} Z(Xb;P)
struct IlpModel {
  ProblemKind kind = ProblemKind::ReducingTotal;
  std::size_t budget = 0;
  std::size_t threshold = 0;
  std::vector<VertexPair> targets;
  TypePartition partition;
  std::vector<std::vector<ParticipationPattern>> patterns;  // per type; last entry is D = ∅
  std::vector<Coupling> couplings;
  std::vector<std::size_t> pair_ceiling;  // Σ_{X∋p} n(X): common neighbors before deletion

  std::size_t z_variable_count() const noexcept;
};

struct IlpAssignment {
  std::vector<std::vector<std::size_t>> z;  // z[type][pattern]
  std::vector<std::size_t> y;               // per target pair
  std::optional<std::size_t> gamma;         // reducing-max only
};

/// Groups vertices by covered pairs and candidate incidence. Types partition V.
TypePartition partition_types(const ProblemInstance& inst);

/// All D ⊆ V(X) whose edges {witness, d} are candidates, D = ∅ last.
/// Costs count every edge; build_ilp adjusts them for couplings.
std::vector<ParticipationPattern> enumerate_patterns(const ProblemInstance& inst,
                                                     std::span<const Vertex> endpoints,
                                                     std::uint32_t covered_pairs, Vertex witness);

/// Model for a reducing-total or reducing-max instance; feasible iff the
/// instance is a yes-instance. Throws SizeError past 32 target pairs.
IlpModel build_ilp(const ProblemInstance& inst);

struct IlpStats {
  std::uint64_t nodes_explored = 0;
};

/// Exact feasibility by depth-first branch and bound over the Z variables,
/// type by type. Returns a witness assignment or nullopt.
std::optional<IlpAssignment> solve_ilp(const IlpModel& model, IlpStats* stats = nullptr);

/// Checks every constraint of the model against an assignment.
bool satisfies(const IlpModel& model, const IlpAssignment& assignment);

/// Hands patterns to members in order and collects the deleted edges.
std::vector<Edge> decode(const IlpModel& model, const IlpAssignment& assignment);

/// Human-readable constraint system.
void dump_model(std::ostream& out, const IlpModel& model);

/// build_ilp + solve_ilp + decode, checked with check_solution. Eliminating
/// instances are lifted to reducing-total with t = 0 first.
Solution solve_with_ilp(const ProblemInstance& inst, IlpStats* stats = nullptr);

}  // namespace simdel
