#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simdel/graph.hpp"

namespace simdel {

enum class ProblemKind { Eliminating, ReducingTotal, ReducingMax };

std::string_view to_string(ProblemKind kind);
/// Accepts the long names and the short forms es / rts / rms.
ProblemKind parse_problem_kind(std::string_view name);

/// (G, S, C, k[, t]) for one of the three edge-deletion problems.
///
/// Eliminating asks that no target pair keep a common neighbor; reducing-total
/// bounds the summed common-neighbor counts by t; reducing-max bounds each
/// pair's count by t. In all three at most k edges of C may be deleted.
struct ProblemInstance {
  ProblemKind kind = ProblemKind::Eliminating;
  Graph graph;
  std::vector<VertexPair> targets;  // canonical pairs, in input order
  std::vector<Edge> candidates;     // canonical, sorted; equals graph edges when all_candidates
  bool all_candidates = false;      // written back as "candidates": "all"
  std::size_t budget = 0;
  std::optional<std::size_t> threshold;

  bool is_candidate(const Edge& e) const noexcept;
};

/// Builds an instance with canonical targets and candidates. Passing
/// std::nullopt for candidates means C = E.
ProblemInstance make_instance(ProblemKind kind, Graph graph, std::vector<VertexPair> targets,
                              std::optional<std::vector<Edge>> candidates, std::size_t budget,
                              std::optional<std::size_t> threshold = std::nullopt);

/// Every invariant violation, as human-readable messages. Empty means valid.
std::vector<std::string> validate(const ProblemInstance& inst);

/// Throws InputError carrying the first violation, if any.
void require_valid(const ProblemInstance& inst);

/// Outcome of deleting a set of edges.
struct Solution {
  std::vector<Edge> deleted;         // canonical, sorted
  std::vector<std::size_t> residual; // common neighbors left per target, aligned with targets
  bool feasible = false;

  std::size_t size() const noexcept { return deleted.size(); }
  std::size_t total_residual() const noexcept;
  std::size_t max_residual() const noexcept;
};

/// Common-neighbor count of every target pair in G minus the deleted edges.
std::vector<std::size_t> residual_common_neighbors(const ProblemInstance& inst,
                                                   std::span<const Edge> deleted);

/// The feasibility check every solver is held to. Throws InputError when a
/// deleted edge is not in E or not in C.
Solution check_solution(const ProblemInstance& inst, std::span<const Edge> deleted);

/// Eliminating -> reducing-total or reducing-max with t = 0.
ProblemInstance lift_es(const ProblemInstance& inst, ProblemKind target_kind);

/// JSON instance document:
///
///   { "kind": "eliminating" | "reducing-total" | "reducing-max",
///     "budget": k, "threshold": t,
///     "graph": { "n": N, "edges": [[a, b], ...] }   or   { "edge_list": "file.txt" },
///     "targets": [[x, y], ...],
///     "candidates": "all" | [[a, b], ...] }
///
/// With an inline graph, targets and candidates use dense ids. With an
/// edge_list reference (resolved against base_dir), they use the file's labels.
ProblemInstance read_instance(std::istream& in, const std::filesystem::path& base_dir = {});
ProblemInstance load_instance(const std::filesystem::path& file);

/// Always writes the inline-graph form.
void write_instance(std::ostream& out, const ProblemInstance& inst);
void save_instance(const std::filesystem::path& file, const ProblemInstance& inst);

}  // namespace simdel
