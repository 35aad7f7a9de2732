#include "simdel/preprocess.hpp"

#include <unordered_set>

#include "simdel/error.hpp"

namespace simdel {

PreprocessOutcome preprocess_es(const ProblemInstance& inst) {
  if (inst.kind != ProblemKind::Eliminating) {
    throw InputError("forced-edge preprocessing applies to eliminating instances only");
  }

  PreprocessOutcome out;
  std::unordered_set<Edge, EdgeHash> deleted;
  std::size_t budget = inst.budget;

  auto fail = [&] {
    out.status = PreprocessOutcome::Status::NoInstance;
    out.instance = inst;
    out.budget_spent = out.forced.size();
    return out;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : inst.targets) {
      for (Vertex w : inst.graph.common_neighbors(p.u, p.v)) {
        const Edge left = make_edge(w, p.u);
        const Edge right = make_edge(w, p.v);
        if (deleted.contains(left) || deleted.contains(right)) continue;
        const bool left_ok = inst.is_candidate(left);
        const bool right_ok = inst.is_candidate(right);
        if (!left_ok && !right_ok) return fail();
        if (left_ok && right_ok) continue;
        if (budget == 0) return fail();
        const Edge forced = left_ok ? left : right;
        deleted.insert(forced);
        out.forced.push_back(forced);
        --budget;
        changed = true;
      }
    }
  }

  out.budget_spent = out.forced.size();
  if (out.forced.empty()) {
    out.instance = inst;
    return out;
  }
  std::optional<std::vector<Edge>> candidates;
  if (!inst.all_candidates) {
    candidates.emplace();
    for (const auto& e : inst.candidates) {
      if (!deleted.contains(e)) candidates->push_back(e);
    }
  }
  out.instance = make_instance(inst.kind, inst.graph.without_edges(out.forced), inst.targets,
                               std::move(candidates), budget, inst.threshold);
  return out;
}

}  // namespace simdel
