#include "simdel/ilp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "simdel/error.hpp"

namespace simdel {

namespace {

constexpr std::size_t kMaxPairs = 32;
constexpr int kMaxPatternBits = 22;

std::size_t endpoint_index(std::span<const Vertex> endpoints, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(endpoints.begin(), endpoints.end(), v) -
                                  endpoints.begin());
}

bool has_endpoint(std::span<const Vertex> endpoints, Vertex v) {
  return std::binary_search(endpoints.begin(), endpoints.end(), v);
}

/// V(X) as an endpoint mask.
std::uint64_t endpoint_mask(const std::vector<VertexPair>& targets, std::span<const Vertex> endpoints,
                            std::uint32_t pairs) {
  std::uint64_t mask = 0;
  for (std::uint32_t rest = pairs; rest != 0; rest &= rest - 1) {
    const auto& p = targets[static_cast<std::size_t>(std::countr_zero(rest))];
    mask |= std::uint64_t{1} << endpoint_index(endpoints, p.u);
    mask |= std::uint64_t{1} << endpoint_index(endpoints, p.v);
  }
  return mask;
}

std::vector<std::uint32_t> covered_pairs_per_vertex(const ProblemInstance& inst) {
  if (inst.targets.size() > kMaxPairs) {
    throw SizeError("type partition supports at most 32 target pairs");
  }
  std::vector<std::uint32_t> covered(inst.graph.n(), 0);
  for (std::size_t i = 0; i < inst.targets.size(); ++i) {
    const auto& p = inst.targets[i];
    for (Vertex w : inst.graph.common_neighbors(p.u, p.v)) covered[w] |= std::uint32_t{1} << i;
  }
  return covered;
}

std::string pair_set_text(const std::vector<VertexPair>& targets, std::uint32_t mask) {
  std::string s = "{";
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const auto& p = targets[static_cast<std::size_t>(std::countr_zero(rest))];
    if (s.size() > 1) s += ",";
    s += "{" + std::to_string(p.u) + "," + std::to_string(p.v) + "}";
  }
  return s + "}";
}

std::string endpoint_set_text(std::span<const Vertex> endpoints, std::uint64_t mask) {
  std::string s = "{";
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    if (s.size() > 1) s += ",";
    s += std::to_string(endpoints[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return s + "}";
}

}  // namespace

std::size_t IlpModel::z_variable_count() const noexcept {
  std::size_t total = 0;
  for (const auto& p : patterns) total += p.size();
  return total;
}

TypePartition partition_types(const ProblemInstance& inst) {
  TypePartition out;
  for (const auto& p : inst.targets) {
    out.endpoints.push_back(p.u);
    out.endpoints.push_back(p.v);
  }
  std::sort(out.endpoints.begin(), out.endpoints.end());
  out.endpoints.erase(std::unique(out.endpoints.begin(), out.endpoints.end()), out.endpoints.end());

  const auto covered = covered_pairs_per_vertex(inst);
  const auto n = inst.graph.n();
  std::vector<std::uint64_t> deletable(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto within = endpoint_mask(inst.targets, out.endpoints, covered[v]);
    for (std::uint64_t rest = within; rest != 0; rest &= rest - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(rest));
      if (inst.is_candidate(make_edge(v, out.endpoints[bit]))) deletable[v] |= std::uint64_t{1} << bit;
    }
  }

  // a and b are coupled when each can delete the edge towards the other.
  std::vector<char> coupled(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint64_t rest = deletable[v]; rest != 0; rest &= rest - 1) {
      const Vertex d = out.endpoints[static_cast<std::size_t>(std::countr_zero(rest))];
      if (has_endpoint(out.endpoints, v) &&
          (deletable[d] >> endpoint_index(out.endpoints, v) & 1U) != 0) {
        coupled[v] = coupled[d] = 1;
      }
    }
  }

  std::map<std::pair<std::uint32_t, std::uint64_t>, std::size_t> index;
  for (Vertex v = 0; v < n; ++v) {
    if (coupled[v]) {
      out.types.push_back({covered[v], deletable[v], {v}, true});
      continue;
    }
    auto [it, inserted] = index.try_emplace({covered[v], deletable[v]}, out.types.size());
    if (inserted) out.types.push_back({covered[v], deletable[v], {}, false});
    out.types[it->second].members.push_back(v);
  }
  return out;
}

std::vector<ParticipationPattern> enumerate_patterns(const ProblemInstance& inst,
                                                     std::span<const Vertex> endpoints,
                                                     std::uint32_t covered_pairs, Vertex witness) {
  const auto within = endpoint_mask(inst.targets, endpoints, covered_pairs);
  std::uint64_t allowed = 0;
  for (std::uint64_t rest = within; rest != 0; rest &= rest - 1) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(rest));
    if (inst.is_candidate(make_edge(witness, endpoints[bit]))) allowed |= std::uint64_t{1} << bit;
  }
  if (std::popcount(allowed) > kMaxPatternBits) {
    throw SizeError("too many participation patterns for one vertex type");
  }

  std::vector<std::pair<std::uint32_t, std::uint64_t>> pair_bits;
  for (std::uint32_t rest = covered_pairs; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    const auto& p = inst.targets[i];
    pair_bits.emplace_back(std::uint32_t{1} << i, (std::uint64_t{1} << endpoint_index(endpoints, p.u)) |
                                                      (std::uint64_t{1} << endpoint_index(endpoints, p.v)));
  }

  std::vector<ParticipationPattern> out;
  for (std::uint64_t sub = allowed;; sub = (sub - 1) & allowed) {
    ParticipationPattern pat;
    pat.deleted_endpoints = sub;
    pat.cost = static_cast<std::size_t>(std::popcount(sub));
    for (const auto& [pair_bit, ends] : pair_bits) {
      if ((ends & sub) != 0) pat.covered_pairs |= pair_bit;
    }
    out.push_back(pat);
    if (sub == 0) break;
  }
  return out;
}

IlpModel build_ilp(const ProblemInstance& inst) {
  if (inst.kind == ProblemKind::Eliminating) {
    throw InputError("build_ilp expects reducing-total or reducing-max; lift eliminating instances first");
  }
  require_valid(inst);

  IlpModel model;
  model.kind = inst.kind;
  model.budget = inst.budget;
  model.threshold = *inst.threshold;
  model.targets = inst.targets;
  model.partition = partition_types(inst);
  const auto& endpoints = model.partition.endpoints;
  const auto& types = model.partition.types;

  for (const auto& type : types) {
    model.patterns.push_back(enumerate_patterns(inst, endpoints, type.covered_pairs, type.members.front()));
  }

  std::vector<std::size_t> type_of(inst.graph.n(), 0);
  for (std::size_t t = 0; t < types.size(); ++t) {
    for (Vertex v : types[t].members) type_of[v] = t;
  }
  for (std::size_t t = 0; t < types.size(); ++t) {
    if (!types[t].coupled) continue;
    const Vertex a = types[t].members.front();
    for (std::uint64_t rest = types[t].deletable; rest != 0; rest &= rest - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(rest));
      const Vertex b = endpoints[bit];
      if (b < a || !types[type_of[b]].coupled) continue;
      const auto back = endpoint_index(endpoints, a);
      if ((types[type_of[b]].deletable >> back & 1U) == 0) continue;
      model.couplings.push_back({Edge{a, b}, t, type_of[b], bit, back});
      // The larger endpoint's side deletes the shared edge for free.
      for (auto& pat : model.patterns[type_of[b]]) {
        if ((pat.deleted_endpoints >> back & 1U) != 0) --pat.cost;
      }
    }
  }

  model.pair_ceiling.assign(inst.targets.size(), 0);
  for (const auto& type : types) {
    for (std::uint32_t rest = type.covered_pairs; rest != 0; rest &= rest - 1) {
      model.pair_ceiling[static_cast<std::size_t>(std::countr_zero(rest))] += type.count();
    }
  }
  return model;
}

namespace {

class IlpSearch {
 public:
  explicit IlpSearch(const IlpModel& model) : model_(model) {
    const auto& types = model.partition.types;
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (types[t].coupled) order_.push_back(t);
    }
    coupled_prefix_ = order_.size();
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (!types[t].coupled) order_.push_back(t);
    }

    active_.resize(types.size());
    for (std::size_t t = 0; t < types.size(); ++t) active_[t] = active_patterns(t);

    std::vector<std::size_t> position(types.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
    checks_at_.assign(order_.size() + 1, {});
    for (std::size_t c = 0; c < model.couplings.size(); ++c) {
      const auto& cp = model.couplings[c];
      checks_at_[std::max(position[cp.type_a], position[cp.type_b]) + 1].push_back(c);
    }

    // Per position: how much each pair can still drop, and the best
    // coverage-per-cost ratio among the types not yet assigned.
    const auto pairs = model.targets.size();
    reducible_.assign(order_.size() + 1, std::vector<std::size_t>(pairs, 0));
    best_ratio_.assign(order_.size() + 1, {0, 1});
    for (std::size_t i = order_.size(); i-- > 0;) {
      reducible_[i] = reducible_[i + 1];
      best_ratio_[i] = best_ratio_[i + 1];
      const auto t = order_[i];
      std::uint32_t can_cover = 0;
      for (auto p : active_[t]) {
        const auto& pat = model.patterns[t][p];
        can_cover |= pat.covered_pairs;
        const auto gain = static_cast<std::size_t>(std::popcount(pat.covered_pairs));
        if (pat.cost > 0 && gain * best_ratio_[i].second > best_ratio_[i].first * pat.cost) {
          best_ratio_[i] = {gain, pat.cost};
        }
      }
      for (std::uint32_t rest = can_cover; rest != 0; rest &= rest - 1) {
        reducible_[i][static_cast<std::size_t>(std::countr_zero(rest))] += types[t].count();
      }
    }

    residual_.assign(model.pair_ceiling.begin(), model.pair_ceiling.end());
    budget_left_ = model.budget;
    z_.assign(types.size(), {});
    for (std::size_t t = 0; t < types.size(); ++t) z_[t].assign(model.patterns[t].size(), 0);
  }

  std::optional<IlpAssignment> run() {
    if (!assign_type(0)) return std::nullopt;
    IlpAssignment out;
    out.z = z_;
    out.y = residual_;
    if (model_.kind == ProblemKind::ReducingMax) {
      out.gamma = out.y.empty() ? 0 : *std::max_element(out.y.begin(), out.y.end());
    }
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  // Drops patterns beaten by another with no higher cost and a superset of
  // covered pairs. Coupled types keep everything: their edge choices matter
  // beyond the pairs they cover. D = ∅ stays last.
  std::vector<std::size_t> active_patterns(std::size_t t) const {
    const auto& pats = model_.patterns[t];
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pats.size(); ++i) {
      bool dominated = false;
      if (!model_.partition.types[t].coupled) {
        for (std::size_t j = 0; j < pats.size() && !dominated; ++j) {
          if (j == i) continue;
          const bool covers = (pats[j].covered_pairs & pats[i].covered_pairs) == pats[i].covered_pairs;
          const bool cheaper = pats[j].cost <= pats[i].cost;
          const bool strictly = pats[j].cost < pats[i].cost || pats[j].covered_pairs != pats[i].covered_pairs;
          dominated = covers && cheaper && (strictly || j < i);
        }
      }
      if (!dominated) keep.push_back(i);
    }
    return keep;
  }

  std::size_t deletes_endpoint(std::size_t t, std::size_t bit) const {
    std::size_t count = 0;
    for (std::size_t p = 0; p < z_[t].size(); ++p) {
      if ((model_.patterns[t][p].deleted_endpoints >> bit & 1U) != 0) count += z_[t][p];
    }
    return count;
  }

  bool couplings_hold(std::size_t pos) const {
    for (auto c : checks_at_[pos]) {
      const auto& cp = model_.couplings[c];
      if (deletes_endpoint(cp.type_a, cp.endpoint_in_a) != deletes_endpoint(cp.type_b, cp.endpoint_in_b)) {
        return false;
      }
    }
    return true;
  }

  bool can_still_succeed(std::size_t pos) const {
    if (pos < coupled_prefix_) return true;
    const auto& room = reducible_[pos];
    std::size_t floor_total = 0;
    std::size_t total = 0;
    for (std::size_t p = 0; p < residual_.size(); ++p) {
      const auto drop = std::min(room[p], budget_left_);
      const auto low = residual_[p] > drop ? residual_[p] - drop : 0;
      if (model_.kind == ProblemKind::ReducingMax && low > model_.threshold) return false;
      floor_total += low;
      total += residual_[p];
    }
    if (model_.kind == ProblemKind::ReducingTotal) {
      if (floor_total > model_.threshold) return false;
      const auto [gain, cost] = best_ratio_[pos];
      if (total > model_.threshold && (total - model_.threshold) * cost > budget_left_ * gain) return false;
    }
    return true;
  }

  bool finished() const {
    if (model_.kind == ProblemKind::ReducingMax) {
      return std::all_of(residual_.begin(), residual_.end(),
                         [&](std::size_t r) { return r <= model_.threshold; });
    }
    std::size_t total = 0;
    for (auto r : residual_) total += r;
    return total <= model_.threshold;
  }

  bool assign_type(std::size_t pos) {
    ++nodes_;
    if (!couplings_hold(pos)) return false;
    if (pos == order_.size()) return finished();
    if (!can_still_succeed(pos)) return false;
    const auto t = order_[pos];
    return assign_pattern(pos, t, 0, model_.partition.types[t].count());
  }

  void apply(std::size_t t, std::size_t p, std::size_t count, bool undo) {
    const auto& pat = model_.patterns[t][p];
    for (std::uint32_t rest = pat.covered_pairs; rest != 0; rest &= rest - 1) {
      auto& r = residual_[static_cast<std::size_t>(std::countr_zero(rest))];
      r = undo ? r + count : r - count;
    }
    budget_left_ = undo ? budget_left_ + count * pat.cost : budget_left_ - count * pat.cost;
    z_[t][p] = undo ? 0 : count;
  }

  bool assign_pattern(std::size_t pos, std::size_t t, std::size_t slot, std::size_t remaining) {
    const auto& act = active_[t];
    const auto p = act[slot];
    if (slot + 1 == act.size()) {
      // D = ∅ absorbs whatever is left at no cost.
      apply(t, p, remaining, false);
      const bool ok = assign_type(pos + 1);
      if (!ok) apply(t, p, remaining, true);
      return ok;
    }
    const auto cost = model_.patterns[t][p].cost;
    const auto most = cost == 0 ? remaining : std::min(remaining, budget_left_ / cost);
    for (std::size_t count = most + 1; count-- > 0;) {
      apply(t, p, count, false);
      if (assign_pattern(pos, t, slot + 1, remaining - count)) return true;
      apply(t, p, count, true);
    }
    return false;
  }

  const IlpModel& model_;
  std::vector<std::size_t> order_;
  std::size_t coupled_prefix_ = 0;
  std::vector<std::vector<std::size_t>> active_;
  std::vector<std::vector<std::size_t>> checks_at_;
  std::vector<std::vector<std::size_t>> reducible_;
  std::vector<std::pair<std::size_t, std::size_t>> best_ratio_;
  std::vector<std::size_t> residual_;
  std::size_t budget_left_ = 0;
  std::vector<std::vector<std::size_t>> z_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<IlpAssignment> solve_ilp(const IlpModel& model, IlpStats* stats) {
  IlpSearch search(model);
  auto result = search.run();
  if (stats != nullptr) stats->nodes_explored = search.nodes();
  return result;
}

bool satisfies(const IlpModel& model, const IlpAssignment& a) {
  const auto& types = model.partition.types;
  if (a.z.size() != types.size() || a.y.size() != model.targets.size()) return false;

  std::size_t spent = 0;
  std::vector<std::size_t> removed(model.targets.size(), 0);
  for (std::size_t t = 0; t < types.size(); ++t) {
    if (a.z[t].size() != model.patterns[t].size()) return false;
    std::size_t sum = 0;
    for (std::size_t p = 0; p < a.z[t].size(); ++p) {
      const auto& pat = model.patterns[t][p];
      sum += a.z[t][p];
      spent += pat.cost * a.z[t][p];
      for (std::uint32_t rest = pat.covered_pairs; rest != 0; rest &= rest - 1) {
        removed[static_cast<std::size_t>(std::countr_zero(rest))] += a.z[t][p];
      }
    }
    if (sum != types[t].count()) return false;
  }
  if (spent > model.budget) return false;
  for (std::size_t p = 0; p < model.targets.size(); ++p) {
    if (removed[p] > model.pair_ceiling[p] || a.y[p] != model.pair_ceiling[p] - removed[p]) return false;
  }
  for (const auto& cp : model.couplings) {
    auto deleted_by = [&](std::size_t t, std::size_t bit) {
      std::size_t c = 0;
      for (std::size_t p = 0; p < a.z[t].size(); ++p) {
        if ((model.patterns[t][p].deleted_endpoints >> bit & 1U) != 0) c += a.z[t][p];
      }
      return c;
    };
    if (deleted_by(cp.type_a, cp.endpoint_in_a) != deleted_by(cp.type_b, cp.endpoint_in_b)) return false;
  }
  if (model.kind == ProblemKind::ReducingMax) {
    if (!a.gamma || *a.gamma > model.threshold) return false;
    return std::all_of(a.y.begin(), a.y.end(), [&](std::size_t y) { return y <= *a.gamma; });
  }
  std::size_t total = 0;
  for (auto y : a.y) total += y;
  return total <= model.threshold;
}

std::vector<Edge> decode(const IlpModel& model, const IlpAssignment& a) {
  const auto& endpoints = model.partition.endpoints;
  std::vector<Edge> out;
  for (std::size_t t = 0; t < model.partition.types.size(); ++t) {
    const auto& members = model.partition.types[t].members;
    std::size_t next = 0;
    for (std::size_t p = 0; p < a.z[t].size(); ++p) {
      for (std::size_t c = 0; c < a.z[t][p] && next < members.size(); ++c, ++next) {
        const auto mask = model.patterns[t][p].deleted_endpoints;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          out.push_back(make_edge(members[next], endpoints[static_cast<std::size_t>(std::countr_zero(rest))]));
        }
      }
    }
  }
  return canonical_edge_set(std::move(out));
}

void dump_model(std::ostream& out, const IlpModel& model) {
  const auto& types = model.partition.types;
  const auto& endpoints = model.partition.endpoints;
  auto zname = [](std::size_t t, std::size_t p) {
    return "Z(T" + std::to_string(t) + ";P" + std::to_string(p) + ")";
  };
  auto yname = [&](std::size_t i) {
    return "Y(" + std::to_string(model.targets[i].u) + "," + std::to_string(model.targets[i].v) + ")";
  };

  out << "# " << to_string(model.kind) << "  k=" << model.budget << "  t=" << model.threshold << "  types="
      << types.size() << "  z-vars=" << model.z_variable_count() << "\n";
  out << "# types\n";
  for (std::size_t t = 0; t < types.size(); ++t) {
    out << "T" << t << ": X=" << pair_set_text(model.targets, types[t].covered_pairs)
        << " deletable=" << endpoint_set_text(endpoints, types[t].deletable) << " n=" << types[t].count()
        << (types[t].coupled ? " coupled" : "") << "\n";
  }
  out << "# variables\n";
  for (std::size_t t = 0; t < types.size(); ++t) {
    for (std::size_t p = 0; p < model.patterns[t].size(); ++p) {
      const auto& pat = model.patterns[t][p];
      out << zname(t, p) << " in [0," << types[t].count() << "]  D="
          << endpoint_set_text(endpoints, pat.deleted_endpoints) << " lambda=" << pat.cost
          << " covers=" << pair_set_text(model.targets, pat.covered_pairs) << "\n";
    }
  }
  for (std::size_t i = 0; i < model.targets.size(); ++i) {
    out << yname(i) << " in [0," << model.pair_ceiling[i] << "]\n";
  }
  if (model.kind == ProblemKind::ReducingMax) {
    const auto top = model.pair_ceiling.empty() ? 0 : *std::max_element(model.pair_ceiling.begin(), model.pair_ceiling.end());
    out << "Gamma in [0," << top << "]\n";
  }

  out << "# constraints\n";
  if (model.kind == ProblemKind::ReducingTotal) {
    out << "similarity:";
    for (std::size_t i = 0; i < model.targets.size(); ++i) out << (i ? " + " : " ") << yname(i);
    if (model.targets.empty()) out << " 0";
    out << " <= " << model.threshold << "\n";
  } else {
    out << "similarity: Gamma <= " << model.threshold << "\n";
    for (std::size_t i = 0; i < model.targets.size(); ++i) out << "similarity: " << yname(i) << " <= Gamma\n";
  }

  out << "budget:";
  bool any = false;
  for (std::size_t t = 0; t < types.size(); ++t) {
    for (std::size_t p = 0; p < model.patterns[t].size(); ++p) {
      if (model.patterns[t][p].cost == 0) continue;
      out << (any ? " + " : " ") << model.patterns[t][p].cost << " " << zname(t, p);
      any = true;
    }
  }
  out << (any ? "" : " 0") << " <= " << model.budget << "\n";

  for (std::size_t t = 0; t < types.size(); ++t) {
    out << "type T" << t << ":";
    for (std::size_t p = 0; p < model.patterns[t].size(); ++p) out << (p ? " + " : " ") << zname(t, p);
    out << " = " << types[t].count() << "\n";
  }

  for (std::size_t i = 0; i < model.targets.size(); ++i) {
    out << "residual: " << yname(i) << " = " << model.pair_ceiling[i];
    for (std::size_t t = 0; t < types.size(); ++t) {
      for (std::size_t p = 0; p < model.patterns[t].size(); ++p) {
        if ((model.patterns[t][p].covered_pairs >> i & 1U) != 0) out << " - " << zname(t, p);
      }
    }
    out << "\n";
  }

  for (const auto& cp : model.couplings) {
    out << "coupling {" << cp.edge.u << "," << cp.edge.v << "}:";
    auto side = [&](std::size_t t, std::size_t bit) {
      bool first = true;
      for (std::size_t p = 0; p < model.patterns[t].size(); ++p) {
        if ((model.patterns[t][p].deleted_endpoints >> bit & 1U) == 0) continue;
        out << (first ? " " : " + ") << zname(t, p);
        first = false;
      }
      if (first) out << " 0";
    };
    side(cp.type_a, cp.endpoint_in_a);
    out << " =";
    side(cp.type_b, cp.endpoint_in_b);
    out << "\n";
  }
}

Solution solve_with_ilp(const ProblemInstance& inst, IlpStats* stats) {
  require_valid(inst);
  const ProblemInstance lifted =
      inst.kind == ProblemKind::Eliminating ? lift_es(inst, ProblemKind::ReducingTotal) : inst;
  const auto model = build_ilp(lifted);
  const auto assignment = solve_ilp(model, stats);
  if (!assignment) {
    Solution sol;
    sol.residual = residual_common_neighbors(inst, {});
    return sol;
  }
  return check_solution(inst, decode(model, *assignment));
}

}  // namespace simdel
