#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "simdel/error.hpp"
#include "simdel/ilp.hpp"

using namespace simdel;

namespace {

// Triangle a=0, b=1, c=2 with targets {b,c} and {a,c}: a is a common neighbor
// of {b,c}, b of {a,c}, and the edge {a,b} serves both.
ProblemInstance shared_edge_triangle(ProblemKind kind, std::size_t k, std::size_t t) {
  return make_instance(kind, Graph(3, {{0, 1}, {1, 2}, {0, 2}}), {{1, 2}, {0, 2}}, std::nullopt, k, t);
}

}  // namespace

TEST_CASE("types partition the vertices") {
  std::mt19937_64 rng(6);
  oracles::InstanceShape shape;
  shape.kind = ProblemKind::ReducingTotal;
  for (int round = 0; round < 50; ++round) {
    const auto inst = oracles::random_instance(rng, shape);
    const auto part = partition_types(inst);
    std::vector<int> seen(inst.graph.n(), 0);
    for (const auto& t : part.types) {
      CHECK_FALSE(t.members.empty());
      CHECK(std::is_sorted(t.members.begin(), t.members.end()));
      for (Vertex v : t.members) ++seen[v];
      if (t.coupled) CHECK(t.count() == 1);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("patterns enumerate deletable subsets with the empty one last") {
  // Star center 0, leaves 1..3, targets {1,2} and {1,3}.
  auto inst = make_instance(ProblemKind::ReducingTotal, Graph(4, {{0, 1}, {0, 2}, {0, 3}}), {{1, 2}, {1, 3}},
                            std::nullopt, 1, 0);
  const auto part = partition_types(inst);
  const auto pats = enumerate_patterns(inst, part.endpoints, 0b11, 0);
  CHECK(pats.size() == 8);
  CHECK(pats.back().deleted_endpoints == 0);
  CHECK(pats.back().cost == 0);
  for (const auto& p : pats) CHECK(p.cost == static_cast<std::size_t>(std::popcount(p.deleted_endpoints)));
  // Deleting {0,1} alone clears both pairs.
  const auto it = std::find_if(pats.begin(), pats.end(), [](const ParticipationPattern& p) {
    return p.deleted_endpoints == 0b001;
  });
  REQUIRE(it != pats.end());
  CHECK(it->covered_pairs == 0b11);
}

TEST_CASE("model on the star example") {
  auto inst = make_instance(ProblemKind::ReducingTotal, Graph(4, {{0, 1}, {0, 2}, {0, 3}}), {{1, 2}, {1, 3}},
                            std::nullopt, 1, 0);
  REQUIRE(oracles::decide(inst));
  const auto model = build_ilp(inst);
  CHECK(model.pair_ceiling == std::vector<std::size_t>{1, 1});
  const auto a = solve_ilp(model);
  REQUIRE(a);
  CHECK(satisfies(model, *a));
  const auto sol = solve_with_ilp(inst);
  CHECK(sol.feasible);
  CHECK(sol.deleted == std::vector<Edge>{{0, 1}});

  inst.budget = 0;
  inst.threshold = 1;
  CHECK_FALSE(oracles::decide(inst));
  CHECK_FALSE(solve_ilp(build_ilp(inst)));
}

TEST_CASE("shared edges are paid once") {
  for (auto kind : {ProblemKind::ReducingTotal, ProblemKind::ReducingMax}) {
    const auto inst = shared_edge_triangle(kind, 1, 0);
    REQUIRE(oracles::decide(inst));
    const auto model = build_ilp(inst);
    CHECK(model.couplings.size() == 1);
    const auto sol = solve_with_ilp(inst);
    CHECK(sol.feasible);
    CHECK(sol.deleted == std::vector<Edge>{{0, 1}});

    std::ostringstream text;
    dump_model(text, model);
    CHECK(text.str().find("coupling {0,1}") != std::string::npos);
    CHECK(text.str().find("budget:") != std::string::npos);
  }
}

TEST_CASE("ilp decisions match brute force") {
  std::mt19937_64 rng(909);
  for (auto kind : {ProblemKind::ReducingTotal, ProblemKind::ReducingMax, ProblemKind::Eliminating}) {
    oracles::InstanceShape shape;
    shape.kind = kind;
    for (int round = 0; round < 150; ++round) {
      shape.candidate_p = round % 2 ? 1.0 : 0.7;
      const auto inst = oracles::random_instance(rng, shape);
      const bool expected = oracles::decide(inst);
      const auto sol = solve_with_ilp(inst);
      CHECK(sol.feasible == expected);
      if (kind == ProblemKind::Eliminating) continue;
      const auto model = build_ilp(inst);
      const auto a = solve_ilp(model);
      CHECK(a.has_value() == expected);
      if (a) CHECK(satisfies(model, *a));
    }
  }
}

TEST_CASE("ilp rejects bad inputs") {
  CHECK_THROWS_AS(build_ilp(oracles::wedge(1)), InputError);
  std::vector<VertexPair> many;
  for (Vertex v = 1; v < 40; ++v) many.push_back({0, v});
  auto big = make_instance(ProblemKind::ReducingTotal, Graph(40, {}), many, std::nullopt, 0, 0);
  CHECK_THROWS_AS(build_ilp(big), SizeError);
}
