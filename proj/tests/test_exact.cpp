#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "simdel/error.hpp"
#include "simdel/exact.hpp"

using namespace simdel;

TEST_CASE("wedge and double wedge") {
  CHECK(solve_es(oracles::wedge(1), SolveMode::Decide).feasible);
  CHECK_FALSE(solve_es(oracles::wedge(0), SolveMode::Decide).feasible);
  CHECK(solve_es(oracles::wedge(0), SolveMode::Minimize).size() == 1);

  // Each deletion removes one common neighbor, so two are needed.
  REQUIRE(oracles::optimum(oracles::double_wedge(0)) == 2);
  CHECK(solve_es(oracles::double_wedge(0), SolveMode::Minimize).size() == 2);
  CHECK_FALSE(solve_es(oracles::double_wedge(1), SolveMode::Decide).feasible);
  CHECK(solve_es(oracles::double_wedge(2), SolveMode::Decide).feasible);

  CHECK_THROWS_AS(solve_es(oracles::wedge(1, ProblemKind::ReducingTotal, 0), SolveMode::Decide), InputError);
}

TEST_CASE("exact solver agrees with brute force") {
  std::mt19937_64 rng(1234);
  oracles::InstanceShape shape;
  shape.max_n = 9;
  shape.max_m = 16;
  shape.max_k = 6;
  for (int round = 0; round < 200; ++round) {
    shape.candidate_p = round % 3 == 0 ? 1.0 : 0.75;
    const auto inst = oracles::random_instance(rng, shape);
    const auto best = oracles::optimum(inst);

    const auto decided = solve_es(inst, SolveMode::Decide);
    CHECK(decided.feasible == (best && *best <= inst.budget));
    if (decided.feasible) CHECK(decided.size() <= inst.budget);

    const auto min = solve_es(inst, SolveMode::Minimize);
    CHECK(min.feasible == best.has_value());
    if (best) {
      CHECK(min.size() == *best);
      CHECK(oracles::residuals(inst, min.deleted) == std::vector<std::size_t>(inst.targets.size(), 0));
    }

    const auto approx = approx_es(inst);
    CHECK(approx.feasible == best.has_value());
    if (best) CHECK(approx.size() <= 2 * *best);
  }
}

TEST_CASE("approximation is tight on a wedge") {
  const auto inst = oracles::wedge(1);
  CHECK(approx_es(inst).size() == 2);
  CHECK(solve_es(inst, SolveMode::Minimize).size() == 1);
}

TEST_CASE("maximum matching matches brute force") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 10;
    const auto edges = oracles::random_edges(rng, n, 45);
    Graph g(n, edges);
    const auto m = max_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == oracles::max_matching(n, edges));
  }
  // Odd cycle with a tail needs a blossom.
  Graph blossom(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}});
  CHECK(max_matching(blossom).size() == 3);
  CHECK_FALSE(is_matching(blossom, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(blossom, {{0, 2}}));
}

TEST_CASE("all-pairs special case") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 2 + rng() % 7;
    const auto edges = oracles::random_edges(rng, n, 14);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t w = 2 + rng() % std::min<std::size_t>(4, n - 1);
    std::vector<Vertex> important(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(w));
    std::sort(important.begin(), important.end());

    SpecialCaseInput input{Graph(n, edges), important, rng() % 6};
    const auto inst = all_pairs_instance(input);
    REQUIRE(inst.candidates.size() <= 16);
    const auto best = oracles::optimum(inst);
    REQUIRE(best);
    const auto sol = solve_es_all_pairs(input);
    CHECK(sol.size() == *best);
    CHECK(sol.feasible == (*best <= input.budget));

    const auto recognized = as_all_pairs(inst);
    REQUIRE(recognized);
    CHECK(recognized->important == important);
  }
  CHECK(as_all_pairs(oracles::double_wedge(2)).has_value());
  auto restricted = make_instance(ProblemKind::Eliminating, Graph(3, {{0, 1}, {1, 2}}), {{0, 2}},
                                  std::vector<Edge>{{0, 1}}, 1);
  CHECK_FALSE(as_all_pairs(restricted));
  CHECK_THROWS_AS(solve_es_all_pairs({Graph(3, {}), {1}, 0}), InputError);
}
