#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simdel/error.hpp"
#include "simdel/gadgets.hpp"
#include "simdel/oracle.hpp"

using namespace simdel;

TEST_CASE("small fixed instances") {
  const auto w = oracle_decide(oracles::wedge(1));
  CHECK(w.feasible);
  CHECK(w.optimum == 1);
  CHECK(check_solution(oracles::wedge(1), w.witness).feasible);

  CHECK_FALSE(oracle_decide(oracles::wedge(0)).feasible);
  CHECK(oracle_decide(oracles::wedge(0), OracleMode::Optimum).optimum == 1);

  CHECK(oracle_decide(oracles::double_wedge(5), OracleMode::Optimum).optimum == 2);
  CHECK_FALSE(oracle_decide(oracles::double_wedge(1)).feasible);
}

TEST_CASE("decisions and optima agree with the bitmask scan") {
  std::mt19937_64 rng(404);
  for (auto kind : {ProblemKind::Eliminating, ProblemKind::ReducingTotal, ProblemKind::ReducingMax}) {
    oracles::InstanceShape shape;
    shape.kind = kind;
    for (int round = 0; round < 80; ++round) {
      const auto inst = oracles::random_instance(rng, shape);
      const auto best = oracles::optimum(inst);
      const auto opt = oracle_decide(inst, OracleMode::Optimum);
      CHECK(opt.optimum == best);
      const auto dec = oracle_decide(inst);
      CHECK(dec.feasible == (best && *best <= inst.budget));
      if (dec.feasible) {
        auto exact = inst;
        CHECK(check_solution(exact, dec.witness).feasible);
      }
    }
  }
}

TEST_CASE("the guard refuses oversized searches") {
  const auto big = gen_er(30, 200, 1);
  auto inst = make_instance(ProblemKind::Eliminating, big, {{0, 1}}, std::nullopt, 10);
  CHECK_THROWS_AS(oracle_decide(inst), SizeError);
  CHECK_THROWS_AS(oracle_decide(inst, OracleMode::Optimum), SizeError);
  inst.budget = 2;
  CHECK_NOTHROW(oracle_decide(inst));
}
