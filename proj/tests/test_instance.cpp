#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "simdel/error.hpp"
#include "simdel/instance.hpp"

using namespace simdel;

TEST_CASE("validation reports each invariant") {
  auto has = [](const ProblemInstance& inst, const std::string& needle) {
    for (const auto& e : validate(inst)) {
      if (e.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(validate(make_instance(ProblemKind::Eliminating, g, {{0, 2}}, std::nullopt, 1)).empty());
  CHECK(has(make_instance(ProblemKind::Eliminating, g, {{1, 1}}, std::nullopt, 1), "degenerate"));
  CHECK(has(make_instance(ProblemKind::Eliminating, g, {{0, 5}}, std::nullopt, 1), "out of range"));
  CHECK(has(make_instance(ProblemKind::Eliminating, g, {{0, 2}, {2, 0}}, std::nullopt, 1), "duplicate"));
  CHECK(has(make_instance(ProblemKind::Eliminating, g, {{0, 2}}, std::vector<Edge>{{0, 2}}, 1), "not an edge"));
  CHECK(has(make_instance(ProblemKind::Eliminating, g, {{0, 2}}, std::nullopt, 1, 0), "threshold"));
  CHECK(has(make_instance(ProblemKind::ReducingMax, g, {{0, 2}}, std::nullopt, 1), "requires a threshold"));
  CHECK_THROWS_AS(require_valid(make_instance(ProblemKind::ReducingTotal, g, {{0, 2}}, std::nullopt, 1)),
                  InputError);
}

TEST_CASE("check_solution is the shared feasibility test") {
  const auto inst = oracles::wedge(1);
  CHECK(check_solution(inst, {}).residual == std::vector<std::size_t>{1});
  CHECK_FALSE(check_solution(inst, {}).feasible);
  const std::vector<Edge> one{{1, 2}};
  CHECK(check_solution(inst, one).feasible);
  const std::vector<Edge> both{{0, 1}, {1, 2}};
  CHECK_FALSE(check_solution(inst, both).feasible);  // over budget
  const std::vector<Edge> bogus{{0, 2}};
  CHECK_THROWS_AS(check_solution(inst, bogus), InputError);

  auto restricted = make_instance(ProblemKind::Eliminating, inst.graph, inst.targets, std::vector<Edge>{{0, 1}}, 1);
  CHECK_THROWS_AS(check_solution(restricted, one), InputError);

  const auto total = oracles::wedge(0, ProblemKind::ReducingTotal, 1);
  CHECK(check_solution(total, {}).feasible);
}

TEST_CASE("residuals match the matrix oracle on random deletions") {
  std::mt19937_64 rng(5);
  oracles::InstanceShape shape;
  for (int round = 0; round < 60; ++round) {
    const auto inst = oracles::random_instance(rng, shape);
    std::vector<Edge> f;
    for (const auto& e : inst.candidates) {
      if (rng() % 3 == 0) f.push_back(e);
    }
    CHECK(residual_common_neighbors(inst, f) == oracles::residuals(inst, f));
  }
}

TEST_CASE("lifting eliminating to threshold zero keeps answers") {
  std::mt19937_64 rng(8);
  oracles::InstanceShape shape;
  shape.max_m = 10;
  for (int round = 0; round < 40; ++round) {
    const auto es = oracles::random_instance(rng, shape);
    for (auto kind : {ProblemKind::ReducingTotal, ProblemKind::ReducingMax}) {
      const auto lifted = lift_es(es, kind);
      CHECK(lifted.kind == kind);
      CHECK(lifted.threshold == 0);
      CHECK(oracles::decide(lifted) == oracles::decide(es));
    }
  }
  CHECK_THROWS_AS(lift_es(oracles::wedge(0, ProblemKind::ReducingMax, 0), ProblemKind::ReducingTotal), InputError);
}

TEST_CASE("instance json round trip") {
  std::mt19937_64 rng(3);
  oracles::InstanceShape shape;
  shape.kind = ProblemKind::ReducingMax;
  for (int round = 0; round < 20; ++round) {
    shape.candidate_p = round % 2 ? 1.0 : 0.6;
    const auto inst = oracles::random_instance(rng, shape);
    std::stringstream buf;
    write_instance(buf, inst);
    const auto back = read_instance(buf);
    CHECK(back.kind == inst.kind);
    CHECK(back.budget == inst.budget);
    CHECK(back.threshold == inst.threshold);
    CHECK(back.targets == inst.targets);
    CHECK(back.candidates == inst.candidates);
    CHECK(back.all_candidates == inst.all_candidates);
    CHECK(back.graph.n() == inst.graph.n());
    CHECK(back.graph.m() == inst.graph.m());
  }
}

TEST_CASE("instance json with an edge-list reference uses file labels") {
  const auto dir = std::filesystem::temp_directory_path() / "simdel_instance_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "g.txt") << "100 200\n200 300\n";
  std::ofstream(dir / "inst.json") << R"({"kind": "eliminating", "budget": 1,
    "graph": {"edge_list": "g.txt"}, "targets": [[100, 300]], "candidates": [[200, 300]]})";
  const auto inst = load_instance(dir / "inst.json");
  CHECK(inst.graph.n() == 3);
  CHECK(inst.targets == std::vector<VertexPair>{{0, 2}});
  CHECK(inst.candidates == std::vector<Edge>{{1, 2}});
  CHECK_FALSE(inst.all_candidates);

  std::istringstream missing(R"({"kind": "eliminating", "budget": 1, "graph": {"n": 2, "edges": []}})");
  CHECK_THROWS_AS(read_instance(missing), InputError);
  std::istringstream bad_kind(R"({"kind": "x", "budget": 1, "graph": {"n": 2, "edges": []}, "targets": []})");
  CHECK_THROWS_AS(read_instance(bad_kind), InputError);
  std::istringstream not_json("{");
  CHECK_THROWS_AS(read_instance(not_json), InputError);
  std::istringstream absent(R"({"kind": "es", "budget": 0, "graph": {"n": 3, "edges": [[0,1],[1,2]]},
    "targets": [[0,2]]})");
  CHECK(read_instance(absent).all_candidates);
  std::filesystem::remove_all(dir);
}
