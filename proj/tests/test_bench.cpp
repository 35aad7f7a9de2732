#include <doctest.h>

#include <set>
#include <sstream>

#include "simdel/bench.hpp"
#include "simdel/error.hpp"
#include "simdel/gadgets.hpp"

using namespace simdel;

TEST_CASE("target sampling") {
  const auto g = gen_er(50, 100, 1);
  const auto pairs = sample_target_pairs(g, 40, 9);
  CHECK(pairs.size() == 40);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& p : pairs) {
    CHECK(p.u < p.v);
    CHECK(seen.insert({p.u, p.v}).second);
  }
  CHECK(pairs == sample_target_pairs(g, 40, 9));
  CHECK(sample_target_pairs(Graph(4, {}), 6, 1).size() == 6);
  CHECK_THROWS_AS(sample_target_pairs(Graph(4, {}), 7, 1), InputError);
}

TEST_CASE("bench records and dominance") {
  BenchConfig cfg;
  cfg.dataset = "er-small";
  cfg.source = "er:200:400";
  cfg.s_size = 20;
  cfg.algorithms = {"fpta", "hj", "random"};
  cfg.repetitions = 5;
  const auto recs = run_bench(cfg);
  CHECK(recs.size() == 15);
  std::set<std::uint64_t> random_seeds;
  std::size_t fpta = 0;
  for (const auto& r : recs) {
    if (r.algorithm == "fpta") fpta = r.edges_deleted;
    if (r.algorithm == "random") random_seeds.insert(r.seed);
    CHECK(r.time_ms.has_value());
    CHECK(*r.time_ms >= 0.0);
  }
  CHECK(random_seeds.size() == 5);
  for (const auto& r : recs) {
    if (r.succeeded == "true") CHECK(fpta <= r.edges_deleted);
  }

  cfg.algorithms = {"fpta", "magic"};
  CHECK_THROWS_AS(run_bench(cfg), InputError);
  cfg.algorithms = {"fpta"};
  cfg.source = "ws:10:2";
  CHECK_THROWS_AS(run_bench(cfg), InputError);
}

TEST_CASE("csv output") {
  std::ostringstream empty;
  emit_csv(empty, {});
  CHECK(empty.str() == "dataset,s_size,algorithm,edges_deleted,succeeded,time_ms,seed\n");

  const std::vector<BenchRecord> recs{
      {"power", 200, "fpta", 3, "true", 1.5, 1},
      {"power", 200, "hj", 473, "true", std::nullopt, 1},
      {"power", 200, "greedy", 0, "timeout", 300000.25, 1},
  };
  std::stringstream out;
  emit_csv(out, recs);
  std::size_t lines = 0;
  for (char c : out.str()) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(parse_csv(out) == recs);

  std::istringstream bad("nope\n");
  CHECK_THROWS_AS(parse_csv(bad), ParseError);
}

TEST_CASE("identical configs give identical csv without timing") {
  BenchConfig cfg;
  cfg.dataset = "ba";
  cfg.source = "ba:300:2";
  cfg.s_size = 15;
  cfg.repetitions = 2;
  cfg.timing = false;
  std::ostringstream a, b;
  emit_csv(a, run_bench(cfg));
  emit_csv(b, run_bench(cfg));
  CHECK(a.str() == b.str());
}
