#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

struct BenchConfig {
  std::string dataset;         // name written to every record
  std::string source;          // edge-list path, or "ba:<n>:<attach>" / "er:<n>:<m>"
  std::uint64_t graph_seed = 1;
  std::size_t s_size = 30;
  std::uint64_t seed = 1;      // target sampling; random baseline uses seed + repetition
  std::vector<std::string> algorithms{"fpta", "greedy", "hj", "random"};
  std::size_t repetitions = 1;
  bool timing = true;          // false leaves time_ms empty
  std::chrono::milliseconds timeout{300'000};
};

struct BenchRecord {
  std::string dataset;
  std::size_t s_size = 0;
  std::string algorithm;
  std::size_t edges_deleted = 0;
  std::string succeeded;           // true / false / timeout
  std::optional<double> time_ms;
  std::uint64_t seed = 0;

  bool operator==(const BenchRecord&) const = default;
};

/// Throws InputError for unknown algorithms, bad sources or |S| larger than
/// the number of vertex pairs.
void validate(const BenchConfig& cfg);

Graph load_bench_graph(const BenchConfig& cfg);

/// |S| distinct vertex pairs, uniform, in sampling order.
std::vector<VertexPair> sample_target_pairs(const Graph& g, std::size_t count, std::uint64_t seed);

/// Eliminating instance with the sampled targets, C = E and k = m.
ProblemInstance bench_instance(const Graph& g, std::size_t s_size, std::uint64_t seed);

/// One record per (algorithm, repetition), in that order. Throws
/// std::logic_error when the exact solver loses to a baseline that succeeded.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

void emit_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::istream& in);

}  // namespace simdel
