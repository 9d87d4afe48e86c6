#pragma once

// Scaling harness: solve generated n = m instances over a size grid and
// report per-stage timings as CSV.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hitset/oracle.hpp"
#include "hitset/solver.hpp"

namespace hitset {

struct BenchRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  StageTimings timings;
  std::size_t size = 0;
};

/// Line-constrained workload whose point density stays constant as n grows
/// (about five points per disk).
GenConfig bench_config(std::size_t n, std::uint64_t seed);

/// Solves `raw` `repeats` times and returns the run with the median total.
BenchRecord bench_instance(const RawInstance& raw, std::uint64_t seed, std::size_t repeats = 3);

using BenchProgress = std::function<void(const BenchRecord&)>;

/// One record per (size, seed) cell, seeds 1..seeds.
std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes, std::size_t seeds, std::size_t repeats = 3,
                                   const BenchProgress& progress = {});

inline constexpr const char* kBenchCsvHeader = "n,m,seed,t_normalize,t_filter,t_ab,t_prune,t_reduce,t_1d,t_total,size";
std::string to_csv_row(const BenchRecord& record);
std::string to_csv(std::span<const BenchRecord> records);

}  // namespace hitset
