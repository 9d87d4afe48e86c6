#include "hitset/bench.hpp"

#include <algorithm>
#include <cmath>

namespace hitset {

GenConfig bench_config(std::size_t n, std::uint64_t seed) {
  GenConfig config;
  config.n = n;
  config.m = n;
  config.seed = seed;
  config.kind = GenKind::line_constrained;
  config.coord_range = std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));
  config.radius_range = {1.0, 4.0};
  config.min_x_gap = 1e-9 * config.coord_range;
  return config;
}

BenchRecord bench_instance(const RawInstance& raw, std::uint64_t seed, std::size_t repeats) {
  std::vector<BenchRecord> runs;
  runs.reserve(repeats);
  for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
    BenchRecord rec;
    rec.n = raw.points.size();
    rec.m = raw.disks.size();
    rec.seed = seed;
    rec.size = solve_raw(raw, {}, &rec.timings).size();
    runs.push_back(rec);
  }
  std::sort(runs.begin(), runs.end(),
            [](const BenchRecord& a, const BenchRecord& b) { return a.timings.total < b.timings.total; });
  return runs[runs.size() / 2];
}

std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes, std::size_t seeds, std::size_t repeats,
                                   const BenchProgress& progress) {
  std::vector<BenchRecord> out;
  for (std::size_t n : sizes) {
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
      const RawInstance raw = generate(bench_config(n, seed));
      out.push_back(bench_instance(raw, seed, repeats));
      if (progress) progress(out.back());
    }
  }
  return out;
}

std::string to_csv_row(const BenchRecord& r) {
  const StageTimings& t = r.timings;
  std::string row = std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.seed);
  for (const std::int64_t v : {t.normalize, t.filter, t.ab, t.prune, t.reduce, t.oned, t.total}) {
    row += ',';
    row += std::to_string(v);
  }
  row += ',';
  row += std::to_string(r.size);
  return row;
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const BenchRecord& r : records) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

}  // namespace hitset
