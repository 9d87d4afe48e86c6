#include <algorithm>
#include <cstdint>
#include <string>

#include "hitset/error.hpp"
#include "hitset/oracle.hpp"

namespace hitset {

OptimumResult brute_optimum(std::span<const Point> points, std::span<const Disk> disks, std::size_t max_points) {
  const std::size_t n = points.size();
  const std::size_t m = disks.size();
  if (n > max_points) {
    throw Error(ErrorCode::TooLarge,
                "exhaustive search limited to " + std::to_string(max_points) + " points, got " + std::to_string(n),
                n);
  }
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> hits(n * words, 0);
  std::vector<std::uint64_t> all(words, 0);
  for (std::size_t i = 0; i < m; ++i) {
    all[i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t k = 0; k < n; ++k) {
      if (point_in_disk(points[k], disks[i])) hits[k * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  {
    std::vector<std::uint64_t> acc(words, 0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= hits[k * words + w];
    }
    for (std::size_t w = 0; w < words; ++w) {
      if (acc[w] != all[w]) {
        const std::uint64_t missing = all[w] & ~acc[w];
        const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(missing));
        throw Error(ErrorCode::Infeasible, "disk " + std::to_string(i + 1) + " contains no point", i);
      }
    }
  }

  std::vector<std::uint64_t> acc(words);
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    // Lexicographic walk over k-subsets.
    pick.resize(k);
    for (std::size_t t = 0; t < k; ++t) pick[t] = t;
    while (true) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t p : pick) {
        for (std::size_t w = 0; w < words; ++w) acc[w] |= hits[p * words + w];
      }
      if (acc == all) {
        OptimumResult result;
        result.size = k;
        for (std::size_t p : pick) result.set.indices.push_back(p + 1);
        return result;
      }
      std::size_t t = k;
      while (t > 0 && pick[t - 1] == n - k + t - 1) --t;
      if (t == 0) break;
      ++pick[t - 1];
      for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  throw Error(ErrorCode::Infeasible, "no hitting set exists");  // unreachable after the check above
}

std::vector<ABRecord> brute_ab(std::span<const Point> points, std::span<const Disk> disks) {
  std::vector<ABRecord> out;
  out.reserve(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    bool found = false;
    ABRecord rec;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (!point_in_disk(points[k], disks[i])) continue;
      if (!found) rec.a = k;
      rec.b = k;
      found = true;
    }
    if (!found) throw Error(ErrorCode::Infeasible, "disk " + std::to_string(i + 1) + " contains no point", i);
    out.push_back(rec);
  }
  return out;
}

namespace {

std::vector<std::size_t> prunable_scan(std::span<const Point> points, std::span<const Disk> disks,
                                       std::span<const ABRecord> ab, bool closed) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
      const bool straddles = closed ? (ab[i].a <= k && k <= ab[i].b) : (ab[i].a < k && k < ab[i].b);
      if (straddles && !point_in_disk(points[k], disks[i])) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> brute_prunable(std::span<const Point> points, std::span<const Disk> disks,
                                        std::span<const ABRecord> ab) {
  return prunable_scan(points, disks, ab, false);
}

std::vector<std::size_t> brute_prunable_closed(std::span<const Point> points, std::span<const Disk> disks,
                                               std::span<const ABRecord> ab) {
  return prunable_scan(points, disks, ab, true);
}

HitSets hit_sets(std::span<const Point> points, std::span<const Disk> disks) {
  HitSets out;
  out.disks_of_point.resize(points.size());
  out.points_of_disk.resize(disks.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (point_in_disk(points[k], disks[i])) {
        out.disks_of_point[k].push_back(i);
        out.points_of_disk[i].push_back(k);
      }
    }
  }
  return out;
}

}  // namespace hitset
