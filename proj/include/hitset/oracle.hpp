#pragma once

// Brute-force ground truth and seeded instance generation. Nothing here
// shares code with the fast pipeline beyond the membership predicate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hitset/ab_index.hpp"
#include "hitset/geometry.hpp"

namespace hitset {

inline constexpr std::size_t kOracleMaxPoints = 20;

struct OptimumResult {
  std::size_t size = 0;
  HittingSet set;  // 1-based positions into the given points
};

/// Exact minimum hitting set by enumerating subsets of increasing size.
/// Throws Error(TooLarge) above `max_points` and Error(Infeasible) if the
/// full point set misses some disk.
OptimumResult brute_optimum(std::span<const Point> points, std::span<const Disk> disks,
                            std::size_t max_points = kOracleMaxPoints);

/// Extreme indices by scanning every point for every disk.
std::vector<ABRecord> brute_ab(std::span<const Point> points, std::span<const Disk> disks);

/// Points p_k outside some disk whose records satisfy a < k < b.
std::vector<std::size_t> brute_prunable(std::span<const Point> points, std::span<const Disk> disks,
                                        std::span<const ABRecord> ab);

/// Same with a <= k <= b.
std::vector<std::size_t> brute_prunable_closed(std::span<const Point> points, std::span<const Disk> disks,
                                               std::span<const ABRecord> ab);

/// disks_of_point[k] = S(p_k), points_of_disk[i] = P(s_i); 0-based, ascending.
struct HitSets {
  std::vector<std::vector<std::size_t>> disks_of_point;
  std::vector<std::vector<std::size_t>> points_of_disk;
};
HitSets hit_sets(std::span<const Point> points, std::span<const Disk> disks);

enum class GenKind { line_constrained, unit_separable, separable_from_constrained };

const char* to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view text);

struct GenConfig {
  std::size_t n = 10;
  std::size_t m = 10;
  std::uint64_t seed = 0;
  GenKind kind = GenKind::line_constrained;
  double coord_range = 10.0;
  std::pair<double, double> radius_range{1.0, 4.0};
  std::optional<double> min_x_gap;  // default 1e-6 * coord_range
  std::size_t max_rounds = 200;
};

/// Deterministic instance for a config. Every disk holds at least one point
/// and all point x's and span endpoints are at least min_x_gap apart. To
/// repair an empty disk a point no disk depends on is moved into it; a new
/// point is added only when every point is some disk's sole hitter, so the
/// result has max(n, m) points at most. Throws Error(GenerationFailure) when
/// the rounds run out.
RawInstance generate(const GenConfig& config);

}  // namespace hitset
