#pragma once

// End-to-end pipeline: containment filter, extreme indices, pruning,
// reduction to interval stabbing and the greedy 1D solve.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hitset/ab_index.hpp"
#include "hitset/geometry.hpp"

namespace hitset {

/// Surviving points projected onto the axis, plus one segment per disk.
struct OneDInstance {
  struct Segment {
    double left = 0.0;
    double right = 0.0;
    std::size_t disk = 0;  // 0-based disk position in the Instance
  };
  std::vector<double> candidates;          // ascending
  std::vector<std::size_t> candidate_point;  // 0-based point position per candidate
  std::vector<Segment> segments;
};

/// `disk_ids` and `ab` are parallel; `prunable` holds ascending 0-based
/// point positions.
OneDInstance reduce_to_1d(const Instance& instance, std::span<const std::size_t> disk_ids,
                          std::span<const ABRecord> ab, std::span<const std::size_t> prunable);

/// Minimum stabbing set by the right-endpoint greedy. Result indices are
/// 1-based point positions taken from `candidate_point`. Throws
/// Error(Infeasible1D, segment) if a segment holds no candidate.
HittingSet solve_1d(const OneDInstance& oned);

struct SolveOptions {
  std::optional<double> unit_radius;  // use the envelope index for equal radii
  bool validate = false;              // run the O(m^2) single-intersection check
};

/// Stage wall times in nanoseconds (monotonic clock).
struct StageTimings {
  std::int64_t normalize = 0;
  std::int64_t filter = 0;
  std::int64_t ab = 0;
  std::int64_t prune = 0;
  std::int64_t reduce = 0;
  std::int64_t oned = 0;
  std::int64_t total = 0;
};

/// Every intermediate product of one solve, for inspection and tests.
struct SolveTrace {
  ContainmentResult filter;
  std::vector<ABRecord> ab;          // parallel to filter.kept
  std::vector<std::size_t> prunable;  // ascending 0-based point positions
  OneDInstance oned;
  HittingSet solution;  // 1-based positions in Instance::points
  StageTimings timings;
};

SolveTrace solve_traced(const Instance& instance, const SolveOptions& options = {});

/// Optimal hitting set, 1-based positions in Instance::points.
HittingSet solve(const Instance& instance, const SolveOptions& options = {});

/// Normalizes, solves and maps the answer back to 1-based input positions.
/// Disk indices carried by thrown errors are input positions too.
HittingSet solve_raw(const RawInstance& raw, const SolveOptions& options = {},
                     StageTimings* timings = nullptr);

/// Converts a solution over Instance::points into input positions.
HittingSet to_input_order(const Instance& instance, const HittingSet& solution);

struct VerifyResult {
  bool ok = false;
  std::optional<std::size_t> unhit_disk;  // 0-based input position
  std::string reason;
};

/// Direct O(nm) check against the input as given. Solution indices are
/// 1-based input positions; in line_constrained mode chosen points are
/// reflected onto the upper side first.
VerifyResult verify_solution(const RawInstance& raw, const HittingSet& solution);

}  // namespace hitset
