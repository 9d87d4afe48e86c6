#include "hitset/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hitset/error.hpp"
#include "hitset/pruner.hpp"

namespace hitset {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

#ifndef NDEBUG
// Chord nesting stands in for disk nesting; confirm it on the witness's upper
// arc before trusting it.
void check_containment(const Instance& instance, const ContainmentResult& filter) {
  constexpr int kSamples = 16;
  for (const auto& [removed, kept] : filter.witness) {
    const Disk& outer = instance.disks[removed];
    const Disk& inner = instance.disks[kept];
    const DiskSpan& sp = instance.spans[kept];
    for (int t = 0; t <= kSamples; ++t) {
      const double x = sp.xl + (sp.xr - sp.xl) * t / kSamples;
      if (!point_in_disk({x, upper_arc_y(inner, x)}, outer, 1e-9)) {
        throw Error(ErrorCode::PrereqViolated,
                    "disk " + std::to_string(removed + 1) + " does not contain disk " + std::to_string(kept + 1) +
                        " although its chord does",
                    removed);
      }
    }
  }
}
#endif

}  // namespace

OneDInstance reduce_to_1d(const Instance& instance, std::span<const std::size_t> disk_ids,
                          std::span<const ABRecord> ab, std::span<const std::size_t> prunable) {
  OneDInstance out;
  const auto& pts = instance.points;
  out.candidates.reserve(pts.size() - std::min(pts.size(), prunable.size()));
  std::size_t q = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    while (q < prunable.size() && prunable[q] < k) ++q;
    if (q < prunable.size() && prunable[q] == k) continue;
    out.candidates.push_back(pts[k].x);
    out.candidate_point.push_back(k);
  }
  out.segments.reserve(disk_ids.size());
  for (std::size_t t = 0; t < disk_ids.size(); ++t) {
    out.segments.push_back({pts[ab[t].a].x, pts[ab[t].b].x, disk_ids[t]});
  }
  return out;
}

HittingSet solve_1d(const OneDInstance& oned) {
  const auto& segs = oned.segments;
  std::vector<std::size_t> order(segs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t s, std::size_t t) { return segs[s].right < segs[t].right; });

  HittingSet result;
  bool chosen_any = false;
  double last = 0.0;
  for (std::size_t s : order) {
    const auto& seg = segs[s];
    if (chosen_any && seg.left <= last) continue;
    const auto it = std::upper_bound(oned.candidates.begin(), oned.candidates.end(), seg.right);
    if (it == oned.candidates.begin() || *std::prev(it) < seg.left) {
      throw Error(ErrorCode::Infeasible1D,
                  "segment for disk " + std::to_string(seg.disk + 1) + " contains no candidate point", s);
    }
    const auto c = static_cast<std::size_t>(std::prev(it) - oned.candidates.begin());
    last = oned.candidates[c];
    chosen_any = true;
    result.indices.push_back(oned.candidate_point[c] + 1);
  }
  return result;
}

SolveTrace solve_traced(const Instance& instance, const SolveOptions& options) {
  SolveTrace trace;
  const auto start = Clock::now();
  const auto& disks = instance.disks;

  auto t = Clock::now();
  if (options.unit_radius) {
    const double radius = *options.unit_radius;
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "unit radius must be positive");
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (std::abs(disks[i].r - radius) > 1e-9 * radius) {
        throw Error(ErrorCode::RadiusMismatch,
                    "disk " + std::to_string(i + 1) + " radius differs from the common radius", i);
      }
    }
  }
  if (options.validate) {
    if (auto bad = validate_single_intersection(disks)) {
      throw Error(ErrorCode::PrereqViolated,
                  "disks " + std::to_string(bad->first + 1) + " and " + std::to_string(bad->second + 1) +
                      " cross twice above the separating line",
                  bad->first);
    }
  }
  trace.filter = remove_contained(instance.spans);
#ifndef NDEBUG
  check_containment(instance, trace.filter);
#endif
  trace.timings.filter = elapsed_ns(t);

  const auto& kept = trace.filter.kept;
  if (kept.empty()) {
    trace.timings.total = elapsed_ns(start);
    return trace;
  }
  if (instance.points.empty()) {
    throw Error(ErrorCode::Infeasible, "disk " + std::to_string(kept.front() + 1) + " contains no point",
                kept.front());
  }

  t = Clock::now();
  std::vector<Disk> kept_disks;
  kept_disks.reserve(kept.size());
  for (std::size_t i : kept) kept_disks.push_back(disks[i]);
  try {
    if (options.unit_radius) {
      const EnvelopeTree tree(instance.points, *options.unit_radius);
      trace.ab = compute_ab_unit(tree, kept_disks);
    } else {
      const NNTree tree(instance.points);
      trace.ab = compute_ab(tree, kept_disks);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Infeasible || !e.index()) throw;
    const std::size_t i = kept[*e.index()];
    throw Error(ErrorCode::Infeasible, "disk " + std::to_string(i + 1) + " contains no point", i);
  }
  trace.timings.ab = elapsed_ns(t);

  t = Clock::now();
  {
    const PruneTree tree(instance.points.size(), disks, kept, trace.ab);
    trace.prunable = find_prunable(tree, instance.points);
  }
  trace.timings.prune = elapsed_ns(t);

  t = Clock::now();
  trace.oned = reduce_to_1d(instance, kept, trace.ab, trace.prunable);
  trace.timings.reduce = elapsed_ns(t);

  t = Clock::now();
  trace.solution = solve_1d(trace.oned);
  trace.timings.oned = elapsed_ns(t);

  trace.timings.total = elapsed_ns(start);
  return trace;
}

HittingSet solve(const Instance& instance, const SolveOptions& options) {
  return solve_traced(instance, options).solution;
}

HittingSet to_input_order(const Instance& instance, const HittingSet& solution) {
  HittingSet out;
  out.indices.reserve(solution.indices.size());
  for (std::size_t k : solution.indices) out.indices.push_back(instance.point_origin.at(k - 1) + 1);
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

HittingSet solve_raw(const RawInstance& raw, const SolveOptions& options, StageTimings* timings) {
  const auto start = Clock::now();
  const Instance instance = normalize(raw);
  const std::int64_t t_normalize = elapsed_ns(start);
  SolveTrace trace;
  try {
    trace = solve_traced(instance, options);
  } catch (const Error& e) {
    // Report disks by their position in the input rather than in x-order.
    if (!e.index() || e.code() == ErrorCode::Infeasible1D) throw;
    const std::size_t i = instance.disk_origin.at(*e.index());
    switch (e.code()) {
      case ErrorCode::Infeasible:
        throw Error(e.code(), "disk " + std::to_string(i + 1) + " contains no point", i);
      case ErrorCode::RadiusMismatch:
        throw Error(e.code(), "disk " + std::to_string(i + 1) + " radius differs from the common radius", i);
      case ErrorCode::PrereqViolated:
        throw Error(e.code(), "disk " + std::to_string(i + 1) + " crosses another disk twice above the line", i);
      default:
        throw;
    }
  }
  HittingSet out = to_input_order(instance, trace.solution);
  if (timings) {
    *timings = trace.timings;
    timings->normalize = t_normalize;
    timings->total = elapsed_ns(start);
  }
  return out;
}

VerifyResult verify_solution(const RawInstance& raw, const HittingSet& solution) {
  VerifyResult result;
  std::vector<Point> chosen;
  chosen.reserve(solution.indices.size());
  for (std::size_t k : solution.indices) {
    if (k == 0 || k > raw.points.size()) {
      result.reason = "point index " + std::to_string(k) + " out of range";
      return result;
    }
    Point p = raw.points[k - 1];
    if (raw.mode == Mode::line_constrained) p.y = std::abs(p.y);
    chosen.push_back(p);
  }
  for (std::size_t i = 0; i < raw.disks.size(); ++i) {
    Disk s = raw.disks[i];
    if (raw.mode == Mode::line_constrained) s.cy = 0.0;
    const bool hit = std::any_of(chosen.begin(), chosen.end(), [&](const Point& p) { return point_in_disk(p, s); });
    if (!hit) {
      result.unhit_disk = i;
      result.reason = "disk " + std::to_string(i + 1) + " is not hit";
      return result;
    }
  }
  result.ok = true;
  return result;
}

}  // namespace hitset
