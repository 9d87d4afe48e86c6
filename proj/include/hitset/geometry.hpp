#pragma once

// Domain types, predicates and normalization for line-separable disk
// hitting set instances. The separating line is always the x-axis: after
// normalization points lie on/above it and disk centers on/below it.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace hitset {

inline constexpr double kDefaultEps = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Disk {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
  [[nodiscard]] Point center() const { return {cx, cy}; }
  friend bool operator==(const Disk&, const Disk&) = default;
};

/// Chord of a disk on the x-axis; its ends are also the extreme points of
/// the upper arc.
struct DiskSpan {
  double xl = 0.0;
  double xr = 0.0;
  friend bool operator==(const DiskSpan&, const DiskSpan&) = default;
};

enum class Mode { line_constrained, line_separable };

const char* to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Input as read from a file or produced by a generator, in input order.
struct RawInstance {
  std::vector<Point> points;
  std::vector<Disk> disks;
  Mode mode = Mode::line_separable;
  friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

/// Canonical instance: points sorted by x, disks sorted by span left end.
/// `point_origin[k]` / `disk_origin[i]` give the 0-based position of the item
/// in the RawInstance it came from.
struct Instance {
  std::vector<Point> points;
  std::vector<Disk> disks;
  std::vector<DiskSpan> spans;
  std::vector<std::size_t> point_origin;
  std::vector<std::size_t> disk_origin;
  Mode mode = Mode::line_separable;

  [[nodiscard]] RawInstance raw() const { return {points, disks, mode}; }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Ascending, distinct, 1-based point indices.
struct HittingSet {
  std::vector<std::size_t> indices;
  [[nodiscard]] std::size_t size() const { return indices.size(); }
  friend bool operator==(const HittingSet&, const HittingSet&) = default;
};

[[nodiscard]] inline double sq_dist(const Point& p, double qx, double qy) {
  const double dx = p.x - qx;
  const double dy = p.y - qy;
  return dx * dx + dy * dy;
}

/// Squared-distance bound used by every membership test. Keeping a single
/// definition makes the tree queries agree bit-for-bit with the scans.
[[nodiscard]] inline double hit_threshold(const Disk& s, double eps = kDefaultEps) {
  const double r2 = s.r * s.r;
  return r2 + eps * r2;
}

/// Closed-disk membership with relative tolerance.
[[nodiscard]] inline bool point_in_disk(const Point& p, const Disk& s, double eps = kDefaultEps) {
  return sq_dist(p, s.cx, s.cy) <= hit_threshold(s, eps);
}

/// Throws Error(DegenerateDisk) when the disk does not reach above the axis.
DiskSpan disk_span(const Disk& s);

/// Height of the upper arc at x (clamped to the arc's x-extent).
double upper_arc_y(const Disk& s, double x);

/// Intersection points of two circle boundaries. Empty for disjoint,
/// nested or concentric circles; one point for tangency.
std::vector<Point> circle_intersections(const Disk& a, const Disk& b);

Instance normalize(const RawInstance& raw);
Instance normalize(std::span<const Point> points, std::span<const Disk> disks, Mode mode);

struct ContainmentResult {
  std::vector<std::size_t> kept;                   // ascending input positions
  std::map<std::size_t, std::size_t> witness;      // removed -> kept, contained in it
};

/// Drops every span that contains another span. Identical spans collapse to
/// the smallest position. Input order is arbitrary; `kept` is returned in
/// ascending position order, which is ascending xl when the input was.
ContainmentResult remove_contained(std::span<const DiskSpan> spans);
ContainmentResult remove_contained(std::span<const Disk> disks);

/// O(m^2) check that every two upper arcs cross at most once above the axis.
/// Returns the first offending pair (0-based, i < j) or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> validate_single_intersection(
    std::span<const Disk> disks, double eps = 1e-9);

}  // namespace hitset
