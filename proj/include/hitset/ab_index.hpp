#pragma once

// Extreme hit indices a(i), b(i): the smallest and largest point positions
// (in x-order) inside each disk. Both index structures share a balanced
// binary tree over point positions; they differ only in how a node answers
// "does this disk contain one of my points".

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hitset/geometry.hpp"

namespace hitset {

/// 0-based positions into Instance::points, a <= b.
struct ABRecord {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const ABRecord&, const ABRecord&) = default;
};

/// Balanced binary tree over positions [0, n). A node with k leaves gives
/// ceil(k/2) to the left child. Node 0 is the root.
class RangeTree {
 public:
  struct Node {
    std::size_t lo = 0;  // inclusive
    std::size_t hi = 0;  // inclusive
    std::int32_t left = -1;
    std::int32_t right = -1;
    [[nodiscard]] bool leaf() const { return left < 0; }
    [[nodiscard]] std::size_t size() const { return hi - lo + 1; }
  };

  RangeTree() = default;
  explicit RangeTree(std::size_t n);

  [[nodiscard]] std::size_t leaf_count() const { return n_; }
  [[nodiscard]] const Node& node(std::size_t id) const { return nodes_[id]; }
  [[nodiscard]] const Node& root() const { return nodes_.front(); }
  [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
  [[nodiscard]] std::size_t height() const;

 private:
  std::size_t build(std::size_t lo, std::size_t hi);

  std::size_t n_ = 0;
  std::vector<Node> nodes_;
};

struct Nearest {
  std::size_t index = 0;  // 0-based position
  double sq_dist = std::numeric_limits<double>::infinity();
};

/// RangeTree whose nodes each hold an exact nearest-neighbour index over
/// their own points: an implicit kd-tree above a size cutoff, a linear scan
/// below it.
class NNTree {
 public:
  static constexpr std::size_t kScanCutoff = 16;

  /// Points must be sorted by x. Throws Error(EmptyPointSet) when empty.
  explicit NNTree(std::span<const Point> points);

  [[nodiscard]] const RangeTree& shape() const { return shape_; }
  [[nodiscard]] std::span<const Point> points() const { return points_; }

  /// Exact nearest point of node `id` to q; ties go to the smaller index.
  [[nodiscard]] Nearest nearest(std::size_t id, const Point& q) const;

  /// True iff the disk contains some point of node `id`, using the same
  /// predicate as point_in_disk. Exits at the first hit.
  [[nodiscard]] bool disk_hits(std::size_t id, const Disk& s, double eps = kDefaultEps) const;

 private:
  struct Entry {
    double x;
    double y;
    std::size_t index;
  };

  void build_kd(std::size_t begin, std::size_t end, int axis);
  void nearest_kd(std::size_t begin, std::size_t end, int axis, const Point& q, Nearest& best) const;
  bool hits_kd(std::size_t begin, std::size_t end, int axis, const Disk& s, double threshold) const;

  std::vector<Point> points_;
  RangeTree shape_;
  std::vector<Entry> arena_;
  std::vector<std::size_t> offset_;  // per node; npos when the node is scanned
};

inline constexpr std::size_t kNoArc = std::numeric_limits<std::size_t>::max();

/// Lower envelope of the x-axis and the lower arcs of radius-r circles
/// centered at a set of points above the axis. Cell j spans
/// [breakpoints[j-1], breakpoints[j]] (unbounded at the ends) and is bounded
/// by `pieces[j]`, either kNoArc (the axis) or a point position.
struct EnvelopeChain {
  std::vector<double> breakpoints;
  std::vector<std::size_t> pieces;
  friend bool operator==(const EnvelopeChain&, const EnvelopeChain&) = default;
};

/// Height of a lower arc at x; +inf outside the circle's x-extent.
double lower_arc_y(const Point& center, double radius, double x);

/// Envelope height of `chain` at x.
double envelope_height(const EnvelopeChain& chain, std::span<const Point> points, double radius, double x);

EnvelopeChain leaf_envelope(std::span<const Point> points, std::size_t index, double radius);
EnvelopeChain merge_envelopes(const EnvelopeChain& a, const EnvelopeChain& b, std::span<const Point> points,
                              double radius);

/// RangeTree of envelope chains, parents built by merging children.
class EnvelopeTree {
 public:
  EnvelopeTree(std::span<const Point> points, double radius);

  [[nodiscard]] const RangeTree& shape() const { return shape_; }
  [[nodiscard]] const EnvelopeChain& chain(std::size_t id) const { return chains_[id]; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] std::span<const Point> points() const { return points_; }

  /// True iff the disk (of this tree's radius) contains a point of node `id`.
  [[nodiscard]] bool disk_hits(std::size_t id, const Disk& s, double eps = kDefaultEps) const;

 private:
  std::vector<Point> points_;
  double radius_;
  RangeTree shape_;
  std::vector<EnvelopeChain> chains_;
};

/// Throws Error(Infeasible, disk) for a disk containing no point.
std::vector<ABRecord> compute_ab(const NNTree& tree, std::span<const Disk> disks);

/// Same contract as compute_ab for disks of radius `tree.radius()`.
/// Throws Error(RadiusMismatch, disk) for any other radius.
std::vector<ABRecord> compute_ab_unit(const EnvelopeTree& tree, std::span<const Disk> disks);

}  // namespace hitset
