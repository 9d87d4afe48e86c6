#pragma once

// Prunable points: p_k is prunable when some disk misses it although its
// (a, b) index range strictly straddles k. Found with a segment tree over
// point positions whose canonical nodes store the common intersection of
// their disks above the axis.

#include <cstddef>
#include <span>
#include <vector>

#include "hitset/ab_index.hpp"
#include "hitset/geometry.hpp"

namespace hitset {

/// Upper boundary of the common intersection of a disk set above the axis.
/// Cell j spans [breakpoints[j-1], breakpoints[j]] clipped to [x_lo, x_hi]
/// and is bounded above by the upper arc of disk `arcs[j]`.
struct ArcChain {
  double x_lo = 0.0;
  double x_hi = -1.0;
  std::vector<double> breakpoints;
  std::vector<std::size_t> arcs;

  [[nodiscard]] bool empty() const { return arcs.empty(); }
};

/// Non-owning chain, as stored inside the segment tree.
struct ArcChainView {
  double x_lo = 0.0;
  double x_hi = -1.0;
  std::span<const double> breakpoints;
  std::span<const std::size_t> arcs;

  ArcChainView() = default;
  ArcChainView(const ArcChain& c) : x_lo(c.x_lo), x_hi(c.x_hi), breakpoints(c.breakpoints), arcs(c.arcs) {}
  ArcChainView(double lo, double hi, std::span<const double> bps, std::span<const std::size_t> a)
      : x_lo(lo), x_hi(hi), breakpoints(bps), arcs(a) {}
  [[nodiscard]] bool empty() const { return arcs.empty(); }
};

/// Common intersection of `disks[order[0]], disks[order[1]], ...`, where
/// `order` lists disks by ascending center x. The disks must be pairwise
/// non-nested and single-intersecting; Error(PrereqViolated) is thrown when a
/// breakpoint computation finds two crossings above the axis. Arc ids in the
/// result are entries of `order`.
ArcChain common_intersection(std::span<const Disk> disks, std::span<const std::size_t> order);

/// Convenience form: `disks` already sorted by center x; arc ids are positions.
ArcChain common_intersection(std::span<const Disk> disks);

/// Membership of a point on/above the axis in the region a chain bounds.
bool point_in_chain(const ArcChainView& chain, std::span<const Disk> disks, const Point& q,
                    double eps = kDefaultEps);

/// Segment tree over point positions [0, n) storing each disk's [a, b] at
/// its canonical nodes, with one ArcChain per node.
class PruneTree {
 public:
  /// `disk_ids` selects which disks take part (ab is parallel to it).
  PruneTree(std::size_t n, std::span<const Disk> disks, std::span<const std::size_t> disk_ids,
            std::span<const ABRecord> ab);

  [[nodiscard]] const RangeTree& shape() const { return shape_; }
  /// Canonical disk list of a node, ascending by center x.
  [[nodiscard]] std::span<const std::size_t> canonical(std::size_t node) const;
  [[nodiscard]] ArcChainView chain(std::size_t node) const;
  [[nodiscard]] std::span<const Disk> disks() const { return disks_; }
  [[nodiscard]] std::size_t stored_disk_count() const { return lists_.size(); }

  /// True iff some canonical set on the root-to-leaf path of position k has
  /// a disk missing `p`.
  [[nodiscard]] bool is_prunable(std::size_t k, const Point& p) const;

 private:
  struct ChainSlot {
    double x_lo = 0.0;
    double x_hi = -1.0;
    std::size_t arc_begin = 0;
    std::size_t arc_count = 0;
    std::size_t bp_begin = 0;
  };

  std::vector<Disk> disks_;
  RangeTree shape_;
  std::vector<std::size_t> list_offset_;  // CSR over lists_, node_count + 1 entries
  std::vector<std::size_t> lists_;
  std::vector<ChainSlot> slots_;
  std::vector<double> breakpoints_;
  std::vector<std::size_t> arcs_;
};

/// Ascending 0-based positions of all prunable points.
std::vector<std::size_t> find_prunable(const PruneTree& tree, std::span<const Point> points);

}  // namespace hitset
