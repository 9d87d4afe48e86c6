#include "hitset/ab_index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hitset/error.hpp"

namespace hitset {

RangeTree::RangeTree(std::size_t n) : n_(n) {
  if (n == 0) return;
  nodes_.reserve(2 * n - 1);
  build(0, n - 1);
}

std::size_t RangeTree::build(std::size_t lo, std::size_t hi) {
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{lo, hi, -1, -1});
  if (lo < hi) {
    const std::size_t k = hi - lo + 1;
    const std::size_t mid = lo + (k + 1) / 2 - 1;
    const std::size_t left = build(lo, mid);
    const std::size_t right = build(mid + 1, hi);
    nodes_[id].left = static_cast<std::int32_t>(left);
    nodes_[id].right = static_cast<std::int32_t>(right);
  }
  return id;
}

std::size_t RangeTree::height() const {
  if (nodes_.empty()) return 0;
  std::size_t h = 0;
  for (std::size_t id = 0;;) {
    const Node& v = nodes_[id];
    if (v.leaf()) return h;
    id = static_cast<std::size_t>(v.left);  // left subtrees are never shorter
    ++h;
  }
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Root-to-leaf descent toward the leftmost (or rightmost) leaf whose point
// satisfies `hits`. Assumes the root already hits.
template <class HitFn>
std::size_t descend(const RangeTree& shape, bool leftmost, HitFn&& hits) {
  std::size_t id = 0;
  while (!shape.node(id).leaf()) {
    const RangeTree::Node& v = shape.node(id);
    const auto first = static_cast<std::size_t>(leftmost ? v.left : v.right);
    const auto second = static_cast<std::size_t>(leftmost ? v.right : v.left);
    id = hits(first) ? first : second;
  }
  return shape.node(id).lo;
}

template <class HitFn>
std::vector<ABRecord> extreme_indices(const RangeTree& shape, std::span<const Disk> disks, HitFn&& hits) {
  std::vector<ABRecord> out;
  out.reserve(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Disk& s = disks[i];
    auto node_hits = [&](std::size_t id) { return hits(id, s); };
    if (!node_hits(0)) {
      throw Error(ErrorCode::Infeasible, "disk " + std::to_string(i + 1) + " contains no point", i);
    }
    out.push_back({descend(shape, true, node_hits), descend(shape, false, node_hits)});
  }
  return out;
}

}  // namespace

NNTree::NNTree(std::span<const Point> points) : points_(points.begin(), points.end()) {
  if (points_.empty()) throw Error(ErrorCode::EmptyPointSet, "cannot build a point tree over zero points");
  shape_ = RangeTree(points_.size());
  offset_.assign(shape_.node_count(), npos);

  std::size_t total = 0;
  for (std::size_t id = 0; id < shape_.node_count(); ++id) {
    if (shape_.node(id).size() > kScanCutoff) total += shape_.node(id).size();
  }
  arena_.reserve(total);
  for (std::size_t id = 0; id < shape_.node_count(); ++id) {
    const RangeTree::Node& v = shape_.node(id);
    if (v.size() <= kScanCutoff) continue;
    offset_[id] = arena_.size();
    for (std::size_t k = v.lo; k <= v.hi; ++k) arena_.push_back({points_[k].x, points_[k].y, k});
    build_kd(offset_[id], arena_.size(), 0);
  }
}

void NNTree::build_kd(std::size_t begin, std::size_t end, int axis) {
  if (end - begin <= 1) return;
  const std::size_t mid = begin + (end - begin) / 2;
  auto first = arena_.begin() + static_cast<std::ptrdiff_t>(begin);
  auto last = arena_.begin() + static_cast<std::ptrdiff_t>(end);
  auto nth = arena_.begin() + static_cast<std::ptrdiff_t>(mid);
  if (axis == 0) {
    std::nth_element(first, nth, last, [](const Entry& a, const Entry& b) { return a.x < b.x; });
  } else {
    std::nth_element(first, nth, last, [](const Entry& a, const Entry& b) { return a.y < b.y; });
  }
  build_kd(begin, mid, axis ^ 1);
  build_kd(mid + 1, end, axis ^ 1);
}

void NNTree::nearest_kd(std::size_t begin, std::size_t end, int axis, const Point& q, Nearest& best) const {
  if (begin >= end) return;
  const std::size_t mid = begin + (end - begin) / 2;
  const Entry& e = arena_[mid];
  const double d = sq_dist({e.x, e.y}, q.x, q.y);
  if (d < best.sq_dist || (d == best.sq_dist && e.index < best.index)) best = {e.index, d};
  const double diff = axis == 0 ? q.x - e.x : q.y - e.y;
  const bool go_left = diff <= 0.0;
  if (go_left) {
    nearest_kd(begin, mid, axis ^ 1, q, best);
  } else {
    nearest_kd(mid + 1, end, axis ^ 1, q, best);
  }
  if (diff * diff <= best.sq_dist) {
    if (go_left) {
      nearest_kd(mid + 1, end, axis ^ 1, q, best);
    } else {
      nearest_kd(begin, mid, axis ^ 1, q, best);
    }
  }
}

bool NNTree::hits_kd(std::size_t begin, std::size_t end, int axis, const Disk& s, double threshold) const {
  if (begin >= end) return false;
  const std::size_t mid = begin + (end - begin) / 2;
  const Entry& e = arena_[mid];
  if (sq_dist({e.x, e.y}, s.cx, s.cy) <= threshold) return true;
  const double diff = axis == 0 ? s.cx - e.x : s.cy - e.y;
  const bool go_left = diff <= 0.0;
  if (go_left ? hits_kd(begin, mid, axis ^ 1, s, threshold) : hits_kd(mid + 1, end, axis ^ 1, s, threshold)) {
    return true;
  }
  if (diff * diff > threshold) return false;
  return go_left ? hits_kd(mid + 1, end, axis ^ 1, s, threshold) : hits_kd(begin, mid, axis ^ 1, s, threshold);
}

Nearest NNTree::nearest(std::size_t id, const Point& q) const {
  const RangeTree::Node& v = shape_.node(id);
  Nearest best;
  if (offset_[id] == npos) {
    for (std::size_t k = v.lo; k <= v.hi; ++k) {
      const double d = sq_dist(points_[k], q.x, q.y);
      if (d < best.sq_dist) best = {k, d};
    }
    return best;
  }
  nearest_kd(offset_[id], offset_[id] + v.size(), 0, q, best);
  return best;
}

bool NNTree::disk_hits(std::size_t id, const Disk& s, double eps) const {
  const RangeTree::Node& v = shape_.node(id);
  const double threshold = hit_threshold(s, eps);
  if (offset_[id] == npos) {
    for (std::size_t k = v.lo; k <= v.hi; ++k) {
      if (sq_dist(points_[k], s.cx, s.cy) <= threshold) return true;
    }
    return false;
  }
  return hits_kd(offset_[id], offset_[id] + v.size(), 0, s, threshold);
}

std::vector<ABRecord> compute_ab(const NNTree& tree, std::span<const Disk> disks) {
  return extreme_indices(tree.shape(), disks,
                         [&](std::size_t id, const Disk& s) { return tree.disk_hits(id, s); });
}

std::vector<ABRecord> compute_ab_unit(const EnvelopeTree& tree, std::span<const Disk> disks) {
  const double radius = tree.radius();
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (std::abs(disks[i].r - radius) > 1e-9 * radius) {
      throw Error(ErrorCode::RadiusMismatch,
                  "disk " + std::to_string(i + 1) + " radius differs from the common radius", i);
    }
  }
  return extreme_indices(tree.shape(), disks,
                         [&](std::size_t id, const Disk& s) { return tree.disk_hits(id, s); });
}

}  // namespace hitset
