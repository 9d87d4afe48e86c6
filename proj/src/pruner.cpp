#include "hitset/pruner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hitset/error.hpp"

namespace hitset {

namespace {

// Breakpoint between the arc on top of the stack (surviving at `from`) and
// a new disk that undercuts it before `to`.
double arc_breakpoint(const Disk& old_disk, std::size_t old_id, const Disk& new_disk, std::size_t new_id,
                      double from, double to) {
  const auto pts = circle_intersections(old_disk, new_disk);
  const double tol = 1e-9 * std::max(old_disk.r, new_disk.r);
  int above = 0;
  for (const Point& p : pts) {
    if (p.y > tol) ++above;
  }
  if (above >= 2) {
    throw Error(ErrorCode::PrereqViolated,
                "disks " + std::to_string(old_id + 1) + " and " + std::to_string(new_id + 1) +
                    " cross twice above the separating line",
                old_id);
  }
  if (pts.empty()) return from;
  const Point& top = pts.size() == 1 || pts[0].y >= pts[1].y ? pts[0] : pts[1];
  return std::clamp(top.x, from, to);
}

}  // namespace

ArcChain common_intersection(std::span<const Disk> disks, std::span<const std::size_t> order) {
  ArcChain chain;
  if (order.empty()) return chain;

  std::vector<DiskSpan> spans(order.size());
  double x_lo = -std::numeric_limits<double>::infinity();
  double x_hi = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < order.size(); ++t) {
    spans[t] = disk_span(disks[order[t]]);
    x_lo = std::max(x_lo, spans[t].xl);
    x_hi = std::min(x_hi, spans[t].xr);
  }
  chain.x_lo = x_lo;
  chain.x_hi = x_hi;
  if (x_lo > x_hi) return chain;

  // Larger center x shows up further left on the boundary, so walk the disks
  // from right to left and grow the chain at its right end. Each stack entry
  // is an arc and the x where its cell starts.
  struct Entry {
    std::size_t id;
    double start;
  };
  std::vector<Entry> stack;
  stack.reserve(order.size());
  stack.push_back({order.back(), x_lo});

  for (std::size_t t = order.size() - 1; t-- > 0;) {
    const std::size_t id = order[t];
    const Disk& d = disks[id];
    const double right = spans[t].xr;
    while (stack.size() > 1 && stack.back().start >= right) stack.pop_back();
    while (true) {
      const Entry& top = stack.back();
      const Disk& top_disk = disks[top.id];
      const Point at_start{top.start, upper_arc_y(top_disk, top.start)};
      if (point_in_disk(at_start, d)) {
        // Old arc still lowest at its start: it survives up to the crossing.
        const double x = arc_breakpoint(top_disk, top.id, d, id, top.start, right);
        stack.push_back({id, x});
        break;
      }
      if (stack.size() == 1) {
        stack.back() = {id, x_lo};
        break;
      }
      stack.pop_back();
    }
  }

  chain.arcs.reserve(stack.size());
  chain.breakpoints.reserve(stack.size() - 1);
  for (std::size_t k = 0; k < stack.size(); ++k) {
    if (k > 0) chain.breakpoints.push_back(stack[k].start);
    chain.arcs.push_back(stack[k].id);
  }
  return chain;
}

ArcChain common_intersection(std::span<const Disk> disks) {
  std::vector<std::size_t> order(disks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return common_intersection(disks, order);
}

bool point_in_chain(const ArcChainView& chain, std::span<const Disk> disks, const Point& q, double eps) {
  if (chain.empty() || q.y < 0.0 || q.x < chain.x_lo || q.x > chain.x_hi) return false;
  const auto& bps = chain.breakpoints;
  const auto cell = static_cast<std::size_t>(std::upper_bound(bps.begin(), bps.end(), q.x) - bps.begin());
  if (!point_in_disk(q, disks[chain.arcs[cell]], eps)) return false;
  // Next to a vertex both arcs bound the region; check the neighbour as well.
  const double near = 1e-9 * (1.0 + std::abs(q.x));
  if (cell > 0 && q.x - bps[cell - 1] <= near && !point_in_disk(q, disks[chain.arcs[cell - 1]], eps)) {
    return false;
  }
  if (cell < bps.size() && bps[cell] - q.x <= near && !point_in_disk(q, disks[chain.arcs[cell + 1]], eps)) {
    return false;
  }
  return true;
}

PruneTree::PruneTree(std::size_t n, std::span<const Disk> disks, std::span<const std::size_t> disk_ids,
                     std::span<const ABRecord> ab)
    : disks_(disks.begin(), disks.end()), shape_(n) {
  if (disk_ids.size() != ab.size()) {
    throw Error(ErrorCode::InvalidArgument, "disk id list and ab records differ in length");
  }
  const std::size_t nodes = shape_.node_count();
  list_offset_.assign(nodes + 1, 0);
  slots_.resize(nodes);
  if (n == 0) return;

  std::vector<std::size_t> by_center(disk_ids.size());
  std::iota(by_center.begin(), by_center.end(), std::size_t{0});
  std::sort(by_center.begin(), by_center.end(), [&](std::size_t s, std::size_t t) {
    const double cs = disks_[disk_ids[s]].cx;
    const double ct = disks_[disk_ids[t]].cx;
    return cs != ct ? cs < ct : disk_ids[s] < disk_ids[t];
  });

  // Standard segment-tree decomposition of [a, b] into canonical nodes.
  std::vector<std::size_t> pending;
  auto for_each_canonical = [&](const ABRecord& r, auto&& visit) {
    pending.clear();
    pending.push_back(0);
    while (!pending.empty()) {
      const std::size_t id = pending.back();
      pending.pop_back();
      const RangeTree::Node& v = shape_.node(id);
      if (r.b < v.lo || v.hi < r.a) continue;
      if (r.a <= v.lo && v.hi <= r.b) {
        visit(id);
        continue;
      }
      pending.push_back(static_cast<std::size_t>(v.right));
      pending.push_back(static_cast<std::size_t>(v.left));
    }
  };

  for (std::size_t s : by_center) {
    for_each_canonical(ab[s], [&](std::size_t id) { ++list_offset_[id + 1]; });
  }
  std::partial_sum(list_offset_.begin(), list_offset_.end(), list_offset_.begin());
  lists_.resize(list_offset_.back());
  std::vector<std::size_t> fill(list_offset_.begin(), list_offset_.end() - 1);
  for (std::size_t s : by_center) {
    for_each_canonical(ab[s], [&](std::size_t id) { lists_[fill[id]++] = disk_ids[s]; });
  }

  for (std::size_t id = 0; id < nodes; ++id) {
    const auto list = canonical(id);
    if (list.empty()) continue;
    const ArcChain c = common_intersection(disks_, list);
    ChainSlot& slot = slots_[id];
    slot.x_lo = c.x_lo;
    slot.x_hi = c.x_hi;
    slot.arc_begin = arcs_.size();
    slot.arc_count = c.arcs.size();
    slot.bp_begin = breakpoints_.size();
    arcs_.insert(arcs_.end(), c.arcs.begin(), c.arcs.end());
    breakpoints_.insert(breakpoints_.end(), c.breakpoints.begin(), c.breakpoints.end());
  }
}

std::span<const std::size_t> PruneTree::canonical(std::size_t node) const {
  return std::span<const std::size_t>(lists_).subspan(list_offset_[node],
                                                      list_offset_[node + 1] - list_offset_[node]);
}

ArcChainView PruneTree::chain(std::size_t node) const {
  const ChainSlot& slot = slots_[node];
  const std::size_t bp_count = slot.arc_count == 0 ? 0 : slot.arc_count - 1;
  return {slot.x_lo, slot.x_hi, std::span<const double>(breakpoints_).subspan(slot.bp_begin, bp_count),
          std::span<const std::size_t>(arcs_).subspan(slot.arc_begin, slot.arc_count)};
}

bool PruneTree::is_prunable(std::size_t k, const Point& p) const {
  if (shape_.node_count() == 0) return false;
  std::size_t id = 0;
  while (true) {
    if (list_offset_[id + 1] > list_offset_[id] && !point_in_chain(chain(id), disks_, p)) return true;
    const RangeTree::Node& v = shape_.node(id);
    if (v.leaf()) return false;
    const RangeTree::Node& left = shape_.node(static_cast<std::size_t>(v.left));
    id = static_cast<std::size_t>(k <= left.hi ? v.left : v.right);
  }
}

std::vector<std::size_t> find_prunable(const PruneTree& tree, std::span<const Point> points) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (tree.is_prunable(k, points[k])) out.push_back(k);
  }
  return out;
}

}  // namespace hitset
