#include "hitset/ab_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hitset/error.hpp"

namespace hitset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x where two congruent lower arcs cross inside [x0, x1], given that their
// order differs at the two ends.
double arc_crossing(const Point& p, const Point& q, double radius, double x0, double x1) {
  const auto hits = circle_intersections({p.x, p.y, radius}, {q.x, q.y, radius});
  if (!hits.empty()) {
    const Point& low = hits.size() == 1 || hits[0].y < hits[1].y ? hits[0] : hits[1];
    if (low.x >= x0 && low.x <= x1) return low.x;
  }
  // Rounding pushed the analytic crossing out of the interval; bisect instead.
  const double sign0 = lower_arc_y(p, radius, x0) - lower_arc_y(q, radius, x0);
  for (int it = 0; it < 200 && x0 < x1; ++it) {
    const double mid = 0.5 * (x0 + x1);
    if (mid <= x0 || mid >= x1) break;
    const double d = lower_arc_y(p, radius, mid) - lower_arc_y(q, radius, mid);
    if ((d < 0.0) == (sign0 < 0.0)) {
      x0 = mid;
    } else {
      x1 = mid;
    }
  }
  return 0.5 * (x0 + x1);
}

}  // namespace

double lower_arc_y(const Point& center, double radius, double x) {
  const double dx = x - center.x;
  const double r2 = radius * radius;
  const double d2 = dx * dx;
  if (d2 > r2 * (1.0 + 1e-12)) return kInf;
  return center.y - std::sqrt(std::max(0.0, r2 - d2));
}

double envelope_height(const EnvelopeChain& chain, std::span<const Point> points, double radius, double x) {
  const auto cell = static_cast<std::size_t>(
      std::upper_bound(chain.breakpoints.begin(), chain.breakpoints.end(), x) - chain.breakpoints.begin());
  const std::size_t piece = chain.pieces[cell];
  if (piece == kNoArc) return 0.0;
  return std::min(0.0, lower_arc_y(points[piece], radius, x));
}

EnvelopeChain leaf_envelope(std::span<const Point> points, std::size_t index, double radius) {
  const Point& p = points[index];
  if (p.y > radius) return {{}, {kNoArc}};
  const double w = std::sqrt(std::max(0.0, radius * radius - p.y * p.y));
  return {{p.x - w, p.x + w}, {kNoArc, index, kNoArc}};
}

EnvelopeChain merge_envelopes(const EnvelopeChain& a, const EnvelopeChain& b, std::span<const Point> points,
                              double radius) {
  EnvelopeChain out;
  out.breakpoints.reserve(a.breakpoints.size() + b.breakpoints.size());
  out.pieces.reserve(a.pieces.size() + b.pieces.size());

  auto emit = [&](double start, std::size_t piece) {
    if (out.pieces.empty()) {
      out.pieces.push_back(piece);
    } else if (out.pieces.back() != piece) {
      out.breakpoints.push_back(start);
      out.pieces.push_back(piece);
    }
  };
  // Lower of two arcs at x; equal heights go to the smaller point index.
  auto lower_at = [&](std::size_t pa, std::size_t pb, double x) {
    const double ya = lower_arc_y(points[pa], radius, x);
    const double yb = lower_arc_y(points[pb], radius, x);
    if (ya != yb) return ya < yb ? pa : pb;
    return std::min(pa, pb);
  };

  std::size_t i = 0;
  std::size_t j = 0;
  double x0 = -kInf;
  while (true) {
    const double na = i < a.breakpoints.size() ? a.breakpoints[i] : kInf;
    const double nb = j < b.breakpoints.size() ? b.breakpoints[j] : kInf;
    const double x1 = std::min(na, nb);
    const std::size_t pa = a.pieces[i];
    const std::size_t pb = b.pieces[j];

    if (pa == kNoArc || pb == kNoArc) {
      emit(x0, pa == kNoArc ? pb : pa);
    } else {
      const std::size_t left = lower_at(pa, pb, x0);
      const std::size_t right = lower_at(pa, pb, x1);
      if (left == right || x0 == x1) {
        emit(x0, left);
      } else {
        emit(x0, left);
        emit(arc_crossing(points[pa], points[pb], radius, x0, x1), right);
      }
    }

    if (x1 == kInf) break;
    if (na == x1) ++i;
    if (nb == x1) ++j;
    x0 = x1;
  }
  return out;
}

EnvelopeTree::EnvelopeTree(std::span<const Point> points, double radius)
    : points_(points.begin(), points.end()), radius_(radius) {
  if (points_.empty()) throw Error(ErrorCode::EmptyPointSet, "cannot build an envelope tree over zero points");
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "envelope radius must be positive");
  shape_ = RangeTree(points_.size());
  chains_.resize(shape_.node_count());
  // Children always have larger ids than their parent.
  for (std::size_t id = shape_.node_count(); id-- > 0;) {
    const RangeTree::Node& v = shape_.node(id);
    if (v.leaf()) {
      chains_[id] = leaf_envelope(points_, v.lo, radius_);
    } else {
      chains_[id] = merge_envelopes(chains_[static_cast<std::size_t>(v.left)],
                                    chains_[static_cast<std::size_t>(v.right)], points_, radius_);
    }
  }
}

bool EnvelopeTree::disk_hits(std::size_t id, const Disk& s, double eps) const {
  const EnvelopeChain& chain = chains_[id];
  const auto& bps = chain.breakpoints;
  const auto lo = static_cast<std::size_t>(std::lower_bound(bps.begin(), bps.end(), s.cx) - bps.begin());
  const auto hi = static_cast<std::size_t>(std::upper_bound(bps.begin(), bps.end(), s.cx) - bps.begin());
  // Cells [lo, hi] touch x = cx; their neighbours are tested too so that an
  // eps-level misplacement of a breakpoint cannot hide a hit.
  const std::size_t first = lo == 0 ? 0 : lo - 1;
  const std::size_t last = std::min(hi + 1, chain.pieces.size() - 1);
  for (std::size_t cell = first; cell <= last; ++cell) {
    const std::size_t piece = chain.pieces[cell];
    if (piece != kNoArc && point_in_disk(points_[piece], s, eps)) return true;
  }
  return false;
}

}  // namespace hitset
