#include "hitset/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hitset/error.hpp"

namespace hitset {

const char* to_string(Mode mode) {
  return mode == Mode::line_constrained ? "line_constrained" : "line_separable";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "line_constrained") return Mode::line_constrained;
  if (text == "line_separable") return Mode::line_separable;
  return std::nullopt;
}

DiskSpan disk_span(const Disk& s) {
  const double h2 = s.r * s.r - s.cy * s.cy;
  if (!(s.r > 0.0) || !(h2 > 0.0)) {
    throw Error(ErrorCode::DegenerateDisk, "disk does not reach above the separating line");
  }
  const double h = std::sqrt(h2);
  return {s.cx - h, s.cx + h};
}

double upper_arc_y(const Disk& s, double x) {
  const double dx = x - s.cx;
  return s.cy + std::sqrt(std::max(0.0, s.r * s.r - dx * dx));
}

std::vector<Point> circle_intersections(const Disk& a, const Disk& b) {
  const double dx = b.cx - a.cx;
  const double dy = b.cy - a.cy;
  const double d2 = dx * dx + dy * dy;
  if (d2 == 0.0) return {};
  const double d = std::sqrt(d2);
  const double along = (d2 + a.r * a.r - b.r * b.r) / (2.0 * d);
  double h2 = a.r * a.r - along * along;
  const double tol = 1e-12 * std::max(a.r * a.r, b.r * b.r);
  if (h2 < -tol) return {};
  const double ux = dx / d;
  const double uy = dy / d;
  const double bx = a.cx + along * ux;
  const double by = a.cy + along * uy;
  if (h2 <= tol) return {Point{bx, by}};
  const double h = std::sqrt(h2);
  return {Point{bx - h * uy, by + h * ux}, Point{bx + h * uy, by - h * ux}};
}

namespace {

void require_finite(double v, const char* what, std::size_t index) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, std::string("non-finite coordinate in ") + what, index);
  }
}

}  // namespace

Instance normalize(std::span<const Point> points, std::span<const Disk> disks, Mode mode) {
  Instance out;
  out.mode = mode;

  std::vector<Point> pts(points.begin(), points.end());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    require_finite(pts[k].x, "point", k);
    require_finite(pts[k].y, "point", k);
    if (pts[k].y < 0.0) {
      if (mode == Mode::line_constrained) {
        pts[k].y = -pts[k].y;
      } else {
        throw Error(ErrorCode::NotSeparable,
                    "point " + std::to_string(k + 1) + " lies below the separating line", k);
      }
    }
  }

  std::vector<Disk> dks(disks.begin(), disks.end());
  std::vector<DiskSpan> spans(dks.size());
  for (std::size_t i = 0; i < dks.size(); ++i) {
    Disk& s = dks[i];
    require_finite(s.cx, "disk", i);
    require_finite(s.cy, "disk", i);
    require_finite(s.r, "disk", i);
    if (!(s.r > 0.0)) {
      throw Error(ErrorCode::DegenerateDisk, "disk " + std::to_string(i + 1) + " has non-positive radius", i);
    }
    if (mode == Mode::line_constrained) {
      if (std::abs(s.cy) > 1e-9 * std::max(1.0, s.r)) {
        throw Error(ErrorCode::NotSeparable,
                    "disk " + std::to_string(i + 1) + " is not centered on the line", i);
      }
      s.cy = 0.0;
    } else if (s.cy > 0.0) {
      throw Error(ErrorCode::NotSeparable,
                  "disk " + std::to_string(i + 1) + " has its center above the separating line", i);
    }
    if (!(s.cy + s.r > 0.0)) {
      throw Error(ErrorCode::DegenerateDisk,
                  "disk " + std::to_string(i + 1) + " does not reach above the separating line", i);
    }
    try {
      spans[i] = disk_span(s);
    } catch (const Error&) {
      throw Error(ErrorCode::DegenerateDisk,
                  "disk " + std::to_string(i + 1) + " does not reach above the separating line", i);
    }
  }

  // General position: all point x's and span endpoints pairwise distinct.
  struct Key {
    double x;
    bool is_disk;
    std::size_t index;
  };
  std::vector<Key> keys;
  keys.reserve(pts.size() + 2 * spans.size());
  for (std::size_t k = 0; k < pts.size(); ++k) keys.push_back({pts[k].x, false, k});
  for (std::size_t i = 0; i < spans.size(); ++i) {
    keys.push_back({spans[i].xl, true, i});
    keys.push_back({spans[i].xr, true, i});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) { return a.x < b.x; });
  for (std::size_t t = 1; t < keys.size(); ++t) {
    if (keys[t].x == keys[t - 1].x) {
      const Key& k = keys[t];
      throw Error(ErrorCode::DuplicateX,
                  std::string("x-coordinate ") + std::to_string(k.x) + " of " + (k.is_disk ? "disk " : "point ") +
                      std::to_string(k.index + 1) + " is shared with another point or span endpoint",
                  k.index);
    }
  }

  out.point_origin.resize(pts.size());
  std::iota(out.point_origin.begin(), out.point_origin.end(), std::size_t{0});
  std::sort(out.point_origin.begin(), out.point_origin.end(),
            [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
  out.points.reserve(pts.size());
  for (std::size_t k : out.point_origin) out.points.push_back(pts[k]);

  out.disk_origin.resize(dks.size());
  std::iota(out.disk_origin.begin(), out.disk_origin.end(), std::size_t{0});
  std::sort(out.disk_origin.begin(), out.disk_origin.end(),
            [&](std::size_t a, std::size_t b) { return spans[a].xl < spans[b].xl; });
  out.disks.reserve(dks.size());
  out.spans.reserve(dks.size());
  for (std::size_t i : out.disk_origin) {
    out.disks.push_back(dks[i]);
    out.spans.push_back(spans[i]);
  }
  return out;
}

Instance normalize(const RawInstance& raw) { return normalize(raw.points, raw.disks, raw.mode); }

ContainmentResult remove_contained(std::span<const DiskSpan> spans) {
  const std::size_t m = spans.size();
  ContainmentResult result;
  if (m == 0) return result;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (spans[a].xl != spans[b].xl) return spans[a].xl < spans[b].xl;
    if (spans[a].xr != spans[b].xr) return spans[a].xr > spans[b].xr;
    return a < b;
  });

  // Identical spans: the first (smallest position) represents the group.
  std::vector<std::size_t> reps;
  std::vector<std::size_t> rep_of(m);
  for (std::size_t t = 0; t < m; ++t) {
    const std::size_t i = order[t];
    if (!reps.empty() && spans[reps.back()] == spans[i]) {
      rep_of[i] = reps.back();
    } else {
      reps.push_back(i);
      rep_of[i] = i;
    }
  }

  // Reps are ordered by (xl asc, xr desc), so everything a rep may contain
  // comes after it. Scan backwards keeping the smallest xr seen; that disk
  // contains nothing later and is therefore kept.
  std::vector<char> kept(m, 0);
  std::optional<std::size_t> best;
  for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
    const std::size_t i = *it;
    if (best && spans[*best].xr <= spans[i].xr) {
      result.witness[i] = *best;
    } else {
      kept[i] = 1;
      best = i;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (rep_of[i] == i) continue;
    const std::size_t rep = rep_of[i];
    result.witness[i] = kept[rep] ? rep : result.witness.at(rep);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (kept[i]) result.kept.push_back(i);
  }
  return result;
}

ContainmentResult remove_contained(std::span<const Disk> disks) {
  std::vector<DiskSpan> spans;
  spans.reserve(disks.size());
  for (const Disk& s : disks) spans.push_back(disk_span(s));
  return remove_contained(spans);
}

std::optional<std::pair<std::size_t, std::size_t>> validate_single_intersection(std::span<const Disk> disks,
                                                                                double eps) {
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const double tol = eps * std::max(disks[i].r, disks[j].r);
      int above = 0;
      for (const Point& p : circle_intersections(disks[i], disks[j])) {
        if (p.y > tol) ++above;
      }
      if (above >= 2) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace hitset
