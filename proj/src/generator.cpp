#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hitset/error.hpp"
#include "hitset/oracle.hpp"

namespace hitset {

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::line_constrained: return "line_constrained";
    case GenKind::unit_separable: return "unit_separable";
    case GenKind::separable_from_constrained: return "separable_from_constrained";
  }
  return "unknown";
}

std::optional<GenKind> parse_gen_kind(std::string_view text) {
  if (text == "line_constrained") return GenKind::line_constrained;
  if (text == "unit_separable") return GenKind::unit_separable;
  if (text == "separable_from_constrained") return GenKind::separable_from_constrained;
  return std::nullopt;
}

namespace {

// mt19937_64 is fully specified; the conversions below avoid the
// implementation-defined std distributions so output is portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct Coverage {
  std::vector<std::size_t> empty_disks;
  std::vector<char> free_point;  // hits no disk on its own
};

Coverage coverage(const std::vector<Point>& points, const std::vector<Disk>& disks) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
  std::vector<double> xs(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) xs[t] = points[order[t]].x;

  Coverage cov;
  cov.free_point.assign(points.size(), 1);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const DiskSpan sp = disk_span(disks[i]);
    std::size_t count = 0;
    std::size_t first = 0;
    for (auto t = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), sp.xl) - xs.begin());
         t < xs.size() && xs[t] <= sp.xr && count < 2; ++t) {
      const Point& p = points[order[t]];
      if (point_in_disk({p.x, std::abs(p.y)}, disks[i])) {
        if (count == 0) first = order[t];
        ++count;
      }
    }
    if (count == 0) cov.empty_disks.push_back(i);
    if (count == 1) cov.free_point[first] = 0;
  }
  return cov;
}

// Indices of items whose x lies within `gap` of a smaller x. Points come
// first (0..n-1), then disks (n..n+m-1).
std::vector<std::size_t> crowded(const std::vector<Point>& points, const std::vector<Disk>& disks, double gap) {
  struct Key {
    double x;
    std::size_t owner;
  };
  std::vector<Key> keys;
  keys.reserve(points.size() + 2 * disks.size());
  for (std::size_t k = 0; k < points.size(); ++k) keys.push_back({points[k].x, k});
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const DiskSpan sp = disk_span(disks[i]);
    keys.push_back({sp.xl, points.size() + i});
    keys.push_back({sp.xr, points.size() + i});
  }
  std::sort(keys.begin(), keys.end(),
            [](const Key& a, const Key& b) { return a.x != b.x ? a.x < b.x : a.owner < b.owner; });
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t < keys.size(); ++t) {
    if (keys[t].x - keys[t - 1].x < gap) out.push_back(keys[t].owner);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RawInstance generate(const GenConfig& config) {
  const double range = config.coord_range;
  const auto [r_lo, r_hi] = config.radius_range;
  const double gap = config.min_x_gap.value_or(1e-6 * range);
  if (!(range > 0.0) || !(r_lo > 0.0) || !(r_hi >= r_lo) || !(gap > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "invalid generator configuration");
  }

  Rng rng(config.seed);
  const bool unit = config.kind == GenKind::unit_separable;
  const double unit_radius = unit ? rng.uniform(r_lo, r_hi) : 0.0;

  auto sample_disk = [&]() -> Disk {
    if (unit) return {rng.uniform(-range, range), rng.uniform(-0.8 * unit_radius, 0.0), unit_radius};
    return {rng.uniform(-range, range), 0.0, rng.uniform(r_lo, r_hi)};
  };
  auto sample_point = [&]() -> Point {
    return {rng.uniform(-range, range), unit ? rng.uniform(0.0, range) : rng.uniform(-range, range)};
  };
  auto sample_inside = [&](const Disk& d) -> Point {
    const DiskSpan sp = disk_span(d);
    while (true) {
      const Point p{rng.uniform(sp.xl, sp.xr), rng.uniform(0.0, d.cy + d.r)};
      if (!point_in_disk(p, d)) continue;
      if (!unit && rng.coin()) return {p.x, -p.y};
      return p;
    }
  };

  std::vector<Disk> disks(config.m);
  for (Disk& d : disks) d = sample_disk();
  std::vector<Point> points(config.n);
  for (Point& p : points) p = sample_point();

  bool done = false;
  for (std::size_t round = 0; round < config.max_rounds && !done; ++round) {
    if (const auto bad = crowded(points, disks, gap); !bad.empty()) {
      for (std::size_t owner : bad) {
        if (owner < points.size()) {
          points[owner] = sample_point();
        } else {
          disks[owner - points.size()] = sample_disk();
        }
      }
      continue;
    }
    Coverage cov = coverage(points, disks);
    if (cov.empty_disks.empty()) {
      done = true;
      break;
    }
    std::vector<char> moved(points.size(), 0);
    for (std::size_t i : cov.empty_disks) {
      std::optional<std::size_t> pick;
      if (!points.empty()) {
        for (int attempt = 0; attempt < 64 && !pick; ++attempt) {
          const std::size_t k = rng.below(points.size());
          if (cov.free_point[k] && !moved[k]) pick = k;
        }
        if (!pick) {
          const std::size_t start = rng.below(points.size());
          for (std::size_t s = 0; s < points.size() && !pick; ++s) {
            const std::size_t k = (start + s) % points.size();
            if (cov.free_point[k] && !moved[k]) pick = k;
          }
        }
      }
      if (pick) {
        points[*pick] = sample_inside(disks[i]);
        moved[*pick] = 1;
      } else {
        points.push_back(sample_inside(disks[i]));
        moved.push_back(1);
        cov.free_point.push_back(0);
      }
    }
  }
  if (!done) {
    throw Error(ErrorCode::GenerationFailure,
                "no valid instance after " + std::to_string(config.max_rounds) + " repair rounds");
  }

  RawInstance out;
  out.disks = std::move(disks);
  out.points = std::move(points);
  out.mode = config.kind == GenKind::line_constrained ? Mode::line_constrained : Mode::line_separable;
  if (config.kind == GenKind::separable_from_constrained) {
    for (Point& p : out.points) p.y = std::abs(p.y);
  }
  return out;
}

}  // namespace hitset
