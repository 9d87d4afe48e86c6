#include <doctest.h>

#include <algorithm>
#include <random>

#include "hitset/error.hpp"
#include "hitset/oracle.hpp"
#include "hitset/solver.hpp"
#include "support.hpp"

using namespace hitset;
using test_support::expect_error;

namespace {

const std::vector<Point> kPts{{-1, 0.5}, {0, 2}, {1, 0.5}};
const std::vector<Disk> kDisk{{0, 0, 1.3}};

}  // namespace

TEST_CASE("brute_optimum examples") {
  const OptimumResult r = brute_optimum(kPts, kDisk);
  CHECK(r.size == 1);
  CHECK(r.set.indices == std::vector<std::size_t>{1});
  // any single inside point suffices
  CHECK(point_in_disk(kPts[0], kDisk[0]));
  CHECK(point_in_disk(kPts[2], kDisk[0]));

  const std::vector<Point> one{{0, 0.5}};
  const std::vector<Disk> unit{{0, 0, 1}};
  CHECK(brute_optimum(one, unit).set.indices == std::vector<std::size_t>{1});

  const std::vector<Disk> far{{5, 0, 1}};
  expect_error(ErrorCode::Infeasible, [&] { (void)brute_optimum(one, far); }, 0);
  CHECK(brute_optimum(one, std::vector<Disk>{}).size == 0);

  std::vector<Point> many(21);
  for (std::size_t k = 0; k < many.size(); ++k) many[k] = {static_cast<double>(k), 0.5};
  expect_error(ErrorCode::TooLarge, [&] { (void)brute_optimum(many, unit); });
}

TEST_CASE("brute_ab examples") {
  CHECK(brute_ab(kPts, kDisk) == std::vector<ABRecord>{{0, 2}});
  const std::vector<Disk> big{{0, 0, 10}, {0.5, -1, 8}};
  CHECK(brute_ab(kPts, big) == std::vector<ABRecord>{{0, 2}, {0, 2}});
  const std::vector<Disk> tight{{-1, 0, 0.6}, {0, 0, 0.2}, {1, 0, 0.6}};
  const std::vector<Point> pts{{-1, 0.5}, {0, 0.1}, {1, 0.5}};
  CHECK(brute_ab(pts, tight) == std::vector<ABRecord>{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("brute_prunable examples") {
  const auto ab = brute_ab(kPts, kDisk);
  CHECK(brute_prunable(kPts, kDisk, ab) == std::vector<std::size_t>{1});
  const std::vector<Disk> all{{0, 0, 10}};
  CHECK(brute_prunable(kPts, all, brute_ab(kPts, all)).empty());
  const std::vector<Point> two{{-0.5, 0.5}, {0.5, 0.5}};
  CHECK(brute_prunable(two, kDisk, brute_ab(two, kDisk)).empty());
}

TEST_CASE("hit_sets examples") {
  const HitSets h = hit_sets(kPts, kDisk);
  CHECK(h.disks_of_point[1].empty());
  CHECK(h.disks_of_point[0] == std::vector<std::size_t>{0});
  CHECK(h.points_of_disk[0] == std::vector<std::size_t>{0, 2});
  const std::vector<Disk> all{{0, 0, 10}, {0.5, -1, 8}};
  const HitSets g = hit_sets(kPts, all);
  CHECK(g.disks_of_point[1] == std::vector<std::size_t>{0, 1});
  CHECK(g.points_of_disk[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("generator is deterministic") {
  GenConfig c;
  c.n = 3;
  c.m = 1;
  c.seed = 7;
  for (GenKind kind : {GenKind::line_constrained, GenKind::unit_separable, GenKind::separable_from_constrained}) {
    c.kind = kind;
    CHECK(generate(c) == generate(c));
  }
  GenConfig other = c;
  other.seed = 8;
  CHECK_FALSE(generate(c) == generate(other));
}

TEST_CASE("separable_from_constrained is the reflected constrained instance") {
  GenConfig c;
  c.n = 20;
  c.m = 15;
  c.seed = 99;
  c.kind = GenKind::line_constrained;
  const Instance a = normalize(generate(c));
  c.kind = GenKind::separable_from_constrained;
  const RawInstance b = generate(c);
  CHECK(b.mode == Mode::line_separable);
  CHECK(a.points == normalize(b).points);
}

TEST_CASE("generator guarantees") {
  std::mt19937_64 rng(61);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    GenConfig c;
    c.n = 1 + rng() % 20;
    c.m = 1 + rng() % 20;
    c.seed = seed;
    c.kind = static_cast<GenKind>(seed % 3);
    const RawInstance raw = generate(c);
    CHECK(raw.disks.size() == c.m);
    CHECK(raw.points.size() <= std::max(c.n, c.m));
    const Instance in = normalize(raw);
    const double gap = 1e-6 * c.coord_range;
    std::vector<double> xs;
    for (const Point& p : in.points) {
      xs.push_back(p.x);
      CHECK(p.y >= 0.0);
    }
    for (std::size_t i = 0; i < in.disks.size(); ++i) {
      CHECK(in.disks[i].cy <= 0.0);
      CHECK(in.disks[i].r > 0.0);
      xs.push_back(in.spans[i].xl);
      xs.push_back(in.spans[i].xr);
    }
    std::sort(xs.begin(), xs.end());
    bool spaced = true;
    for (std::size_t t = 1; t < xs.size(); ++t) spaced = spaced && xs[t] - xs[t - 1] >= gap;
    CHECK(spaced);
    if (c.kind == GenKind::unit_separable) {
      for (const Disk& d : in.disks) CHECK(d.r == in.disks.front().r);
    }
    bool feasible = true;
    try {
      (void)brute_ab(in.points, in.disks);
    } catch (const Error&) {
      feasible = false;
    }
    CHECK(feasible);
    if (seed % 50 == 0) CHECK_FALSE(validate_single_intersection(in.disks));
  }
}

TEST_CASE("generator rejects bad configurations") {
  GenConfig c;
  c.coord_range = 0;
  expect_error(ErrorCode::InvalidArgument, [&] { (void)generate(c); });
  c = {};
  c.radius_range = {2, 1};
  expect_error(ErrorCode::InvalidArgument, [&] { (void)generate(c); });
  c = {};
  c.min_x_gap = 0.0;
  expect_error(ErrorCode::InvalidArgument, [&] { (void)generate(c); });
  c = {};
  c.n = 50;
  c.m = 50;
  c.coord_range = 1e-3;
  c.min_x_gap = 1e-3;
  c.max_rounds = 5;
  expect_error(ErrorCode::GenerationFailure, [&] { (void)generate(c); });
}

TEST_CASE("oracle optimum always verifies") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 300; ++t) {
    GenConfig c;
    c.n = 1 + rng() % 14;
    c.m = 1 + rng() % 14;
    c.seed = rng();
    c.kind = static_cast<GenKind>(t % 3);
    const RawInstance raw = generate(c);
    const Instance in = normalize(raw);
    const OptimumResult best = brute_optimum(in.points, in.disks);
    CHECK(best.size == best.set.size());
    CHECK(verify_solution(raw, to_input_order(in, best.set)).ok);
  }
}

TEST_CASE("prunable points are covered by their straddling neighbours") {
  std::mt19937_64 rng(63);
  std::size_t checked = 0;
  for (int t = 0; t < 300; ++t) {
    GenConfig c;
    c.n = 3 + rng() % 30;
    c.m = 1 + rng() % 20;
    c.seed = rng();
    c.kind = static_cast<GenKind>(t % 3);
    const Instance in = normalize(generate(c));
    std::vector<Disk> kept;
    for (std::size_t i : remove_contained(in.spans).kept) kept.push_back(in.disks[i]);
    const auto ab = brute_ab(in.points, kept);
    const HitSets h = hit_sets(in.points, kept);
    for (std::size_t k : brute_prunable(in.points, kept, ab)) {
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (!(ab[i].a < k && k < ab[i].b) || point_in_disk(in.points[k], kept[i])) continue;
        for (std::size_t l : h.points_of_disk[i]) {
          for (std::size_t r : h.points_of_disk[i]) {
            if (!(l < k && k < r)) continue;
            ++checked;
            for (std::size_t s : h.disks_of_point[k]) {
              const bool covered = std::binary_search(h.disks_of_point[l].begin(), h.disks_of_point[l].end(), s) ||
                                   std::binary_search(h.disks_of_point[r].begin(), h.disks_of_point[r].end(), s);
              CHECK(covered);
            }
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}
