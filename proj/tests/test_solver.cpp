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

const RawInstance kWorked{{{-1, 0.5}, {0, 2}, {1, 0.5}}, {{0, 0, 1.3}}, Mode::line_separable};
const RawInstance kTwoDisks{{{-1.2, 0.1}, {0, 0.3}, {1.2, 0.1}}, {{-0.5, 0, 1}, {0.5, 0, 1}}, Mode::line_separable};

}  // namespace

TEST_CASE("reduce_to_1d on the worked instance") {
  const Instance in = normalize(kWorked);
  const std::vector<std::size_t> ids{0};
  const std::vector<ABRecord> ab{{0, 2}};
  const std::vector<std::size_t> pruned{1};
  const OneDInstance d = reduce_to_1d(in, ids, ab, pruned);
  CHECK(d.candidates == std::vector<double>{-1, 1});
  CHECK(d.candidate_point == std::vector<std::size_t>{0, 2});
  REQUIRE(d.segments.size() == 1);
  CHECK(d.segments[0].left == -1);
  CHECK(d.segments[0].right == 1);

  const OneDInstance all = reduce_to_1d(in, ids, ab, {});
  CHECK(all.candidates == std::vector<double>{-1, 0, 1});
  CHECK(reduce_to_1d(in, {}, {}, {}).segments.empty());
}

TEST_CASE("solve_1d examples") {
  {
    OneDInstance d;
    d.candidates = {1, 3, 5};
    d.candidate_point = {0, 1, 2};
    d.segments = {{0, 2, 0}, {2, 4, 1}, {4, 6, 2}};
    CHECK(test_support::exhaustive_stab({1, 3, 5}, {{0, 2}, {2, 4}, {4, 6}}) == 3);
    CHECK(solve_1d(d).indices == std::vector<std::size_t>{1, 2, 3});
  }
  {
    OneDInstance d;
    d.candidates = {3};
    d.candidate_point = {0};
    d.segments = {{0, 4, 0}, {2, 6, 1}};
    CHECK(solve_1d(d).indices == std::vector<std::size_t>{1});
  }
  {
    OneDInstance d;
    d.candidates = {3};
    d.candidate_point = {0};
    CHECK(solve_1d(d).indices.empty());
  }
  {
    OneDInstance d;
    d.candidates = {3};
    d.candidate_point = {0};
    d.segments = {{4, 5, 0}};
    expect_error(ErrorCode::Infeasible1D, [&] { (void)solve_1d(d); });
  }
}

TEST_CASE("solve_1d picks the rightmost candidate") {
  OneDInstance d;
  d.candidates = {0, 1, 2, 3};
  d.candidate_point = {0, 1, 2, 3};
  d.segments = {{0, 2.5, 0}};
  CHECK(solve_1d(d).indices == std::vector<std::size_t>{3});
}

TEST_CASE("solve_1d is optimal on random instances") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0, 20);
  for (int t = 0; t < 500; ++t) {
    OneDInstance d;
    const std::size_t c = 1 + rng() % 12;
    for (std::size_t k = 0; k < c; ++k) d.candidates.push_back(u(rng));
    std::sort(d.candidates.begin(), d.candidates.end());
    for (std::size_t k = 0; k < c; ++k) d.candidate_point.push_back(k);
    std::vector<std::pair<double, double>> segs;
    const std::size_t m = rng() % 12;
    for (std::size_t i = 0; i < m; ++i) {
      const double at = d.candidates[rng() % c];
      const double l = at - u(rng) / 4;
      const double r = at + u(rng) / 4;
      segs.emplace_back(l, r);
      d.segments.push_back({l, r, i});
    }
    const HittingSet h = solve_1d(d);
    CHECK(h.size() == test_support::exhaustive_stab(d.candidates, segs));
  }
}

TEST_CASE("solve on the worked instances") {
  CHECK(solve_raw(kWorked).indices == std::vector<std::size_t>{3});
  CHECK(solve_raw(kTwoDisks).indices == std::vector<std::size_t>{2});
  CHECK(brute_optimum(normalize(kWorked).points, normalize(kWorked).disks).size == 1);
  CHECK(brute_optimum(normalize(kTwoDisks).points, normalize(kTwoDisks).disks).size == 1);
  CHECK(solve_raw({{{0, 1}}, {}, Mode::line_separable}).indices.empty());

  const SolveTrace trace = solve_traced(normalize(kWorked));
  CHECK(trace.ab == std::vector<ABRecord>{{0, 2}});
  CHECK(trace.prunable == std::vector<std::size_t>{1});
}

TEST_CASE("solve reports input positions") {
  // Points and disks given out of x-order.
  const RawInstance raw{{{1, 0.5}, {0, 2}, {-1, 0.5}}, {{5, 0, 0.5}, {0, 0, 1.3}}, Mode::line_separable};
  expect_error(ErrorCode::Infeasible, [&] { (void)solve_raw(raw); }, 0);
  RawInstance ok = raw;
  ok.disks[0] = {1.1, 0, 0.6};
  CHECK(solve_raw(ok).indices == std::vector<std::size_t>{1});
}

TEST_CASE("solve option checks") {
  const RawInstance unit{{{0, 1}, {1, 1}}, {{0, 0, 2}, {1, -0.5, 2}}, Mode::line_separable};
  SolveOptions opt;
  opt.unit_radius = 2.0;
  CHECK(solve_raw(unit, opt) == solve_raw(unit));
  opt.unit_radius = 1.5;
  expect_error(ErrorCode::RadiusMismatch, [&] { (void)solve_raw(unit, opt); });

  SolveOptions check;
  check.validate = true;
  const RawInstance twice{{{0, 1.2}}, {{0, -0.1, 2}, {0.001, -3, 4.5}}, Mode::line_separable};
  expect_error(ErrorCode::PrereqViolated, [&] { (void)solve_raw(twice, check); });
  expect_error(ErrorCode::Infeasible, [&] { (void)solve_raw({{}, {{0, 0, 1}}, Mode::line_separable}); }, 0);
}

TEST_CASE("verify_solution") {
  CHECK(verify_solution(kWorked, {{3}}).ok);
  const VerifyResult empty = verify_solution({{{0, 0.5}}, {{0, 0, 1}}, Mode::line_separable}, {});
  CHECK_FALSE(empty.ok);
  CHECK(empty.unhit_disk == 0u);
  CHECK(verify_solution(kTwoDisks, {{1, 2, 3}}).ok);
  CHECK_FALSE(verify_solution(kWorked, {{2}}).ok);
  CHECK_FALSE(verify_solution(kWorked, {{4}}).ok);
  // reflected point
  CHECK(verify_solution({{{0, -0.5}}, {{0, 0, 1}}, Mode::line_constrained}, {{1}}).ok);
}

TEST_CASE("solve is optimal and feasible on small random instances") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    GenConfig c;
    c.n = 1 + rng() % 12;
    c.m = 1 + rng() % 12;
    c.seed = rng();
    c.kind = static_cast<GenKind>(t % 3);
    c.coord_range = 5;
    const RawInstance raw = generate(c);
    const HittingSet h = solve_raw(raw);
    CHECK(verify_solution(raw, h).ok);
    const Instance in = normalize(raw);
    CHECK(h.size() == brute_optimum(in.points, in.disks).size);
  }
}

TEST_CASE("unit solve agrees with the general solve") {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 100; ++t) {
    GenConfig c;
    c.n = 1 + rng() % 60;
    c.m = 1 + rng() % 60;
    c.seed = rng();
    c.kind = GenKind::unit_separable;
    const RawInstance raw = generate(c);
    SolveOptions opt;
    opt.unit_radius = raw.disks.front().r;
    CHECK(solve_raw(raw, opt) == solve_raw(raw));
  }
}

TEST_CASE("stage timings add up") {
  GenConfig c;
  c.n = 2000;
  c.m = 2000;
  c.seed = 3;
  StageTimings t;
  (void)solve_raw(generate(c), {}, &t);
  const std::int64_t parts = t.normalize + t.filter + t.ab + t.prune + t.reduce + t.oned;
  CHECK(parts <= t.total);
  CHECK(t.ab > 0);
}

TEST_CASE("general separable instances with mixed radii and sunken centers") {
  // None of the generator kinds mixes radii with centers below the axis, so
  // build such instances here and keep the ones with single crossings.
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-6, 6);
  std::uniform_real_distribution<double> ur(1, 4);
  std::uniform_real_distribution<double> frac(0, 0.7);
  std::size_t tried = 0;
  std::size_t pruned = 0;
  for (int t = 0; tried < 400 && t < 20000; ++t) {
    RawInstance raw;
    raw.mode = Mode::line_separable;
    const std::size_t m = 1 + rng() % 10;
    const std::size_t n = 1 + rng() % 12;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = ur(rng);
      raw.disks.push_back({u(rng), -frac(rng) * r, r});
    }
    for (std::size_t k = 0; k < n; ++k) raw.points.push_back({u(rng), std::abs(u(rng)) / 2});
    Instance in;
    try {
      in = normalize(raw);
    } catch (const Error&) {
      continue;
    }
    if (validate_single_intersection(in.disks)) continue;
    bool feasible = true;
    for (const Disk& d : in.disks) {
      feasible = feasible && std::any_of(in.points.begin(), in.points.end(),
                                         [&](const Point& p) { return point_in_disk(p, d); });
    }
    if (!feasible) continue;
    ++tried;
    const SolveTrace trace = solve_traced(in);
    pruned += trace.prunable.size();
    std::vector<Disk> kept;
    for (std::size_t i : trace.filter.kept) kept.push_back(in.disks[i]);
    CHECK(trace.ab == brute_ab(in.points, kept));
    CHECK(trace.prunable == brute_prunable(in.points, kept, trace.ab));
    CHECK(trace.solution.size() == brute_optimum(in.points, in.disks).size);
    CHECK(verify_solution(raw, to_input_order(in, trace.solution)).ok);
  }
  CHECK(tried == 400);
  CHECK(pruned > 0);
}
