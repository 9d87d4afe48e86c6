#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hitset/ab_index.hpp"
#include "hitset/oracle.hpp"

using namespace hitset;

namespace {

// min(0, lower arcs of every point in [lo, hi]) evaluated directly.
double direct_envelope(std::span<const Point> pts, std::size_t lo, std::size_t hi, double r, double x) {
  double y = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) {
    const double dx = x - pts[k].x;
    if (dx * dx <= r * r) y = std::min(y, pts[k].y - std::sqrt(r * r - dx * dx));
  }
  return y;
}

}  // namespace

TEST_CASE("leaf envelope of a single point") {
  const std::vector<Point> pts{{0, 1}};
  const EnvelopeChain c = leaf_envelope(pts, 0, 2);
  const double w = std::sqrt(4.0 - 1.0);
  REQUIRE(c.breakpoints.size() == 2);
  CHECK(c.breakpoints[0] == doctest::Approx(-w));
  CHECK(c.breakpoints[1] == doctest::Approx(w));
  CHECK(c.pieces == std::vector<std::size_t>{kNoArc, 0, kNoArc});
  CHECK(envelope_height(c, pts, 2, 0) == doctest::Approx(-1));
  CHECK(envelope_height(c, pts, 2, 5) == 0.0);
  CHECK(envelope_height(c, pts, 2, -1.8) == 0.0);
  for (double x : {-1.7, -1.0, 0.3, 1.2}) {
    CHECK(envelope_height(c, pts, 2, x) == doctest::Approx(direct_envelope(pts, 0, 0, 2, x)));
  }
}

TEST_CASE("tangent circle touches the axis at one x") {
  const std::vector<Point> pts{{0, 1}};
  const EnvelopeChain c = leaf_envelope(pts, 0, 1);
  CHECK(c.breakpoints.size() == 2);
  CHECK(c.breakpoints[0] == c.breakpoints[1]);
  CHECK(envelope_height(c, pts, 1, 0.5) == 0.0);
  CHECK(envelope_height(c, pts, 1, -0.5) == 0.0);
  CHECK(envelope_height(c, pts, 1, 0) == doctest::Approx(0.0));
}

TEST_CASE("point above the radius leaves the axis alone") {
  const std::vector<Point> pts{{0, 3}};
  const EnvelopeChain c = leaf_envelope(pts, 0, 2);
  CHECK(c.breakpoints.empty());
  CHECK(c.pieces == std::vector<std::size_t>{kNoArc});
}

TEST_CASE("merging a chain with itself returns it") {
  const std::vector<Point> pts{{-1, 0.5}, {0.4, 1.1}, {1.5, 0.2}};
  EnvelopeChain c = leaf_envelope(pts, 0, 1.5);
  c = merge_envelopes(c, leaf_envelope(pts, 1, 1.5), pts, 1.5);
  c = merge_envelopes(c, leaf_envelope(pts, 2, 1.5), pts, 1.5);
  CHECK(merge_envelopes(c, c, pts, 1.5) == c);
}

TEST_CASE("merge ties go to the smaller index") {
  const std::vector<Point> pts{{0, 1}, {0, 1}};
  const EnvelopeChain m = merge_envelopes(leaf_envelope(pts, 1, 2), leaf_envelope(pts, 0, 2), pts, 2);
  CHECK(m.pieces == std::vector<std::size_t>{kNoArc, 0, kNoArc});
}

TEST_CASE("envelope tree heights match the direct minimum") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 12; ++t) {
    GenConfig c;
    c.n = 1 + rng() % 70;
    c.m = 1;
    c.seed = rng();
    c.kind = GenKind::unit_separable;
    c.coord_range = 6;
    const Instance in = normalize(generate(c));
    const double r = in.disks.front().r;
    const EnvelopeTree tree(in.points, r);
    const auto pts = tree.points();
    for (std::size_t id = 0; id < tree.shape().node_count(); ++id) {
      const auto& v = tree.shape().node(id);
      const EnvelopeChain& chain = tree.chain(id);
      CHECK(chain.pieces.size() == chain.breakpoints.size() + 1);
      CHECK(std::is_sorted(chain.breakpoints.begin(), chain.breakpoints.end()));
      CHECK(chain.pieces.size() <= 4 * v.size() + 1);
      std::uniform_real_distribution<double> ux(pts[v.lo].x - r - 1, pts[v.hi].x + r + 1);
      for (int s = 0; s < 1000; ++s) {
        const double x = ux(rng);
        const double got = envelope_height(chain, pts, r, x);
        CHECK(got <= 0.0);
        CHECK(std::abs(got - direct_envelope(pts, v.lo, v.hi, r, x)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("envelope disk_hits matches a scan") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    GenConfig c;
    c.n = 1 + rng() % 60;
    c.m = 60;
    c.seed = rng();
    c.kind = GenKind::unit_separable;
    const Instance in = normalize(generate(c));
    const double r = in.disks.front().r;
    const EnvelopeTree tree(in.points, r);
    for (std::size_t id = 0; id < tree.shape().node_count(); ++id) {
      const auto& v = tree.shape().node(id);
      for (const Disk& s : in.disks) {
        bool expect = false;
        for (std::size_t k = v.lo; k <= v.hi; ++k) expect = expect || point_in_disk(in.points[k], s);
        CHECK(tree.disk_hits(id, s) == expect);
      }
    }
  }
}
