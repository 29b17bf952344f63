#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "ivpp/decomposition.hpp"
#include "ivpp/error.hpp"
#include "ivpp/lotka_volterra.hpp"
#include "ivpp/mobius.hpp"
#include "ivpp/raster.hpp"

using namespace ivpp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using V3 = std::array<double, 3>;
using C3 = std::array<Complex, 3>;

// (x, y, z) -> (x u/v, y v/w, z w/u), u = 1-y+yz, v = 1-z+zx, w = 1-x+xy
template <class T>
std::array<T, 3> lv_map(const std::array<T, 3>& p) {
  const T one(1);
  const T u = one - p[1] + p[1] * p[2];
  const T v = one - p[2] + p[2] * p[0];
  const T w = one - p[0] + p[0] * p[1];
  return {p[0] * u / v, p[1] * v / w, p[2] * w / u};
}

C3 complex3(const PointD& p) { return {p[0].value(), p[1].value(), p[2].value()}; }

double cdist(const C3& a, const C3& b) {
  double d = 0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

V3 real3(const PointD& p) {
  return {p[0].value().real(), p[1].value().real(), p[2].value().real()};
}

double dist(const V3& a, const V3& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  return d;
}

}  // namespace

TEST_CASE("level conditions") {
  for (double r : {-3.0, 0.0, 0.5, 7.0}) CHECK(std::abs(lv_gamma(2, r, -1.0)) == 0.0);
  CHECK(std::abs(lv_gamma(3, -1.0, -1.0)) == 0.0);
  CHECK(std::abs(lv_gamma(4, 0.0, 0.0)) == 0.0);
  // (s - r)^2 + (r + 1)(s + 1) at r = 2, s = 1: 1 + 6
  CHECK(lv_gamma(3, 2.0, 1.0).real() == doctest::Approx(7.0));
  CHECK_THROWS_AS(lv_gamma(5, 0.0, 0.0), Error);
  CHECK_THROWS_AS(lv_gamma(1, 0.0, 0.0), Error);
}

TEST_CASE("a_+ and a_- are the roots of the branch quadratic") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng), r = u(rng);
    if (std::abs(x) < 0.05) continue;
    const auto [ap, am] = lv_a(x, r);
    const double P = x * x + (r - 2) * x - r;
    for (Complex a : {ap, am}) CHECK(std::abs(x * a * a - P * a + r * (x - 1) * (x - 1)) < 1e-8 * (1 + std::abs(P * a)));
    CHECK(std::abs(ap * am - r * (x - 1) * (x - 1) / x) < 1e-9 * (1 + std::abs(ap * am)));
    CHECK(std::abs(ap + am - P / x) < 1e-9 * (1 + std::abs(P / x)));
    // discriminant is that of the quadratic
    CHECK(lv_discriminant(x, r) == doctest::Approx(P * P - 4 * x * r * (x - 1) * (x - 1)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(lv_a(0.0, 2.0), Error);
}

TEST_CASE("period-2 points") {
  for (auto sign : {BranchSign::Plus, BranchSign::Minus}) {
    // discriminant -15 at (2, 3): a complex pair of points
    const auto p = lv_period2_param(2.0, 3.0, sign);
    CHECK(p.complex_branch);
    const C3 p0 = complex3(p.point);
    CHECK(cdist(lv_map(lv_map(p0)), p0) < 1e-9);
    CHECK(cdist(lv_map(p0), p0) > 1e-3);
  }

  // the image lies on the other branch at x/(x-1), its last two coordinates swapped
  {
    const double x = -1.0, r = 2.0, X = x / (x - 1);
    const auto [bp, bm] = lv_a(X, r);
    const V3 q = lv_map(real3(lv_period2_param(x, r, BranchSign::Plus).point));
    CHECK(q[0] == doctest::Approx(X));
    CHECK(q[1] == doctest::Approx(bm.real() / (X - 1)));
    CHECK(q[2] == doctest::Approx(bp.real() / (X - 1)));
    const V3 expected = real3(lv_period2_param(X, r, BranchSign::Minus).point);
    CHECK(dist(q, expected) < 1e-9);
  }

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-5.0, 5.0), ur(-4.0, 4.0);
  int done = 0;
  while (done < 50) {
    const double x = ux(rng), r = ur(rng);
    if (std::abs(x) < 0.05 || std::abs(x - 1) < 0.05 || std::abs(r + 1) < 0.05) continue;
    for (auto sign : {BranchSign::Plus, BranchSign::Minus}) {
      const auto p = lv_period2_param(x, r, sign);
      if (p.complex_branch) continue;
      const V3 v = real3(p.point);
      CHECK(v[0] * v[1] * v[2] == doctest::Approx(r).epsilon(1e-9));
      CHECK((1 - v[0]) * (1 - v[1]) * (1 - v[2]) == doctest::Approx(-1.0).epsilon(1e-9));
      const auto inv = invariant_values(builtin::f3d(), p.point);
      CHECK(std::abs(lv_gamma(2, inv[0], inv[1])) < 1e-9);
      CHECK(detect_period(builtin::f3d(), p.point, 8, 1e-9) == 2);
    }
    ++done;
  }

  for (double bad : {0.0, 1.0}) {
    try {
      lv_period2_param(bad, 2.0, BranchSign::Plus);
      FAIL("expected DegenerateX");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateX);
    }
  }
  CHECK(lv_period2_param(0.5, 3.0, BranchSign::Plus).complex_branch == (lv_discriminant(0.5, 3.0) < 0));
}

TEST_CASE("period-2 decomposition") {
  const auto d = lv_decompose_period2(3.0, BranchSign::Plus);
  CHECK(d.boundaries == std::vector<double>{0.0, 1.0});
  REQUIRE(d.intervals.size() == 3);
  CHECK(d.intervals[2].holds_infinity);
  CHECK(d.intervals[0].hi_closed);
  CHECK_FALSE(d.intervals[1].lo_closed);
  CHECK(d.convention == Convention::RightClosed);
  CHECK(d.sigma == std::vector<int>{2, 1, 3});
  CHECK(d.tiles == 2);
  REQUIRE(d.level);
  CHECK(*d.level == 3.0);

  CHECK(d.classify(0.0) == 1);
  CHECK(d.classify(-7.0) == 1);
  CHECK(d.classify(0.5) == 2);
  CHECK(d.classify(1.0) == 2);
  CHECK(d.classify(2.0) == 3);
  CHECK(d.classify(kInf) == 3);
  // x = 1/2 goes to -1, x = 2 stays
  CHECK(d.classify(0.5 / (0.5 - 1)) == d.sigma[static_cast<std::size_t>(d.classify(0.5) - 1)]);
  CHECK(d.classify(2.0 / (2.0 - 1)) == d.sigma[static_cast<std::size_t>(d.classify(2.0) - 1)]);
  CHECK(d.sigma[2] == 3);
}

TEST_CASE("boundaries are the same on every level") {
  for (int r = -5; r <= 5; ++r) {
    for (auto sign : {BranchSign::Plus, BranchSign::Minus}) {
      CAPTURE(r);
      const auto d = lv_decompose_period2(r, sign);
      CHECK(d.boundaries == std::vector<double>{0.0, 1.0});
      CHECK(d.intervals.back().holds_infinity);
      CHECK(d.sigma == std::vector<int>{2, 1, 3});
      CHECK(d.branch == (sign == BranchSign::Plus ? "lv2+" : "lv2-"));
    }
  }
}

TEST_CASE("recurrence") {
  const auto x1 = lv_recurrence(ExtendedComplex(3.0));
  CHECK(x1.value().real() == doctest::Approx(1.5));
  CHECK(lv_recurrence(x1).value().real() == doctest::Approx(3.0));
  CHECK(lv_recurrence(ExtendedComplex(0.0)).value().real() == 0.0);
  CHECK(lv_recurrence(ExtendedComplex(2.0)).value().real() == doctest::Approx(2.0));
  CHECK(lv_recurrence(ExtendedComplex(1.0)).is_infinite());
  CHECK(lv_recurrence(ExtendedComplex::infinity()).value().real() == doctest::Approx(1.0));

  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g(0.0, 3.0);
  const auto D = lv_diagonalizer();
  CHECK(D.apply(ExtendedComplex(3.0)).value().real() == doctest::Approx(3.0));  // 3/(3-2)
  CHECK(D.apply(ExtendedComplex(0.0)).value().real() == 0.0);
  CHECK(D.apply(ExtendedComplex(2.0)).is_infinite());
  for (int i = 0; i < 1000; ++i) {
    const ExtendedComplex x(Complex{g(rng), g(rng)});
    CHECK(chordal_distance(lv_recurrence(lv_recurrence(x)), x) < 1e-10);
    // w(X) = -w(x)
    const auto w = D.apply(x);
    const auto W = D.apply(lv_recurrence(x));
    CHECK(chordal_distance(W, mobius_apply(-1.0, 0.0, 0.0, 1.0, w)) < 1e-10);
  }
  // the first coordinate of the 3D flow is the recurrence
  const auto p = lv_period2_param(-2.5, 1.5, BranchSign::Minus);
  CHECK(apply(builtin::f3d(), p.point)[0].value().real() ==
        doctest::Approx(lv_recurrence(ExtendedComplex(-2.5)).value().real()));
}

TEST_CASE("striped raster slices") {
  const RasterTarget targets[] = {lv_raster_target(BranchSign::Plus, -3.0, 3.0),
                                  lv_raster_target(BranchSign::Minus, -3.0, 3.0)};
  RasterOptions opt;
  opt.classify_generic = false;
  const auto raster = render_tiling(builtin::f3d(), targets, Window{-4.0, 4.0, -4.0, 4.0}, Resolution{160, 160}, opt);
  std::set<double> levels;
  std::set<int> comps;
  for (const auto& cell : raster.cells()) {
    if (!cell.component) continue;
    CHECK(cell.period == 2);
    REQUIRE(cell.level);
    CHECK(*cell.level == std::round(*cell.level));
    levels.insert(*cell.level);
    comps.insert(*cell.component);
  }
  CHECK(levels.size() >= 5);
  CHECK(comps == std::set<int>{1, 2, 3});
  CHECK(raster.to_csv().rfind("x,y,period,component,r\n", 0) == 0);
}
