#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ivpp/error.hpp"
#include "ivpp/ivpp2d.hpp"
#include "ivpp/mobius.hpp"

using namespace ivpp;

namespace {

const Complex I(0.0, 1.0);
const double kSqrt3 = std::numbers::sqrt3;

double dist(const ExtendedComplex& a, const ExtendedComplex& b) { return chordal_distance(a, b); }

ExtendedComplex scaled(Complex s, const ExtendedComplex& z) {
  return z.is_infinite() ? ExtendedComplex::infinity() : ExtendedComplex(s * z.value());
}

// Reference Möbius action written directly from (ax + b)/(cx + d).
ExtendedComplex reference(const MobiusMatrix& m, Complex x) {
  const Complex den = m.c() * x + m.d();
  if (den == Complex(0.0)) return ExtendedComplex::infinity();
  return (m.a() * x + m.b()) / den;
}

}  // namespace

TEST_CASE("Möbius matrices") {
  CHECK_THROWS_AS(MobiusMatrix(1.0, 2.0, 2.0, 4.0), Error);
  try {
    reduced_matrix(1.0);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
  const MobiusMatrix m(2.0, 1.0, 1.0, 1.0);
  CHECK((m * m.inverse()).projectively_equal(MobiusMatrix::identity()));
  CHECK(m.projectively_equal(MobiusMatrix(4.0, 2.0, 2.0, 2.0)));
  CHECK_FALSE(m.projectively_equal(MobiusMatrix(2.0, 1.0, 1.0, 2.0)));
  CHECK(m.apply(ExtendedComplex::infinity()).value() == Complex(2.0));
  CHECK(m.apply(-1.0).is_infinite());
  CHECK_THROWS_AS(mobius_apply(0.0, 0.0, 1.0, 0.0, 0.0), Error);
}

TEST_CASE("reduced map") {
  CHECK(reduced_apply(-3.0, 2.0).value() == Complex(-5.0));
  CHECK(reduced_apply(-3.0, 1.0).is_infinite());
  CHECK(reduced_apply(-3.0, ExtendedComplex::infinity()).value() == Complex(-1.0));
  // 0 -> 1 -> inf -> -1 -> 0 at r = -1
  ExtendedComplex x = 0.0;
  x = reduced_apply(-1.0, x);
  CHECK(x.value() == Complex(1.0));
  x = reduced_apply(-1.0, x);
  CHECK(x.is_infinite());
  x = reduced_apply(-1.0, x);
  CHECK(x.value() == Complex(-1.0));
  x = reduced_apply(-1.0, x);
  CHECK(std::abs(x.value()) < 1e-15);
}

TEST_CASE("reduction consistency with the 2D map") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double r = u(rng);
    const double x = u(rng);
    if (std::abs(x) < 1e-3 || std::abs(1 - x) < 1e-3 || std::abs(1 - r / x) < 1e-3) continue;
    const auto q = apply(builtin::f2d(), PointD{x, r / x});
    CHECK(dist(q[0], reduced_apply(r, x)) < 1e-12);
  }
}

TEST_CASE("eigen data") {
  const auto e3 = eigen(-3.0);
  CHECK(std::abs(e3.sqrt_r - kSqrt3 * I) < 1e-15);
  CHECK(std::abs(e3.s.value() - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-15);
  CHECK(std::abs(std::pow(e3.s.value(), 3) - 1.0) < 1e-14);
  CHECK(std::abs(eigen(-1.0).s.value() - I) < 1e-15);
  CHECK(eigen(0.0).s.value() == Complex(1.0));
  CHECK(eigen(1.0).s.is_infinite());

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const Complex r(u(rng), u(rng));
    const auto e = eigen(r);
    CHECK(std::abs(e.lambda_plus - (1.0 + e.sqrt_r)) < 1e-12);
    CHECK(std::abs(e.lambda_minus - (1.0 - e.sqrt_r)) < 1e-12);
    CHECK(std::abs(e.s.value() * e.lambda_minus - e.lambda_plus) < 1e-12);
    CHECK(e.sqrt_r.real() >= 0.0);
  }
}

TEST_CASE("closed-form powers") {
  const auto p1 = power_matrix(-3.0, 1);
  CHECK(std::abs(p1.a() - 2.0) < 1e-14);
  CHECK(std::abs(p1.b() - 6.0) < 1e-14);
  CHECK(std::abs(p1.c() + 2.0) < 1e-14);
  CHECK(std::abs(p1.d() - 2.0) < 1e-14);
  CHECK(power_matrix(-3.0, 0).projectively_equal(MobiusMatrix::identity()));
  CHECK(power_matrix(-3.0, 3).projectively_equal(MobiusMatrix::identity()));
  try {
    power_matrix(0.0, 2);
    FAIL("expected ZeroR");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroR);
  }

  SUBCASE("projective power identity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_int_distribution<int> pick(1, 7);
    for (int i = 0; i < 200; ++i) {
      const Complex r(u(rng), u(rng));
      if (std::abs(r) < 1e-2 || std::abs(r - 1.0) < 1e-2) continue;
      const int m = pick(rng);
      const Complex x(u(rng), u(rng));
      ExtendedComplex iterated = x;
      for (int k = 0; k < m; ++k) iterated = reduced_apply(r, iterated);
      CHECK(dist(power_matrix(r, m).apply(x), iterated) < 1e-9);
      // M^m by repeated multiplication
      MobiusMatrix acc = MobiusMatrix::identity();
      for (int k = 0; k < m; ++k) acc = acc * reduced_matrix(r);
      CHECK(power_matrix(r, m).projectively_equal(acc));
      CHECK(dist(power_matrix(r, m).apply(x), reference(acc, x)) < 1e-9);
    }
  }
}

TEST_CASE("x to z") {
  CHECK(std::abs(x_to_z(-3.0, ExtendedComplex::infinity()).value() + kSqrt3 * I) < 1e-15);
  CHECK(x_to_z(-3.0, -1.0).is_infinite());
  CHECK(std::abs(x_to_z(-1.0, 0.0).value() - I) < 1e-15);
  CHECK(std::abs(x_to_z(-1.0 / 3.0, 0.0).value() - (kSqrt3 / 3.0) * I) < 1e-15);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const Complex r(u(rng), u(rng));
    const Complex x(u(rng), u(rng));
    CHECK(dist(z_to_x(r, x_to_z(r, x)), x) < 1e-12);
  }
}

TEST_CASE("diagonal coordinate linearizes the reduced map") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  int done = 0;
  while (done < 200) {
    const Complex r(u(rng), u(rng));
    if (std::abs(r) < 1e-3 || std::abs(r - 1.0) < 1e-3) continue;
    const Complex x(u(rng), u(rng));
    const Complex s = eigen(r).s.value();
    CHECK(dist(diagonal_coordinate(r, reduced_apply(r, x)), scaled(s, diagonal_coordinate(r, x))) < 1e-9);
    ++done;
  }
  // The fixed points +-sqrt(r) go to 0 and inf.
  CHECK(std::abs(diagonal_coordinate(-3.0, kSqrt3 * I).value()) < 1e-15);
  CHECK(diagonal_coordinate(-3.0, -kSqrt3 * I).is_infinite());
}

TEST_CASE("x_to_z is not a linearizing coordinate") {
  // It fixes x = +-1 to 0 and inf, while the reduced map fixes +-sqrt(r).
  const Complex r = -3.0;
  const Complex s = eigen(r).s.value();
  const auto lhs = x_to_z(r, reduced_apply(r, 2.0));
  const auto rhs = scaled(s, x_to_z(r, 2.0));
  CHECK(dist(lhs, rhs) > 0.1);
}

TEST_CASE("boundary c_m") {
  CHECK(boundary_c(3, 0).is_infinite());
  CHECK(boundary_c(3, 3).is_infinite());
  CHECK(std::abs(boundary_c(3, 1).value() - 1.0) < 1e-12);
  CHECK(std::abs(boundary_c(3, 2).value() + 1.0) < 1e-12);
  CHECK(std::abs(boundary_c(4, 2).value()) < 1e-12);

  const auto set6 = boundary_set(6);
  const std::vector<double> expected6{-1.0, -1.0 / 3.0, 0.0, 1.0 / 3.0, 1.0};
  REQUIRE(set6.sorted_real.size() == expected6.size());
  for (std::size_t k = 0; k < expected6.size(); ++k) CHECK(std::abs(set6.sorted_real[k] - expected6[k]) < 1e-15);
  CHECK(set6.sorted_real[2] == 0.0);
  CHECK(set6.has_infinity);
  CHECK(set6.all_real);
  CHECK(set6.raw.size() == 7);

  // c_m is the m-th preimage of infinity: M^m(c_m) = inf for the branch level.
  for (int n = 3; n <= 8; ++n) {
    for (const auto& b : branches(n)) {
      for (int m = 1; m < n; ++m) {
        ExtendedComplex x = boundary_c(n, m, b.m);
        for (int k = 0; k < m; ++k) x = reduced_apply(b.rho, x);
        CHECK(chordal_distance(x, ExtendedComplex::infinity()) < 1e-9);
      }
    }
  }
}

TEST_CASE("boundary d_m") {
  CHECK(std::abs(boundary_d(3, -3.0, 0).value() + kSqrt3 * I) < 1e-12);
  CHECK_THROWS_AS(boundary_d(3, -2.0, 1), Error);

  SUBCASE("x_to_z maps the c set onto the d set") {
    for (int n = 3; n <= 6; ++n) {
      for (const auto& b : branches(n)) {
        for (int m = 0; m <= n; ++m) {
          const auto z = x_to_z(b.rho, boundary_c(n, m, b.m));
          double best = 1e9;
          for (int k = 0; k <= n; ++k) best = std::min(best, dist(z, boundary_d(n, b.rho, k)));
          CHECK(best < 1e-9);

          const auto d = boundary_d(n, b.rho, m);
          best = 1e9;
          for (int k = 0; k <= n; ++k) best = std::min(best, dist(d, x_to_z(b.rho, boundary_c(n, k, b.m))));
          CHECK(best < 1e-9);
        }
      }
    }
  }

  SUBCASE("index pairing d_m = z(c_{n-m})") {
    for (int n = 3; n <= 6; ++n) {
      for (const auto& b : branches(n)) {
        for (int m = 0; m <= n; ++m) {
          CHECK(dist(boundary_d(n, b.rho, m), x_to_z(b.rho, boundary_c(n, n - m, b.m))) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("period-2 exclusion") {
  const auto bounds = period2_exclusion();
  REQUIRE(bounds.size() == 3);
  double previous = 1e9;
  for (const auto& b : bounds) {
    CHECK(b.min_abs_s_plus_one > 0.0);
    CHECK(b.min_abs_s_plus_one < previous);
    CHECK(b.min_abs_s_plus_one == doctest::Approx(2.0 / std::sqrt(1.0 + b.radius)).epsilon(1e-9));
    previous = b.min_abs_s_plus_one;
  }
  CHECK(bounds[0].min_abs_s_plus_one > 0.6);

  // s + 1 = 2/(1 - sqrt(r))
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const Complex r(u(rng), u(rng));
    const Complex q = principal_sqrt(r);
    CHECK(std::abs(eigen(r).s.value() + 1.0 - 2.0 / (1.0 - q)) < 1e-12 * std::abs(2.0 / (1.0 - q)));
  }
  CHECK(std::abs(eigen(1e6).s.value() + 1.0) == doctest::Approx(2.0 / 999.0));
}
