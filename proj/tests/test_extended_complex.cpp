#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ivpp/error.hpp"
#include "ivpp/extended_complex.hpp"

using namespace ivpp;

TEST_CASE("finite and infinite values are exclusive") {
  const ExtendedComplex a(Complex(1.5, -2.0));
  CHECK(a.is_finite());
  CHECK_FALSE(a.is_infinite());
  CHECK(a.value() == Complex(1.5, -2.0));

  const auto inf = ExtendedComplex::infinity();
  CHECK(inf.is_infinite());
  CHECK_FALSE(inf.is_finite());
  CHECK_THROWS_AS(inf.value(), Error);
  CHECK(std::isinf(inf.real_or_inf()));
}

TEST_CASE("NaN is rejected and an infinite component means the point at infinity") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ExtendedComplex(Complex(nan, 0.0)), Error);
  try {
    ExtendedComplex bad(Complex(0.0, nan));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Indeterminate);
  }
  CHECK(ExtendedComplex(std::numeric_limits<double>::infinity()).is_infinite());
}

TEST_CASE("chordal distance") {
  const auto inf = ExtendedComplex::infinity();
  // 2|a-b| / sqrt((1+|a|^2)(1+|b|^2)); the distance from 0 to inf is 2.
  CHECK(chordal_distance(0.0, inf) == doctest::Approx(2.0));
  CHECK(chordal_distance(inf, inf) == 0.0);
  CHECK(chordal_distance(1.0, -1.0) == doctest::Approx(2.0));
  CHECK(chordal_distance(Complex(0, 1), 0.0) == doctest::Approx(2.0 / std::sqrt(2.0)));

  SUBCASE("large values approach infinity continuously") {
    CHECK(chordal_distance(1e12, inf) < 1e-11);
    CHECK(chordal_distance(-1e300, inf) < 1e-299);
    CHECK(chordal_distance(1e300, -1e300) < 1e-299);
  }

  SUBCASE("metric axioms on random points") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g(0.0, 3.0);
    for (int i = 0; i < 500; ++i) {
      const ExtendedComplex a(Complex(g(rng), g(rng)));
      const ExtendedComplex b(Complex(g(rng), g(rng)));
      const ExtendedComplex c = i % 7 == 0 ? inf : ExtendedComplex(Complex(g(rng), g(rng)));
      CHECK(chordal_distance(a, b) == doctest::Approx(chordal_distance(b, a)));
      CHECK(chordal_distance(a, c) <= chordal_distance(a, b) + chordal_distance(b, c) + 1e-12);
      CHECK(chordal_distance(a, b) <= 2.0 + 1e-12);
    }
  }
}

TEST_CASE("principal square root puts negative reals on the positive imaginary axis") {
  CHECK(principal_sqrt(-3.0) == Complex(0.0, std::sqrt(3.0)));
  CHECK(principal_sqrt(Complex(-1.0, -0.0)).imag() > 0.0);
  CHECK(std::abs(principal_sqrt(Complex(0.0, 2.0)) - Complex(1.0, 1.0)) < 1e-15);
}

TEST_CASE("to_string") {
  CHECK(to_string(ExtendedComplex::infinity()) == "inf");
  CHECK(to_string(ExtendedComplex(2.0)) == "2");
  CHECK(to_string(ExtendedComplex(Complex(1.0, -2.0))) == "1-2i");
}
