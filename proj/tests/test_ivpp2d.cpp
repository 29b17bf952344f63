#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ivpp/error.hpp"
#include "ivpp/ivpp2d.hpp"

using namespace ivpp;

namespace {
const double kSqrt5 = std::sqrt(5.0);
}

TEST_CASE("gamma_closed vanishes on the printed levels") {
  CHECK(std::abs(gamma_closed(3, 1, -3.0)) < 1e-12);
  CHECK(std::abs(gamma_closed(4, 1, -1.0)) < 1e-12);
  CHECK(std::abs(gamma_closed(6, 1, -1.0 / 3.0)) < 1e-12);
  CHECK(std::abs(gamma_closed(5, 1, -5.0 + 2.0 * kSqrt5)) < 1e-12);
  CHECK(std::abs(gamma_closed(5, 2, -5.0 - 2.0 * kSqrt5)) < 1e-12);
  try {
    gamma_closed(4, 2, 0.0);
    FAIL("expected DegenerateBranch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateBranch);
  }
}

TEST_CASE("gamma polynomials against the printed ones") {
  const auto g3 = gamma_poly(3);
  REQUIRE(g3.integer_scaled);
  CHECK(*g3.integer_scaled == std::vector<long long>{3, 1});

  const auto g4 = gamma_poly(4);
  CHECK(*g4.integer_scaled == std::vector<long long>{1, 1});

  const auto g5 = gamma_poly(5);
  CHECK(*g5.integer_scaled == std::vector<long long>{5, 10, 1});
  CHECK(g5.monic.size() == 3);

  const auto g6 = gamma_poly(6);
  CHECK(g6.monic[0] == doctest::Approx(1.0 / 3.0));
  CHECK(g6.monic[1] == 1.0);
  CHECK(*g6.integer_scaled == std::vector<long long>{1, 3});
  CHECK(g6.scale == 3);
}

TEST_CASE("root agreement: the roots of gamma_poly are the branch levels") {
  for (int n = 3; n <= 12; ++n) {
    const auto g = gamma_poly(n);
    const auto bs = branches(n);
    CHECK(g.monic.size() == bs.size() + 1);
    for (const auto& b : bs) {
      // Horner on the monic ascending coefficients.
      double v = 0.0;
      for (auto it = g.monic.rbegin(); it != g.monic.rend(); ++it) v = v * b.rho + *it;
      double scale = 0.0;
      for (std::size_t k = 0; k < g.monic.size(); ++k) scale += std::abs(g.monic[k]) * std::pow(std::abs(b.rho), k);
      CHECK(std::abs(v) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("branches") {
  const auto b5 = branches(5);
  REQUIRE(b5.size() == 2);
  CHECK(b5[0].rho == doctest::Approx(-5.0 + 2.0 * kSqrt5).epsilon(1e-14));
  CHECK(std::abs(b5[0].rho - (-5.0 + 2.0 * kSqrt5)) < 1e-12);
  CHECK(std::abs(b5[1].rho - (-5.0 - 2.0 * kSqrt5)) < 1e-12);

  REQUIRE(branches(4).size() == 1);
  CHECK(branches(4)[0].rho == doctest::Approx(-1.0));
  REQUIRE(branches(6).size() == 1);
  CHECK(branches(6)[0].rho == doctest::Approx(-1.0 / 3.0));
  // phi(n)/2 branches
  CHECK(branches(7).size() == 3);
  CHECK(branches(8).size() == 2);
  CHECK(branches(12).size() == 2);

  try {
    branches(2);
    FAIL("expected DegenerateBranch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateBranch);
    CHECK(std::string(e.what()) == "period 2 has no IVPP");
  }
  CHECK_THROWS_AS(branches(1), Error);
  CHECK_THROWS_AS(branch(6, 2), Error);
  CHECK_THROWS_AS(branch(6, 3), Error);
}

TEST_CASE("branch disjointness") {
  for (int n = 3; n <= 12; ++n) {
    const auto bs = branches(n);
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) CHECK(std::abs(bs[i].rho - bs[j].rho) > 1e-6);
    }
  }
}

TEST_CASE("parametrized points lie on the level") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n = 3; n <= 8; ++n) {
    for (const auto& b : branches(n)) {
      for (int i = 0; i < 20; ++i) {
        const auto p = b.point(u(rng));
        CHECK(std::abs(p[0].value() * p[1].value() - b.rho) < 1e-12 * (1.0 + std::abs(b.rho)));
      }
      CHECK(b.point(0.0)[1].is_infinite());
    }
  }
}

TEST_CASE("membership") {
  CHECK(on_ivpp(3, PointD{2.0, -1.5}) == 1);
  CHECK_FALSE(on_ivpp(3, PointD{1.0, 1.0}).has_value());
  CHECK_FALSE(on_ivpp(5, PointD{1.0, 1.0}).has_value());
  const double ap = -5.0 + 2.0 * kSqrt5;
  const double am = -5.0 - 2.0 * kSqrt5;
  CHECK(on_ivpp(5, PointD{0.7, ap / 0.7}) == 1);
  CHECK(on_ivpp(5, PointD{0.7, am / 0.7}) == 2);
  CHECK_FALSE(on_ivpp(4, PointD{2.0, -1.5}).has_value());
}

TEST_CASE("period exactness on every branch") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& b : branches(n)) {
      int done = 0;
      while (done < 50) {
        const double x = u(rng);
        const auto p = b.point(x);
        std::optional<int> period;
        try {
          period = detect_period(builtin::f2d(), p, 8, 1e-9);
        } catch (const Error&) {
          continue;
        }
        CHECK(period == n);
        ++done;
      }
    }
  }
}
