#include "ivpp/ivpp2d.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ivpp/error.hpp"

namespace ivpp {

namespace {

void require_period(int n) {
  if (n == 2) throw Error(ErrorKind::DegenerateBranch, "period 2 has no IVPP");
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "period must be at least 3");
}

double tan_squared(int n, int m) {
  const double t = std::tan(std::numbers::pi * m / n);
  return t * t;
}

}  // namespace

PointD IvppBranch2D::point(double x) const {
  if (x == 0.0) return PointD{ExtendedComplex(0.0), ExtendedComplex::infinity()};
  return PointD{ExtendedComplex(x), ExtendedComplex(rho / x)};
}

std::string IvppBranch2D::label() const { return "m=" + std::to_string(m); }

Complex gamma_closed(int n, int m, Complex r) {
  if (n < 3 || m < 1 || m > n - 1) throw Error(ErrorKind::InvalidArgument, "need n >= 3 and 1 <= m <= n-1");
  if (2 * m == n) throw Error(ErrorKind::DegenerateBranch, "m/n = 1/2 puts tan at its pole");
  return r + tan_squared(n, m);
}

std::vector<IvppBranch2D> branches(int n) {
  require_period(n);
  std::vector<IvppBranch2D> out;
  for (int m = 1; 2 * m < n; ++m) {
    if (std::gcd(m, n) == 1) out.push_back({n, m, -tan_squared(n, m)});
  }
  return out;
}

IvppBranch2D branch(int n, int m) {
  for (const auto& b : branches(n)) {
    if (b.m == m) return b;
  }
  throw Error(ErrorKind::InvalidArgument,
              "m=" + std::to_string(m) + " is not a branch of period " + std::to_string(n));
}

GammaPolynomial gamma_poly(int n) {
  GammaPolynomial out;
  out.monic = {1.0};
  for (const auto& b : branches(n)) {
    // multiply by (r - rho)
    std::vector<double> next(out.monic.size() + 1, 0.0);
    for (std::size_t i = 0; i < out.monic.size(); ++i) {
      next[i] += -b.rho * out.monic[i];
      next[i + 1] += out.monic[i];
    }
    out.monic = std::move(next);
  }
  for (long long k = 1; k <= 1000; ++k) {
    std::vector<long long> scaled;
    bool integral = true;
    for (double c : out.monic) {
      const double v = static_cast<double>(k) * c;
      const double rounded = std::round(v);
      if (std::abs(v - rounded) > 1e-9 * std::max(1.0, std::abs(v))) {
        integral = false;
        break;
      }
      scaled.push_back(static_cast<long long>(rounded));
    }
    if (integral) {
      out.integer_scaled = std::move(scaled);
      out.scale = k;
      break;
    }
  }
  return out;
}

std::optional<int> on_ivpp(int n, const PointD& p, double tol) {
  if (p.dimension() != 2) throw Error(ErrorKind::InvalidArgument, "on_ivpp needs a 2D point");
  const Complex r = p[0].value() * p[1].value();
  for (const auto& b : branches(n)) {
    if (std::abs(r - b.rho) < tol) return b.m;
  }
  return std::nullopt;
}

}  // namespace ivpp
