#include "ivpp/mobius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ivpp/error.hpp"
#include "ivpp/ivpp2d.hpp"

namespace ivpp {

namespace {

bool negligible(Complex v, double scale) { return std::abs(v) <= 1e-14 * scale; }

}  // namespace

ExtendedComplex mobius_apply(Complex a, Complex b, Complex c, Complex d, const ExtendedComplex& x) {
  if (x.is_infinite()) {
    if (a == 0.0 && c == 0.0) throw Error(ErrorKind::Indeterminate, "0/0 at infinity");
    if (c == 0.0) return ExtendedComplex::infinity();
    return ExtendedComplex(a / c);
  }
  const Complex v = x.value();
  const Complex num = a * v + b;
  const Complex den = c * v + d;
  const bool num_zero = negligible(num, std::abs(a * v) + std::abs(b));
  const bool den_zero = negligible(den, std::abs(c * v) + std::abs(d));
  if (num_zero && den_zero) throw Error(ErrorKind::Indeterminate, "0/0");
  if (den_zero) return ExtendedComplex::infinity();
  if (num_zero) return ExtendedComplex(0.0);
  return ExtendedComplex(num / den);
}

MobiusMatrix::MobiusMatrix(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(determinant()) <= 1e-12) throw Error(ErrorKind::SingularMatrix, "Mobius matrix is singular");
}

MobiusMatrix operator*(const MobiusMatrix& l, const MobiusMatrix& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

bool MobiusMatrix::projectively_equal(const MobiusMatrix& other, double tol) const {
  const std::array<Complex, 4> p{a_, b_, c_, d_};
  const std::array<Complex, 4> q{other.a_, other.b_, other.c_, other.d_};
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(q[i]) > std::abs(q[pivot])) pivot = i;
  }
  const Complex scale = p[pivot] / q[pivot];
  double largest = 0.0;
  for (const auto& v : p) largest = std::max(largest, std::abs(v));
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(p[i] - scale * q[i]) > tol * largest) return false;
  }
  return true;
}

MobiusMatrix reduced_matrix(Complex r) { return {1.0, -r, -1.0, 1.0}; }

ExtendedComplex reduced_apply(Complex r, const ExtendedComplex& x) { return mobius_apply(1.0, -r, -1.0, 1.0, x); }

EigenData eigen(Complex r) {
  EigenData e;
  e.sqrt_r = principal_sqrt(r);
  e.lambda_plus = 1.0 + e.sqrt_r;
  e.lambda_minus = 1.0 - e.sqrt_r;
  e.s = e.lambda_minus == 0.0 ? ExtendedComplex::infinity() : ExtendedComplex(e.lambda_plus / e.lambda_minus);
  return e;
}

MobiusMatrix power_matrix(Complex r, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "power must be non-negative");
  if (r == 0.0) throw Error(ErrorKind::ZeroR, "closed-form power needs r != 0");
  const EigenData e = eigen(r);
  const Complex lp = std::pow(e.lambda_plus, m);
  const Complex lm = std::pow(e.lambda_minus, m);
  const Complex sum = lp + lm;
  const Complex diff = lp - lm;
  return {sum, -e.sqrt_r * diff, -diff / e.sqrt_r, sum};
}

ExtendedComplex x_to_z(Complex r, const ExtendedComplex& x) {
  const Complex q = principal_sqrt(r);
  return mobius_apply(-q, q, 1.0, 1.0, x);
}

ExtendedComplex z_to_x(Complex r, const ExtendedComplex& z) {
  const Complex q = principal_sqrt(r);
  return mobius_apply(-1.0, q, 1.0, q, z);
}

ExtendedComplex diagonal_coordinate(Complex r, const ExtendedComplex& x) {
  const Complex q = principal_sqrt(r);
  return mobius_apply(-1.0, q, 1.0, q, x);
}

Complex root_of_unity(int n, int k) {
  const int reduced = ((k % n) + n) % n;
  return std::polar(1.0, 2.0 * std::numbers::pi * reduced / n);
}

ExtendedComplex boundary_c(int n, int m, int root_index) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "boundary formula needs n >= 3");
  if (m < 0 || m > n) throw Error(ErrorKind::InvalidArgument, "need 0 <= m <= n");
  if (std::gcd(root_index, n) != 1) throw Error(ErrorKind::InvalidArgument, "root index must give a primitive root");
  if ((static_cast<long long>(root_index) * m) % n == 0) return ExtendedComplex::infinity();
  const Complex s = root_of_unity(n, root_index);
  const Complex sm = root_of_unity(n, root_index * m);
  return ExtendedComplex((1.0 - s) * (1.0 + sm) / ((1.0 + s) * (1.0 - sm)));
}

ExtendedComplex boundary_d(int n, Complex r, int m) {
  if (m < 0 || m > n) throw Error(ErrorKind::InvalidArgument, "need 0 <= m <= n");
  bool on_level = false;
  for (const auto& b : branches(n)) {
    if (std::abs(r - b.rho) <= 1e-9 * std::max(1.0, std::abs(b.rho))) on_level = true;
  }
  if (!on_level) throw Error(ErrorKind::InvalidArgument, "r is not on a period-" + std::to_string(n) + " level");
  const EigenData e = eigen(r);
  const Complex lp = std::pow(e.lambda_plus, m);
  const Complex lm = std::pow(e.lambda_minus, m);
  const Complex sum = lp + lm;
  const Complex diff = lp - lm;
  const Complex num = e.sqrt_r * sum + diff;
  const Complex den = e.sqrt_r * sum - diff;
  const double scale = std::abs(e.sqrt_r * sum) + std::abs(diff);
  if (std::abs(den) <= 1e-12 * scale) return ExtendedComplex::infinity();
  return ExtendedComplex(-e.sqrt_r * num / den);
}

namespace {

// tan(pi j / n) with j reduced so that symmetric angles give exactly
// opposite values; +inf at j = n/2.
double reduced_tan(int n, long long j) {
  long long k = ((j % n) + n) % n;
  double sign = 1.0;
  if (2 * k > n) {
    k = n - k;
    sign = -1.0;
  }
  if (2 * k == n) return std::numeric_limits<double>::infinity();
  return sign * std::tan(std::numbers::pi * static_cast<double>(k) / n);
}

}  // namespace

BoundarySet boundary_set(int n, int root_index) {
  BoundarySet set;
  for (int m = 0; m <= n; ++m) {
    const ExtendedComplex c = boundary_c(n, m, root_index);
    set.raw.push_back(c);
    if (c.is_infinite()) {
      set.has_infinity = true;
      continue;
    }
    if (std::abs(c.value().imag()) > 1e-9) {
      set.all_real = false;
      continue;
    }
    // with s = exp(2 i theta), c_m = tan(theta) / tan(m theta); this form is
    // exact at the symmetric points 0 and +-1
    double x = c.value().real();
    const double num = reduced_tan(n, root_index);
    const double den = reduced_tan(n, static_cast<long long>(root_index) * m);
    if (std::isfinite(num)) {
      const double exact = std::isinf(den) ? 0.0 : num / den;
      if (std::abs(exact - x) <= 1e-9 * std::max(1.0, std::abs(x))) x = exact;
    }
    const bool seen = std::any_of(set.sorted_real.begin(), set.sorted_real.end(),
                                  [x](double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(x)); });
    if (!seen) set.sorted_real.push_back(x);
  }
  std::sort(set.sorted_real.begin(), set.sorted_real.end());
  return set;
}

std::vector<ExclusionBound> period2_exclusion(std::span<const double> radii) {
  constexpr int kRadial = 400;
  constexpr int kAngular = 720;
  std::vector<ExclusionBound> out;
  for (double radius : radii) {
    ExclusionBound bound{radius, std::numeric_limits<double>::infinity(), {}};
    for (int i = 0; i <= kRadial; ++i) {
      const double rho = radius * i / kRadial;
      for (int j = 0; j < kAngular; ++j) {
        const Complex r = std::polar(rho, 2.0 * std::numbers::pi * j / kAngular);
        const ExtendedComplex s = eigen(r).s;
        if (s.is_infinite()) continue;
        const double gap = std::abs(s.value() + 1.0);
        if (gap < bound.min_abs_s_plus_one) {
          bound.min_abs_s_plus_one = gap;
          bound.argmin = r;
        }
        if (i == 0) break;
      }
    }
    out.push_back(bound);
  }
  return out;
}

std::vector<ExclusionBound> period2_exclusion() {
  static constexpr std::array<double, 3> kRadii{10.0, 100.0, 1000.0};
  return period2_exclusion(kRadii);
}

}  // namespace ivpp
