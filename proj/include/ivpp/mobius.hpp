#pragma once

#include <span>
#include <vector>

#include "ivpp/extended_complex.hpp"

namespace ivpp {

/// Projective action of [[a, b], [c, d]] on x; no determinant requirement.
/// Throws Indeterminate on 0/0.
ExtendedComplex mobius_apply(Complex a, Complex b, Complex c, Complex d, const ExtendedComplex& x);

/// Invertible 2x2 complex matrix acting on CP^1 by x -> (ax + b)/(cx + d).
class MobiusMatrix {
 public:
  /// Throws SingularMatrix when |det| <= 1e-12.
  MobiusMatrix(Complex a, Complex b, Complex c, Complex d);

  static MobiusMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }
  Complex determinant() const noexcept { return a_ * d_ - b_ * c_; }

  ExtendedComplex apply(const ExtendedComplex& x) const { return mobius_apply(a_, b_, c_, d_, x); }
  MobiusMatrix inverse() const { return {d_, -b_, -c_, a_}; }

  friend MobiusMatrix operator*(const MobiusMatrix& l, const MobiusMatrix& r);

  /// Equal up to a nonzero scalar, entries compared relative to the largest.
  bool projectively_equal(const MobiusMatrix& other, double tol = 1e-9) const;

 private:
  Complex a_, b_, c_, d_;
};

/// [[1, -r], [-1, 1]]: the 2D map reduced on the level xy = r.
MobiusMatrix reduced_matrix(Complex r);

/// x -> (x - r)/(1 - x).
ExtendedComplex reduced_apply(Complex r, const ExtendedComplex& x);

struct EigenData {
  Complex lambda_plus;
  Complex lambda_minus;
  Complex sqrt_r;
  /// lambda_plus / lambda_minus; infinite at r = 1.
  ExtendedComplex s;
};

EigenData eigen(Complex r);

/// The closed form of M^m as printed: [[S, -sqrt(r) D], [-D/sqrt(r), S]]
/// with S = l+^m + l-^m, D = l+^m - l-^m. Equal to M^m only up to a scalar.
/// Throws ZeroR at r = 0.
MobiusMatrix power_matrix(Complex r, int m);

/// z = sqrt(r)(1 - x)/(1 + x), the image of x under O = [[-sqrt(r), sqrt(r)], [1, 1]].
/// This is the z-space of the boundary values d_m. It sends x = +-1 to 0 and
/// inf, not the fixed points +-sqrt(r), so it does not linearize the reduced map.
ExtendedComplex x_to_z(Complex r, const ExtendedComplex& x);
ExtendedComplex z_to_x(Complex r, const ExtendedComplex& z);

/// w = (sqrt(r) - x)/(sqrt(r) + x), i.e. x = O w. The columns of O are
/// eigenvectors of the reduced matrix, so the reduced map becomes w -> s w.
ExtendedComplex diagonal_coordinate(Complex r, const ExtendedComplex& x);

/// Primitive n-th root of unity exp(2 pi i k / n).
Complex root_of_unity(int n, int k);

/// c_m = (1 - s)(1 + s^m) / ((1 + s)(1 - s^m)) with s = exp(2 pi i k / n);
/// infinite when s^m = 1.
ExtendedComplex boundary_c(int n, int m, int root_index = 1);

/// d_m, the z-space counterpart of the boundaries: the z-image of the m-th
/// forward image of infinity, equivalently of c_{n-m}. Throws
/// InvalidArgument if r is not on a period-n level.
ExtendedComplex boundary_d(int n, Complex r, int m);

struct BoundarySet {
  std::vector<ExtendedComplex> raw;  // indexed by m = 0..n
  std::vector<double> sorted_real;   // distinct finite values, ascending
  bool has_infinity = false;
  bool all_real = true;              // false if some c_m has |Im| > 1e-9
};

BoundarySet boundary_set(int n, int root_index = 1);

struct ExclusionBound {
  double radius = 0.0;
  double min_abs_s_plus_one = 0.0;
  Complex argmin{};
};

/// |s(r) + 1| over polar grids of the disks |r| <= R: the period-2 condition
/// s = -1 has no finite solution.
std::vector<ExclusionBound> period2_exclusion(std::span<const double> radii);
std::vector<ExclusionBound> period2_exclusion();

}  // namespace ivpp
