#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivpp/rational_map.hpp"

namespace ivpp {

/// One branch of the period-n variety of the 2D map: the level xy = rho with
/// rho = -tan^2(pi m / n), gcd(m, n) = 1, 1 <= m < n/2.
struct IvppBranch2D {
  int period = 0;
  int m = 0;
  double rho = 0.0;

  /// (x, rho/x); x = 0 gives (0, inf).
  PointD point(double x) const;
  std::string label() const;
};

/// r + tan^2(pi m / n). Throws DegenerateBranch when 2m = n.
Complex gamma_closed(int n, int m, Complex r);

struct GammaPolynomial {
  /// Ascending coefficients of the monic product over the admissible m.
  std::vector<double> monic;
  /// Smallest integer multiple with integral coefficients, when one exists
  /// (searched up to a factor of 1000).
  std::optional<std::vector<long long>> integer_scaled;
  long long scale = 1;
};

GammaPolynomial gamma_poly(int n);

std::vector<IvppBranch2D> branches(int n);

/// Branch of period n with index m; throws InvalidArgument if m is not admissible.
IvppBranch2D branch(int n, int m);

/// Index m of the branch whose level matches x*y within tol.
std::optional<int> on_ivpp(int n, const PointD& p, double tol = kTolEq);

}  // namespace ivpp
