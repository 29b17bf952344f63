#pragma once

#include <utility>
#include <vector>

#include "ivpp/decomposition.hpp"
#include "ivpp/mobius.hpp"
#include "ivpp/raster.hpp"
#include "ivpp/rational_map.hpp"

namespace ivpp {

/// Period-n condition on the levels (r, s) of the 3D map, n = 2, 3, 4.
/// Throws UnsupportedPeriod otherwise.
Complex lv_gamma(int n, Complex r, Complex s);

enum class BranchSign { Plus, Minus };
const char* to_string(BranchSign sign);
BranchSign opposite(BranchSign sign);

/// r^2 - 2r^2 x + 2r x^2 + r^2 x^2 - 2r x^3 + 4x^2 - 4x^3 + x^4.
double lv_discriminant(double x, double r);

/// (a_+, a_-) = (x^2 + (r-2)x - r +- sqrt(disc)) / (2x), the two roots of
/// x a^2 - (x^2 + (r-2)x - r) a + r(x-1)^2 = 0. The square root is the
/// non-negative one for disc >= 0 and i sqrt(-disc) otherwise.
std::pair<Complex, Complex> lv_a(double x, double r);

struct LvPoint {
  PointD point;
  bool complex_branch = false;  // discriminant < 0
};

/// (x, a_sign/(x-1), a_other/(x-1)) on the period-2 level s = -1, xyz = r.
/// The map sends the sign branch at x to the opposite branch at x/(x-1).
/// Throws DegenerateX at x = 0 and x = 1.
LvPoint lv_period2_param(double x, double r, BranchSign sign);

/// Intervals (-inf, 0], (0, 1], (1, inf] (right-closed, infinity in the last)
/// found from the pole of the flow and the singular points of the chart.
/// sigma is [2, 1, 3]; tiles counts its cycles. The image of a point lies
/// on the opposite sign branch. At r = -1, where the branch lies in the
/// indeterminacy locus of the map, the flow is extended by continuity.
ComponentDecomposition lv_decompose_period2(double r, BranchSign sign);

/// x -> -x/(1 - x), an involution of CP^1 with fixed points 0 and 2.
ExtendedComplex lv_recurrence(const ExtendedComplex& x);

/// w = x/(x - 2): conjugates lv_recurrence to w -> -w.
MobiusMatrix lv_diagonalizer();

/// Real slice through the period-2 branch of one sign at levels
/// r = r_min, r_min + r_step, ..., r_max, drawn in the (x, y) plane.
RasterTarget lv_raster_target(BranchSign sign, double r_min, double r_max, double r_step = 1.0);

}  // namespace ivpp
