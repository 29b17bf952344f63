#include "ivpp/lotka_volterra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ivpp/error.hpp"

namespace ivpp {

Complex lv_gamma(int n, Complex r, Complex s) {
  switch (n) {
    case 2:
      return s + 1.0;
    case 3:
      return (s - r) * (s - r) + (r + 1.0) * (s + 1.0);
    case 4:
      return (s - r) * (s - r) * (s - r) + s * (r + 1.0) * (r + 1.0) * (r + 1.0);
    default:
      throw Error(ErrorKind::UnsupportedPeriod, "no 3D condition for period " + std::to_string(n));
  }
}

const char* to_string(BranchSign sign) { return sign == BranchSign::Plus ? "+" : "-"; }

BranchSign opposite(BranchSign sign) { return sign == BranchSign::Plus ? BranchSign::Minus : BranchSign::Plus; }

double lv_discriminant(double x, double r) {
  const double x2 = x * x;
  const double x3 = x2 * x;
  return r * r - 2 * r * r * x + 2 * r * x2 + r * r * x2 - 2 * r * x3 + 4 * x2 - 4 * x3 + x2 * x2;
}

std::pair<Complex, Complex> lv_a(double x, double r) {
  if (x == 0.0) throw Error(ErrorKind::DegenerateX, "a_+- is singular at x = 0");
  const double disc = lv_discriminant(x, r);
  const Complex root = disc >= 0 ? Complex(std::sqrt(disc), 0.0) : Complex(0.0, std::sqrt(-disc));
  const double p = x * x + (r - 2) * x - r;
  return {(p + root) / (2 * x), (p - root) / (2 * x)};
}

LvPoint lv_period2_param(double x, double r, BranchSign sign) {
  if (x == 0.0 || x == 1.0) {
    throw Error(ErrorKind::DegenerateX, "the period-2 chart is singular at x = " + std::to_string(x));
  }
  auto [plus, minus] = lv_a(x, r);
  if (sign == BranchSign::Minus) std::swap(plus, minus);
  LvPoint out;
  out.point = PointD{ExtendedComplex(x), ExtendedComplex(plus / (x - 1)), ExtendedComplex(minus / (x - 1))};
  out.complex_branch = lv_discriminant(x, r) < 0;
  return out;
}

ComponentDecomposition lv_decompose_period2(double r, BranchSign sign) {
  const Parametrization param = [r, sign](double x) { return lv_period2_param(x, r, sign).point; };
  const RationalMapSpec* map = &builtin::f3d();
  Parametrization flow_param = param;
  std::vector<double> bounds;
  try {
    bounds = boundaries_empirical(*map, param, 2);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoClosure) throw;
    // At r = -1 one of a_+- is identically -1 and the whole branch sits in
    // the indeterminacy locus of the map; follow the continuous extension
    // of the flow, whose first coordinate is the recurrence x -> x/(x-1).
    map = &builtin::lv_recurrence();
    flow_param = [](double x) { return PointD{ExtendedComplex(x)}; };
    bounds = boundaries_empirical(*map, flow_param, 2);
  }
  // The chart itself breaks down where a_+- or 1/(x-1) is singular. A pole
  // found there is located only to ~1e-9 (the coordinates blow up), so it
  // is identified with the exact singular point.
  for (double singular : {0.0, 1.0}) {
    bool known = false;
    for (double& b : bounds) {
      if (std::abs(b - singular) < 1e-6) {
        b = singular;
        known = true;
      }
    }
    if (!known) bounds.push_back(singular);
  }
  std::sort(bounds.begin(), bounds.end());
  auto d = decompose_with(*map, flow_param, 2, std::move(bounds), Convention::RightClosed,
                          std::string("lv2") + to_string(sign), false);
  d.level = r;
  return d;
}

ExtendedComplex lv_recurrence(const ExtendedComplex& x) { return mobius_apply(-1.0, 0.0, -1.0, 1.0, x); }

MobiusMatrix lv_diagonalizer() { return {1.0, 0.0, 1.0, -2.0}; }

RasterTarget lv_raster_target(BranchSign sign, double r_min, double r_max, double r_step) {
  if (!(r_step > 0) || r_max < r_min) throw Error(ErrorKind::InvalidArgument, "bad r range");
  std::vector<double> levels;
  for (double r = r_min; r <= r_max + 1e-9 * r_step; r += r_step) levels.push_back(r);

  RasterTarget target;
  target.period = 2;
  target.locate = [sign, levels](const CellRect& rect) -> std::optional<RasterHit> {
    for (double r : levels) {
      // Along the column: y is fixed by x.
      const double xc = rect.x_center();
      if (xc != 0.0 && xc != 1.0) {
        const auto p = lv_period2_param(xc, r, sign);
        if (!p.complex_branch && rect.contains(xc, p.point[1].value().real())) return RasterHit{p.point, r};
      }
      // Along the row: the levels are symmetric in x and y, so the points
      // with y = yc are (a/(yc - 1), yc, a'/(yc - 1)) for {a, a'} = {a_+, a_-} at yc.
      const double yc = rect.y_center();
      if (yc == 0.0 || yc == 1.0 || lv_discriminant(yc, r) < 0) continue;
      const auto [ap, am] = lv_a(yc, r);
      for (const Complex a : {ap, am}) {
        const double x = a.real() / (yc - 1);
        if (!rect.contains(x, yc) || x == 0.0 || x == 1.0 || lv_discriminant(x, r) < 0) continue;
        const auto p = lv_period2_param(x, r, sign);
        if (std::abs(p.point[1].value().real() - yc) <= 1e-7 * (1.0 + std::abs(yc))) return RasterHit{p.point, r};
      }
    }
    return std::nullopt;
  };
  // The intervals do not depend on r.
  target.component = [decomposition = lv_decompose_period2(levels.front(), sign)](const PointD& p) {
    return decomposition.classify(p[0].real_or_inf());
  };
  return target;
}

}  // namespace ivpp
