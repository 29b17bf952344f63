#include "ivpp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "ivpp/cli.hpp"
#include "ivpp/decomposition.hpp"
#include "ivpp/error.hpp"
#include "ivpp/ivpp2d.hpp"
#include "ivpp/lotka_volterra.hpp"
#include "ivpp/mobius.hpp"
#include "ivpp/raster.hpp"

namespace ivpp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt3 = std::numbers::sqrt3;
const double kSqrt5 = std::sqrt(5.0);

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite() || b.is_infinite()) return kInf;
  return std::abs(a.value() - b.value());
}

ExtendedComplex times(Complex s, const ExtendedComplex& z) {
  return z.is_infinite() ? ExtendedComplex::infinity() : ExtendedComplex(s * z.value());
}

struct GoldenZ {
  int n;
  int m;
  ExtendedComplex x;
  ExtendedComplex z;
};

std::vector<GoldenZ> golden_z_table() {
  const Complex i(0.0, 1.0);
  const auto inf = ExtendedComplex::infinity();
  const double bp = -2.0 + kSqrt5;
  const double bm = -2.0 - kSqrt5;
  // sqrt(a_+-) on the principal branch: a_+- < 0.
  const Complex qp = i * std::sqrt(5.0 - 2.0 * kSqrt5);
  const Complex qm = i * std::sqrt(5.0 + 2.0 * kSqrt5);
  return {
      {3, 1, inf, -kSqrt3 * i},
      {3, 1, -1.0, inf},
      {3, 1, 1.0, 0.0},
      {4, 1, inf, -i},
      {4, 1, -1.0, inf},
      {4, 1, 0.0, i},
      {4, 1, 1.0, 0.0},
      {5, 1, inf, -qp},
      {5, 1, -1.0, inf},
      {5, 1, -bp, 0.5 * qp * (kSqrt5 + 1.0)},
      {5, 1, bp, 0.5 * qp * (kSqrt5 - 1.0)},
      {5, 1, 1.0, 0.0},
      {5, 2, inf, -qm},
      {5, 2, -1.0, inf},
      {5, 2, -bm, -0.5 * qm * (kSqrt5 - 1.0)},
      {5, 2, bm, -0.5 * qm * (kSqrt5 + 1.0)},
      {5, 2, 1.0, 0.0},
      {6, 1, inf, -(kSqrt3 / 3.0) * i},
      {6, 1, -1.0, inf},
      {6, 1, -1.0 / 3.0, (2.0 * kSqrt3 / 3.0) * i},
      {6, 1, 0.0, (kSqrt3 / 3.0) * i},
      {6, 1, 1.0 / 3.0, (kSqrt3 / 6.0) * i},
      {6, 1, 1.0, 0.0},
  };
}

Outcome golden_z() {
  double worst = 0.0;
  for (const auto& g : golden_z_table()) {
    const double rho = branch(g.n, g.m).rho;
    worst = std::max(worst, distance(x_to_z(rho, g.x), g.z));
    double best_d = kInf;
    for (int m = 0; m <= g.n; ++m) best_d = std::min(best_d, distance(boundary_d(g.n, rho, m), g.z));
    worst = std::max(worst, best_d);
  }
  return {worst < 1e-9, "23 entries via x_to_z and boundary_d, max err " + sci(worst)};
}

struct PrintedDecomposition {
  int n;
  int m;
  std::vector<double> boundaries;
  std::vector<int> sigma;
};

std::vector<PrintedDecomposition> printed_decompositions() {
  const double bp = -2.0 + kSqrt5;
  const double bm = -2.0 - kSqrt5;
  return {
      {3, 1, {-1.0, 1.0}, {2, 3, 1}},
      {4, 1, {-1.0, 0.0, 1.0}, {2, 3, 4, 1}},
      {5, 1, {-1.0, -bp, bp, 1.0}, {2, 3, 4, 5, 1}},
      {5, 2, {bm, -1.0, 1.0, -bm}, {3, 4, 5, 1, 2}},
      {6, 1, {-1.0, -1.0 / 3.0, 0.0, 1.0 / 3.0, 1.0}, {2, 3, 4, 5, 6, 1}},
  };
}

Outcome interval_tables() {
  double worst = 0.0;
  for (const auto& p : printed_decompositions()) {
    const auto d = decompose(branch(p.n, p.m), Method::Analytic);
    if (d.boundaries.size() != p.boundaries.size()) {
      return {false, "n=" + std::to_string(p.n) + " has " + std::to_string(d.boundaries.size()) + " boundaries"};
    }
    if (!d.intervals.front().holds_infinity) return {false, "infinity is not a boundary point"};
    for (std::size_t k = 0; k < p.boundaries.size(); ++k) {
      worst = std::max(worst, std::abs(d.boundaries[k] - p.boundaries[k]));
    }
  }
  return {worst < 1e-9, "5 branches, max err " + sci(worst)};
}

Outcome cycle_permutations() {
  for (const auto& p : printed_decompositions()) {
    const auto d = decompose(branch(p.n, p.m), Method::Analytic);
    if (d.sigma != p.sigma) return {false, "sigma differs for n=" + std::to_string(p.n) + " m=" + std::to_string(p.m)};
  }
  return {true, "5 branches match, incl. C1->C3->C5->C2->C4 for a_-"};
}

Outcome gamma_identity() {
  const std::vector<std::pair<int, std::vector<long long>>> printed{
      {3, {3, 1}}, {4, {1, 1}}, {5, {5, 10, 1}}, {6, {1, 3}}};
  double worst = 0.0;
  for (const auto& [n, coeffs] : printed) {
    const auto g = gamma_poly(n);
    if (!g.integer_scaled || *g.integer_scaled != coeffs) {
      return {false, "integer coefficients differ for n=" + std::to_string(n)};
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      worst = std::max(worst, std::abs(g.monic[k] * static_cast<double>(g.scale) - static_cast<double>(coeffs[k])));
    }
  }
  return {worst < 1e-9, "n=3..6, max coefficient err " + sci(worst)};
}

Outcome conjugacy() {
  std::mt19937_64 rng(20240905);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double worst = 0.0;
  int checked = 0;
  while (checked < 200) {
    const Complex r(u(rng), u(rng));
    const Complex x(u(rng), u(rng));
    if (std::abs(r) < 1e-3 || std::abs(r - 1.0) < 1e-3) continue;
    const Complex s = eigen(r).s.value();
    const auto lhs = diagonal_coordinate(r, reduced_apply(r, x));
    const auto rhs = times(s, diagonal_coordinate(r, x));
    worst = std::max(worst, chordal_distance(lhs, rhs));
    ++checked;
  }
  return {worst < 1e-9, "200 random (r, x), max chordal err " + sci(worst)};
}

Outcome analytic_vs_empirical() {
  double worst = 0.0;
  int count = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& b : branches(n)) {
      const auto a = decompose(b, Method::Analytic);
      const auto e = decompose(b, Method::Empirical);
      if (a.boundaries.size() != e.boundaries.size()) return {false, "boundary count differs for " + b.label()};
      for (std::size_t k = 0; k < a.boundaries.size(); ++k) {
        worst = std::max(worst, std::abs(a.boundaries[k] - e.boundaries[k]));
      }
      ++count;
    }
  }
  return {worst < 1e-7, std::to_string(count) + " branches, max diff " + sci(worst)};
}

Outcome period_exactness() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  int on_variety = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& b : branches(n)) {
      int done = 0;
      while (done < 50) {
        const double x = u(rng);
        try {
          trace_flow(b, x, n);
        } catch (const Error&) {
          continue;  // orbit through a pole
        }
        const auto period = detect_period(builtin::f2d(), b.point(x), 8, 1e-9);
        if (period != n) {
          return {false, b.label() + " n=" + std::to_string(n) + " point x=" + sci(x) + " has period " +
                             (period ? std::to_string(*period) : "none")};
        }
        ++done;
        ++on_variety;
      }
    }
  }

  std::vector<double> levels;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& b : branches(n)) levels.push_back(b.rho);
  }
  std::uniform_real_distribution<double> v(-4.0, 4.0);
  int generic = 0;
  while (generic < 200) {
    const double x = v(rng);
    const double y = v(rng);
    bool near = false;
    for (double rho : levels) near = near || std::abs(x * y - rho) < 1e-3 * (1.0 + std::abs(rho));
    if (near) continue;
    try {
      const auto period = detect_period(builtin::f2d(), PointD{x, y}, 8, 1e-9);
      if (period) return {false, "generic point (" + sci(x) + ", " + sci(y) + ") has period " + std::to_string(*period)};
    } catch (const Error&) {
      continue;
    }
    ++generic;
  }
  return {true, std::to_string(on_variety) + " variety points exact, 200 generic points aperiodic up to 8"};
}

Outcome lv_suite() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double s_err = 0.0;
  double close_err = 0.0;
  int sampled = 0;
  while (sampled < 200) {
    const double x = u(rng);
    const double r = u(rng);
    if (std::abs(x) < 0.05 || std::abs(x - 1.0) < 0.05 || std::abs(r + 1.0) < 0.05) continue;
    for (const auto sign : {BranchSign::Plus, BranchSign::Minus}) {
      const PointD p = lv_period2_param(x, r, sign).point;
      const auto inv = invariant_values(builtin::f3d(), p);
      s_err = std::max(s_err, std::abs(inv[1] + 1.0));
      const auto trace = iterate(builtin::f3d(), p, 2);
      if (trace.points.size() < 3) return {false, "orbit stopped at an indeterminate point"};
      close_err = std::max(close_err, chordal_distance(trace.points[2], p));
    }
    ++sampled;
  }

  double inv_err = 0.0;
  double diag_err = 0.0;
  const auto w = lv_diagonalizer();
  for (int k = 0; k < 1000; ++k) {
    const Complex x(u(rng), u(rng));
    inv_err = std::max(inv_err, chordal_distance(lv_recurrence(lv_recurrence(x)), x));
    diag_err = std::max(diag_err, chordal_distance(w.apply(lv_recurrence(x)), times(-1.0, w.apply(x))));
  }
  // Recover (a, b, c, d) with c = 1 from the images of inf and 0; for an
  // involution the pole is the image of inf. Fixed points then solve
  // c x^2 + (d - a) x - b = 0.
  const Complex a = lv_recurrence(ExtendedComplex::infinity()).value();
  const Complex d = -a;
  const Complex b = lv_recurrence(0.0).value() * d;
  const Complex disc = std::sqrt((d - a) * (d - a) + 4.0 * b);
  std::vector<Complex> fixed{(a - d - disc) / 2.0, (a - d + disc) / 2.0};
  std::sort(fixed.begin(), fixed.end(), [](Complex l, Complex r) { return l.real() < r.real(); });
  const double fixed_err = std::max({std::abs(fixed[0] - 0.0), std::abs(fixed[1] - 2.0),
                                     chordal_distance(lv_recurrence(0.0), ExtendedComplex(0.0)),
                                     chordal_distance(lv_recurrence(2.0), ExtendedComplex(2.0))});

  double bound_err = 0.0;
  for (int r = -5; r <= 5; ++r) {
    for (const auto sign : {BranchSign::Plus, BranchSign::Minus}) {
      const auto d = lv_decompose_period2(r, sign);
      if (d.boundaries.size() != 2 || !d.intervals.back().holds_infinity) {
        return {false, "unexpected boundaries at r=" + std::to_string(r)};
      }
      bound_err = std::max({bound_err, std::abs(d.boundaries[0]), std::abs(d.boundaries[1] - 1.0)});
    }
  }
  const double worst = std::max({s_err, close_err, inv_err, diag_err, fixed_err});
  std::ostringstream detail;
  detail << "|s+1| " << sci(s_err) << ", F^2 " << sci(close_err) << ", involution " << sci(inv_err)
         << ", fixed points {0,2} err " << sci(fixed_err) << ", w->-w " << sci(diag_err) << ", boundaries {0,1,inf} for r=-5..5 err " << sci(bound_err);
  return {worst < 1e-10 && bound_err < 1e-9, detail.str()};
}

Outcome period2_exclusion_check() {
  double worst_rel = 0.0;
  double smallest = kInf;
  for (int i = 0; i <= 300; ++i) {
    const double radius = i == 0 ? 0.0 : std::pow(10.0, -3.0 + 6.0 * i / 300.0);
    for (int k = 0; k < 720; ++k) {
      const Complex r = std::polar(radius, 2.0 * std::numbers::pi * k / 720.0);
      const Complex q = principal_sqrt(r);
      if (std::abs(1.0 - q) < 1e-9) continue;
      const double lhs = std::abs(eigen(r).s.value() + 1.0);
      const double rhs = 2.0 / std::abs(1.0 - q);
      worst_rel = std::max(worst_rel, std::abs(lhs - rhs) / rhs);
      smallest = std::min(smallest, lhs);
    }
  }
  double bound_err = 0.0;
  for (const auto& b : period2_exclusion()) {
    bound_err = std::max(bound_err, std::abs(b.min_abs_s_plus_one - 2.0 / std::sqrt(1.0 + b.radius)));
  }

  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"decompose", "--period", "2", "--map", "f2d"}, out, err);
  const bool cli_ok = code == 2 && err.str().find("period 2 has no IVPP") != std::string::npos;

  std::ostringstream detail;
  detail << "identity rel err " << sci(worst_rel) << ", min |s+1| " << sci(smallest) << " on |r|<=1e3, disk minima err "
         << sci(bound_err) << ", cli exit " << code;
  return {worst_rel < 1e-12 && smallest > 0.0 && bound_err < 1e-9 && cli_ok, detail.str()};
}

Outcome raster_reproduction() {
  const auto b = branch(3, 1);
  const auto d = decompose(b, Method::Analytic);
  const std::vector<RasterTarget> targets{ivpp2d_target(b, d)};
  const Window window{-4.0, 4.0, -4.0, 4.0};
  const Resolution resolution{800, 800};
  const auto raster = render_tiling(builtin::f2d(), targets, window, resolution);

  std::set<int> classes;
  long classified = 0;
  long good = 0;
  for (int row = 0; row < resolution.height; ++row) {
    for (int col = 0; col < resolution.width; ++col) {
      const auto& cell = raster.at(col, row);
      if (!cell.component) continue;
      classes.insert(*cell.component);
      const auto hit = targets[0].locate(raster.rect(col, row));
      if (!hit) continue;
      PointD image;
      try {
        image = apply(builtin::f2d(), hit->point);
      } catch (const Error&) {
        continue;
      }
      if (!image.all_finite()) continue;
      ++classified;
      if (targets[0].component(image) == d.sigma[static_cast<std::size_t>(*cell.component - 1)]) ++good;
    }
  }
  const double ratio = classified ? static_cast<double>(good) / static_cast<double>(classified) : 0.0;
  std::ostringstream detail;
  detail << classes.size() << " classes, successor " << good << "/" << classified;
  return {classes == std::set<int>{1, 2, 3} && ratio >= 0.999, detail.str()};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  const std::vector<Criterion> criteria{
      {1, "golden z-table", 1.0, golden_z},
      {2, "interval tables", kInf, interval_tables},
      {3, "cycle permutations", kInf, cycle_permutations},
      {4, "gamma polynomials", kInf, gamma_identity},
      {5, "conjugacy", kInf, conjugacy},
      {6, "analytic vs empirical boundaries", 30.0, analytic_vs_empirical},
      {7, "period exactness", kInf, period_exactness},
      {8, "Lotka-Volterra suite", kInf, lv_suite},
      {9, "period-2 exclusion", kInf, period2_exclusion_check},
      {10, "raster reproduction", 60.0, raster_reproduction},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.check();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > c.budget_seconds) {
      r.passed = false;
      r.detail += "; over the " + sci(c.budget_seconds) + " s budget";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& result) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %s (%.2f s): ", result.passed ? "PASS" : "FAIL", result.id,
                result.name.c_str(), result.seconds);
  return head + result.detail;
}

}  // namespace ivpp
