#include "ivpp/decomposition.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ivpp/error.hpp"
#include "ivpp/mobius.hpp"

namespace ivpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> finite_only(std::vector<double> values) {
  std::erase_if(values, [](double v) { return !std::isfinite(v); });
  std::sort(values.begin(), values.end());
  return values;
}

void push_distinct(std::vector<double>& values, double x, double tol) {
  for (double v : values) {
    if (std::abs(v - x) <= tol * std::max(1.0, std::abs(x))) return;
  }
  values.push_back(x);
}

}  // namespace

const char* to_string(Convention c) { return c == Convention::LeftClosed ? "left-closed" : "right-closed"; }

int ComponentDecomposition::classify(double x) const {
  const int n = size();
  if (std::isinf(x)) return convention == Convention::LeftClosed ? 1 : n;
  const auto it = convention == Convention::LeftClosed
                      ? std::upper_bound(boundaries.begin(), boundaries.end(), x)
                      : std::lower_bound(boundaries.begin(), boundaries.end(), x);
  return static_cast<int>(it - boundaries.begin()) + 1;
}

std::vector<Interval> build_intervals(const std::vector<double>& finite_boundaries, Convention convention) {
  const bool left = convention == Convention::LeftClosed;
  std::vector<Interval> out;
  double lo = -kInf;
  for (std::size_t i = 0; i <= finite_boundaries.size(); ++i) {
    const double hi = i < finite_boundaries.size() ? finite_boundaries[i] : kInf;
    Interval iv;
    iv.lo = lo;
    iv.hi = hi;
    iv.lo_closed = left && std::isfinite(lo);
    iv.hi_closed = !left && std::isfinite(hi);
    iv.holds_infinity = left ? i == 0 : i == finite_boundaries.size();
    out.push_back(iv);
    lo = hi;
  }
  return out;
}

std::vector<int> cycle_lengths(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorKind::NotACycle, "sigma is not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::fill(seen.begin(), seen.end(), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = sigma[static_cast<std::size_t>(i - 1)]) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

OrbitTrace trace_flow(const IvppBranch2D& branch, double x0, int n) {
  PointD p = branch.point(x0);
  if (!p.all_finite()) throw Error(ErrorKind::PoleHit, "starting point has an infinite coordinate", 0);
  OrbitTrace trace;
  trace.points.push_back(p);
  for (int k = 1; k <= n; ++k) {
    try {
      p = apply(builtin::f2d(), p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Indeterminate) throw;
      throw Error(ErrorKind::PoleHit, "flow is indeterminate at step " + std::to_string(k), k);
    }
    if (!p.all_finite()) throw Error(ErrorKind::PoleHit, "flow reaches infinity at step " + std::to_string(k), k);
    trace.points.push_back(p);
  }
  trace.closed = chordal_distance(trace.points.back(), trace.points.front()) < kTolEq;
  if (!trace.closed) throw Error(ErrorKind::NoClosure, "flow does not close after " + std::to_string(n) + " steps");
  for (int m = 1; m <= n; ++m) {
    if (chordal_distance(trace.points[static_cast<std::size_t>(m)], trace.points.front()) < kTolEq) {
      if (n % m == 0) trace.minimal_period = m;
      break;
    }
  }
  return trace;
}

std::vector<double> boundaries_analytic(const IvppBranch2D& branch) {
  const BoundarySet set = boundary_set(branch.period, branch.m);
  if (!set.all_real) throw Error(ErrorKind::NonRealBoundary, "boundary formula gives a non-real value");
  std::vector<double> out = set.sorted_real;
  out.push_back(kInf);
  return out;
}

namespace {

// First coordinate of the iterates 0..n-1; nullopt where the orbit is not
// computable (parametrization singular, indeterminate map, infinite x).
std::optional<std::vector<double>> signature(const RationalMapSpec& map, const Parametrization& param, int n,
                                             double x) {
  try {
    PointD p = param(x);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
      if (t > 0) p = apply(map, p);
      if (p[0].is_infinite()) return std::nullopt;
      out.push_back(p[0].value().real());
    }
    return out;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Bisects the sign change of iterate t between lo and hi (in the variable
// `to_x` maps to x); returns the located x if the change passes through
// infinity rather than zero.
std::optional<double> refine(const RationalMapSpec& map, const Parametrization& param, int n, int t, double lo,
                             double hi, const std::function<double(double)>& to_x) {
  const auto sign_at = [&](double v) -> std::optional<std::pair<bool, double>> {
    const auto sig = signature(map, param, n, to_x(v));
    if (!sig) return std::nullopt;
    const double value = (*sig)[static_cast<std::size_t>(t)];
    return std::make_pair(value < 0.0, value);
  };
  auto lo_state = sign_at(lo);
  if (!lo_state) return std::nullopt;
  double magnitude = 0.0;
  for (int it = 0; it < 200; ++it) {
    if (std::abs(hi - lo) <= 1e-13 * std::max(1.0, std::abs(lo))) break;
    double mid = 0.5 * (lo + hi);
    auto mid_state = sign_at(mid);
    for (double f : {0.37, 0.63, 0.21, 0.79}) {
      if (mid_state) break;
      mid = lo + f * (hi - lo);
      mid_state = sign_at(mid);
    }
    if (!mid_state) break;
    magnitude = std::abs(mid_state->second);
    if (mid_state->first == lo_state->first) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // a pole drives |x_t| up like 1/width, a zero drives it down like width
  if (magnitude <= 1.0) return std::nullopt;
  return to_x(0.5 * (lo + hi));
}

void scan_line(const RationalMapSpec& map, const Parametrization& param, int n, double from, double to, int samples,
               const std::function<double(double)>& to_x, bool skip_origin, std::vector<double>& found) {
  const double step = (to - from) / samples;
  // offset keeps samples off rational points such as 0 and +-1
  const double shift = 0.3819660112501051 * step;
  std::optional<std::vector<double>> prev;
  double prev_v = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double v = from + shift + i * step;
    if (v > to) break;
    auto sig = signature(map, param, n, to_x(v));
    if (sig && prev && !(skip_origin && prev_v < 0.0 && v > 0.0)) {
      for (int t = 0; t < n; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        if (((*prev)[idx] < 0.0) != ((*sig)[idx] < 0.0)) {
          if (auto x = refine(map, param, n, t, prev_v, v, to_x)) push_distinct(found, *x, 1e-9);
        }
      }
    }
    if (sig) {
      prev = std::move(sig);
      prev_v = v;
    } else {
      prev.reset();
    }
  }
}

void check_closure(const RationalMapSpec& map, const Parametrization& param, int n, double half_width) {
  int checked = 0;
  for (int i = 0; i < 64 && checked < 12; ++i) {
    const double x = -half_width + (2.0 * half_width) * (i + 0.2360679774997897) / 64.0;
    try {
      const PointD p = param(x);
      PointD q = p;
      for (int k = 0; k < n; ++k) q = apply(map, q);
      if (chordal_distance(p, q) > 1e-6) {
        throw Error(ErrorKind::NoClosure, "sampled point x=" + format_number(x) + " is not " + std::to_string(n) +
                                              "-periodic");
      }
      ++checked;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoClosure) throw;
    }
  }
  if (checked == 0) throw Error(ErrorKind::NoClosure, "no regular sample point found on the parametrization");
}

}  // namespace

std::vector<double> boundaries_empirical(const RationalMapSpec& map, const Parametrization& param, int n,
                                         const ScanSpec& scan) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "period must be positive");
  check_closure(map, param, n, scan.half_width);
  std::vector<double> found;
  const double w = scan.half_width;
  scan_line(map, param, n, -w, w, scan.samples, [](double v) { return v; }, false, found);
  std::vector<double> outer;
  scan_line(map, param, n, -1.0 / w, 1.0 / w, scan.inverse_samples, [](double u) { return 1.0 / u; }, true, outer);
  for (double x : outer) {
    if (std::abs(x) > w) push_distinct(found, x, 1e-9);
  }
  std::sort(found.begin(), found.end());
  found.push_back(kInf);
  return found;
}

ComponentDecomposition decompose_with(const RationalMapSpec& map, const Parametrization& param, int n,
                                      std::vector<double> boundaries, Convention convention, std::string label,
                                      bool require_cycle) {
  ComponentDecomposition d;
  d.period = n;
  d.branch = std::move(label);
  d.convention = convention;
  d.boundaries = finite_only(std::move(boundaries));
  d.intervals = build_intervals(d.boundaries, convention);
  if (require_cycle && d.size() != n) {
    throw Error(ErrorKind::NotACycle, "found " + std::to_string(d.size()) + " intervals for period " +
                                          std::to_string(n));
  }
  static constexpr std::array<double, 6> kFractions{0.5, 0.381966, 0.618034, 0.25, 0.75, 0.1};
  for (const auto& iv : d.intervals) {
    std::optional<int> image;
    for (double f : kFractions) {
      double x;
      if (std::isinf(iv.lo) && std::isinf(iv.hi)) {
        x = 2.0 * f - 1.0;
      } else if (std::isinf(iv.lo)) {
        x = iv.hi - 2.0 * f * (1.0 + std::abs(iv.hi));
      } else if (std::isinf(iv.hi)) {
        x = iv.lo + 2.0 * f * (1.0 + std::abs(iv.lo));
      } else {
        x = iv.lo + f * (iv.hi - iv.lo);
      }
      try {
        const PointD q = apply(map, param(x));
        image = d.classify(q[0].real_or_inf());
        break;
      } catch (const Error&) {
        continue;
      }
    }
    if (!image) throw Error(ErrorKind::NotACycle, "no regular interior point to follow in an interval");
    d.sigma.push_back(*image);
  }
  const std::vector<int> cycles = cycle_lengths(d.sigma);
  d.tiles = static_cast<int>(cycles.size());
  if (require_cycle && (cycles.size() != 1 || cycles.front() != n)) {
    throw Error(ErrorKind::NotACycle, "sigma is not a single " + std::to_string(n) + "-cycle");
  }
  return d;
}

ComponentDecomposition decompose(const IvppBranch2D& branch, Method method) {
  const Parametrization param = [branch](double x) { return branch.point(x); };
  std::vector<double> bounds = method == Method::Analytic
                                   ? boundaries_analytic(branch)
                                   : boundaries_empirical(builtin::f2d(), param, branch.period);
  return decompose_with(builtin::f2d(), param, branch.period, std::move(bounds), Convention::LeftClosed,
                        branch.label());
}

}  // namespace ivpp
