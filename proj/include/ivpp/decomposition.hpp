#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ivpp/ivpp2d.hpp"
#include "ivpp/rational_map.hpp"

namespace ivpp {

/// Which end of each interval is closed. With LeftClosed the point at
/// infinity joins the unbounded-below interval (the arcs [b_k, b_{k+1}) of
/// the circle R u {inf}); with RightClosed it joins the unbounded-above one.
enum class Convention { LeftClosed, RightClosed };

const char* to_string(Convention c);

struct Interval {
  double lo = 0.0;  // -inf for the unbounded-below piece
  double hi = 0.0;  // +inf for the unbounded-above piece
  bool lo_closed = false;
  bool hi_closed = false;
  bool holds_infinity = false;
};

/// Components of one branch along the x direction. Components are numbered
/// from 1 in ascending x order; sigma[i-1] is the component F maps C_i into.
struct ComponentDecomposition {
  int period = 0;
  std::string branch;
  Convention convention = Convention::LeftClosed;
  std::vector<double> boundaries;  // finite boundaries, ascending; infinity is implicit
  std::vector<Interval> intervals;
  std::vector<int> sigma;
  std::optional<double> level;
  int tiles = 0;

  int size() const noexcept { return static_cast<int>(intervals.size()); }
  /// Component holding x; +-inf denote the point at infinity.
  int classify(double x) const;
};

std::vector<Interval> build_intervals(const std::vector<double>& finite_boundaries, Convention convention);

/// Cycle lengths of a 1-based permutation; throws NotACycle if it is not one.
std::vector<int> cycle_lengths(const std::vector<int>& sigma);

using Parametrization = std::function<PointD(double)>;

/// The n-step orbit of branch.point(x0). Throws PoleHit (with the step
/// index) when an orbit point has an infinite coordinate or the map is
/// indeterminate there, NoClosure if the orbit does not return.
OrbitTrace trace_flow(const IvppBranch2D& branch, double x0, int n);

/// Finite boundaries c_m for the branch's root exp(2 pi i m / n), ascending,
/// followed by +inf. Throws NonRealBoundary if some c_m is not real.
std::vector<double> boundaries_analytic(const IvppBranch2D& branch);

struct ScanSpec {
  double half_width = 8.0;
  int samples = 4000;
  int inverse_samples = 400;
};

/// Boundaries located by bisection on jumps of the orbit signature
/// x -> (signs of the first coordinate of the n iterates), keeping only jumps
/// through infinity. The region |x| > half_width is scanned through u = 1/x.
/// Result is ascending with +inf appended. Throws NoClosure when sampled
/// points are not n-periodic.
std::vector<double> boundaries_empirical(const RationalMapSpec& map, const Parametrization& param, int n,
                                         const ScanSpec& scan = {});

enum class Method { Analytic, Empirical };

ComponentDecomposition decompose(const IvppBranch2D& branch, Method method);

/// Intervals from the given boundaries (a trailing +inf is ignored) and sigma
/// from one application of the map to an interior point of each interval.
/// With require_cycle, throws NotACycle unless sigma is a single n-cycle over
/// n intervals.
ComponentDecomposition decompose_with(const RationalMapSpec& map, const Parametrization& param, int n,
                                      std::vector<double> boundaries, Convention convention, std::string label,
                                      bool require_cycle = true);

}  // namespace ivpp
