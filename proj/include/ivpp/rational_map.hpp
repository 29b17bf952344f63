#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivpp/extended_complex.hpp"
#include "ivpp/polynomial.hpp"

namespace ivpp {

inline constexpr double kTolEq = 1e-9;
inline constexpr double kTolInvariant = 1e-10;

/// A point of (CP^1)^d, each coordinate compactified independently.
class PointD {
 public:
  PointD() = default;
  explicit PointD(std::vector<ExtendedComplex> coords) : coords_(std::move(coords)) {}
  PointD(std::initializer_list<ExtendedComplex> coords) : coords_(coords) {}

  std::size_t dimension() const noexcept { return coords_.size(); }
  const ExtendedComplex& operator[](std::size_t i) const { return coords_.at(i); }
  std::span<const ExtendedComplex> coords() const noexcept { return coords_; }
  bool all_finite() const noexcept;
  /// Finite coordinate values; throws InfiniteCoordinate.
  std::vector<Complex> finite_values() const;

  bool operator==(const PointD&) const = default;

 private:
  std::vector<ExtendedComplex> coords_;
};

/// Largest coordinate-wise chordal distance.
double chordal_distance(const PointD& a, const PointD& b);

struct RationalComponent {
  Polynomial numerator;
  Polynomial denominator;
  bool operator==(const RationalComponent&) const = default;
};

struct NamedInvariant {
  std::string name;
  Polynomial polynomial;
  bool operator==(const NamedInvariant&) const = default;
};

/// A d-dimensional rational map given component-wise, with its declared
/// polynomial invariants. Construction checks every invariant on 100
/// pseudo-random points and throws SemanticError when one is not conserved.
class RationalMapSpec {
 public:
  RationalMapSpec(int dimension, std::vector<RationalComponent> components,
                  std::vector<NamedInvariant> invariants = {}, std::string name = {});

  int dimension() const noexcept { return dimension_; }
  const std::vector<RationalComponent>& components() const noexcept { return components_; }
  const std::vector<NamedInvariant>& invariants() const noexcept { return invariants_; }
  const std::string& name() const noexcept { return name_; }

  /// Structural equality of the normalized polynomials (names ignored).
  bool same_structure(const RationalMapSpec& other) const;

 private:
  int dimension_;
  std::vector<RationalComponent> components_;
  std::vector<NamedInvariant> invariants_;
  std::string name_;
};

/// Projective value of num/den at a point whose coordinates may be infinite.
/// Throws Indeterminate on 0/0 or when the limit depends on the approach.
ExtendedComplex evaluate_ratio(const Polynomial& numerator, const Polynomial& denominator,
                               std::span<const ExtendedComplex> point);

PointD apply(const RationalMapSpec& map, const PointD& p);

struct OrbitTrace {
  std::vector<PointD> points;
  bool closed = false;
  std::optional<int> minimal_period;
  /// 1-based step whose application hit the indeterminacy locus; the trace stops there.
  std::optional<int> indeterminate_step;
};

OrbitTrace iterate(const RationalMapSpec& map, const PointD& p, int steps, double tol = kTolEq);

std::vector<Complex> invariant_values(const RationalMapSpec& map, const PointD& p);

std::optional<int> detect_period(const RationalMapSpec& map, const PointD& p, int n_max,
                                 double tol = kTolEq);

namespace builtin {

/// (x, y) -> (x(1-y)/(1-x), y(1-x)/(1-y)) with invariant r = xy.
const RationalMapSpec& f2d();
/// Three-dimensional Lotka-Volterra map, invariants r = xyz and
/// s = (1-x)(1-y)(1-z).
const RationalMapSpec& f3d();
/// x -> (x - r)/(1 - x), the 2D map reduced on the level xy = r.
RationalMapSpec f2d_reduced(double r);
/// x -> -x/(1 - x).
const RationalMapSpec& lv_recurrence();

/// Looks up "f2d", "f3d", "f2d-reduced" (uses `r`) or "lv-recurrence";
/// throws InvalidArgument otherwise.
RationalMapSpec by_name(const std::string& name, double r = -3.0);

}  // namespace builtin

}  // namespace ivpp
