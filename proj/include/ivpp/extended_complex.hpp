#pragma once

#include <complex>
#include <optional>
#include <string>

namespace ivpp {

using Complex = std::complex<double>;

/// A point of the complex projective line: either a finite complex number or
/// the single point at infinity. NaN is never a value.
class ExtendedComplex {
 public:
  ExtendedComplex() : value_(Complex{0.0, 0.0}) {}
  ExtendedComplex(Complex v);  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double v) : ExtendedComplex(Complex{v, 0.0}) {}  // NOLINT

  static ExtendedComplex infinity() { return ExtendedComplex(std::nullopt); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Finite value; throws InfiniteCoordinate at infinity.
  Complex value() const;
  /// Real part for finite values, +inf at infinity.
  double real_or_inf() const noexcept;

  bool operator==(const ExtendedComplex& other) const = default;

 private:
  explicit ExtendedComplex(std::optional<Complex> v) : value_(v) {}
  std::optional<Complex> value_;
};

/// Chordal distance on the Riemann sphere (diameter 1 normalization, so the
/// distance between 0 and infinity is 2).
double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

/// Principal square root with sqrt(negative real) = +i*sqrt(|.|) regardless
/// of the sign of a zero imaginary part.
Complex principal_sqrt(Complex z);

std::string to_string(const ExtendedComplex& v);

}  // namespace ivpp
