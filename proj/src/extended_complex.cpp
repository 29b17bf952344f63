#include "ivpp/extended_complex.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ivpp/error.hpp"

namespace ivpp {

ExtendedComplex::ExtendedComplex(Complex v) {
  if (std::isnan(v.real()) || std::isnan(v.imag())) {
    throw Error(ErrorKind::Indeterminate, "NaN is not a point of the projective line");
  }
  if (std::isinf(v.real()) || std::isinf(v.imag())) {
    value_ = std::nullopt;
  } else {
    value_ = v;
  }
}

Complex ExtendedComplex::value() const {
  if (!value_) throw Error(ErrorKind::InfiniteCoordinate, "coordinate is at infinity");
  return *value_;
}

double ExtendedComplex::real_or_inf() const noexcept {
  return value_ ? value_->real() : std::numeric_limits<double>::infinity();
}

namespace {

// |a - b| / sqrt(1 + |b|^2), arranged so that large |b| does not overflow.
double scaled_gap(Complex a, Complex b) {
  const double nb = std::abs(b);
  if (nb <= 1.0) return std::abs(a - b) / std::sqrt(1.0 + nb * nb);
  const double inv = 1.0 / nb;
  return std::abs(a / b - 1.0) / std::sqrt(inv * inv + 1.0);
}

}  // namespace

double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return chordal_distance(b, a);
  const Complex va = a.value();
  const double na = std::abs(va);
  if (b.is_infinite()) return 2.0 / std::sqrt(1.0 + na * na);
  const Complex vb = b.value();
  if (na > 1.0 && std::abs(vb) > 1.0) {
    // inversion is an isometry of the chordal metric
    return chordal_distance(ExtendedComplex(1.0 / va), ExtendedComplex(1.0 / vb));
  }
  if (na > std::abs(vb)) return chordal_distance(b, a);
  return 2.0 * scaled_gap(va, vb) / std::sqrt(1.0 + na * na);
}

Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0) z = Complex{z.real(), 0.0};
  return std::sqrt(z);
}

std::string to_string(const ExtendedComplex& v) {
  if (v.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(17);
  const Complex c = v.value();
  os << c.real();
  if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

}  // namespace ivpp
