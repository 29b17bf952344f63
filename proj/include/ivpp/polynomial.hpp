#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivpp/extended_complex.hpp"

namespace ivpp {

inline constexpr int kMaxVariables = 3;

/// Exponents of x, y, z.
using Monomial = std::array<int, kMaxVariables>;

int total_degree(const Monomial& m);

/// Sparse real-coefficient polynomial in up to three variables. Terms are
/// kept sorted by monomial and never carry a zero coefficient.
class Polynomial {
 public:
  struct Term {
    Monomial exponents;
    double coefficient;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  static Polynomial constant(double c);
  static Polynomial variable(int index);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (0 when absent).
  double constant_term() const noexcept;
  int degree() const noexcept;
  /// Number of leading variables the polynomial depends on (0 for constants).
  int variables_used() const noexcept;

  Complex evaluate(std::span<const Complex> point) const;
  /// Value together with the sum of absolute term values; the latter is the
  /// scale used to decide whether a computed value is a cancellation zero.
  std::pair<Complex, double> evaluate_with_scale(std::span<const Complex> point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned exponent) const;
  Polynomial scaled(double factor) const;

  bool operator==(const Polynomial& other) const = default;

  /// Text form accepted by the map DSL, e.g. "x - x*y".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace ivpp
