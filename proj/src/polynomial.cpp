#include "ivpp/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>

namespace ivpp {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

namespace {

// graded order: lower total degree first, then lexicographic with x highest
bool graded_less(const Monomial& a, const Monomial& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_less(a, b); }
};

using TermMap = std::map<Monomial, double, GradedLess>;

Polynomial from_map(const TermMap& map) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(map.size());
  for (const auto& [mono, coef] : map) {
    if (coef != 0.0) terms.push_back({mono, coef});
  }
  return Polynomial::from_terms(std::move(terms));
}

const char* kVariableNames[kMaxVariables] = {"x", "y", "z"};

}  // namespace

Polynomial Polynomial::constant(double c) {
  Polynomial p;
  if (c != 0.0) p.terms_.push_back({Monomial{0, 0, 0}, c});
  return p;
}

Polynomial Polynomial::variable(int index) {
  Monomial m{0, 0, 0};
  m.at(static_cast<std::size_t>(index)) = 1;
  Polynomial p;
  p.terms_.push_back({m, 1.0});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  TermMap merged;
  for (const auto& t : terms) merged[t.exponents] += t.coefficient;
  Polynomial p;
  for (const auto& [mono, coef] : merged) {
    if (coef != 0.0) p.terms_.push_back({mono, coef});
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponents) == 0);
}

double Polynomial::constant_term() const noexcept {
  if (!terms_.empty() && total_degree(terms_[0].exponents) == 0) return terms_[0].coefficient;
  return 0.0;
}

int Polynomial::degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exponents));
  return d;
}

int Polynomial::variables_used() const noexcept {
  int used = 0;
  for (const auto& t : terms_) {
    for (int v = 0; v < kMaxVariables; ++v) {
      if (t.exponents[static_cast<std::size_t>(v)] > 0) used = std::max(used, v + 1);
    }
  }
  return used;
}

std::pair<Complex, double> Polynomial::evaluate_with_scale(std::span<const Complex> point) const {
  Complex sum{0.0, 0.0};
  double scale = 0.0;
  for (const auto& t : terms_) {
    Complex value{t.coefficient, 0.0};
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      const int e = t.exponents[v];
      if (e == 0) continue;
      const Complex base = point[v];
      Complex p = base;
      for (int k = 1; k < e; ++k) p *= base;
      value *= p;
    }
    sum += value;
    scale += std::abs(value);
  }
  return {sum, scale};
}

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  return evaluate_with_scale(point).first;
}

Polynomial Polynomial::operator-() const { return scaled(-1.0); }

Polynomial Polynomial::scaled(double factor) const {
  if (factor == 0.0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= factor;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  TermMap map;
  for (const auto& t : a.terms_) map[t.exponents] += t.coefficient;
  for (const auto& t : b.terms_) map[t.exponents] += t.coefficient;
  return from_map(map);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  TermMap map;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m{};
      for (std::size_t v = 0; v < kMaxVariables; ++v) m[v] = ta.exponents[v] + tb.exponents[v];
      map[m] += ta.coefficient * tb.coefficient;
    }
  }
  return from_map(map);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1.0);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    double c = t.coefficient;
    const bool negative = c < 0.0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    c = std::abs(c);
    std::string factors;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      const int e = t.exponents[v];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += kVariableNames[v];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += format_number(c);
    } else if (c == 1.0) {
      out += factors;
    } else {
      out += format_number(c) + "*" + factors;
    }
    first = false;
  }
  return out;
}

}  // namespace ivpp
