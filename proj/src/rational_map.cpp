#include "ivpp/rational_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "ivpp/error.hpp"

namespace ivpp {

bool PointD::all_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_finite(); });
}

std::vector<Complex> PointD::finite_values() const {
  std::vector<Complex> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.value());
  return out;
}

double chordal_distance(const PointD& a, const PointD& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::InvalidArgument, "points of different dimension");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) d = std::max(d, chordal_distance(a[i], b[i]));
  return d;
}

namespace {

constexpr double kCancellation = 1e-14;

bool negligible(Complex value, double scale) { return std::abs(value) <= kCancellation * scale; }

// Behaviour of a polynomial as the infinite coordinates tend to infinity:
// substituting v = w/t for each infinite v, the coefficient of t^-k is a
// polynomial in w whose coefficients are evaluated at the finite coordinates.
struct Expansion {
  int degree = -1;  // -1: identically zero at this point
  bool uncertain = false;
  std::map<Monomial, Complex> top;
};

Expansion expand(const Polynomial& poly, std::span<const ExtendedComplex> point) {
  struct Slot {
    Complex sum{0.0, 0.0};
    double scale = 0.0;
  };
  std::map<Monomial, Slot> slots;
  for (const auto& term : poly.terms()) {
    Monomial alpha{0, 0, 0};
    Complex value{term.coefficient, 0.0};
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      const int e = term.exponents[v];
      if (e == 0) continue;
      if (point[v].is_infinite()) {
        alpha[v] = e;
      } else {
        const Complex base = point[v].value();
        for (int k = 0; k < e; ++k) value *= base;
      }
    }
    auto& slot = slots[alpha];
    slot.sum += value;
    slot.scale += std::abs(value);
  }
  Expansion out;
  for (const auto& [alpha, slot] : slots) {
    if (!negligible(slot.sum, slot.scale)) out.degree = std::max(out.degree, total_degree(alpha));
  }
  for (const auto& [alpha, slot] : slots) {
    const int k = total_degree(alpha);
    const bool zero = negligible(slot.sum, slot.scale);
    // a vanishing coefficient multiplying a divergent monomial: the product
    // may tend to anything, so nothing is known about this polynomial
    if (zero && k > 0 && k > out.degree) out.uncertain = true;
    if (!zero && k == out.degree) out.top.emplace(alpha, slot.sum);
  }
  return out;
}

ExtendedComplex finite_ratio(Complex num, double num_scale, Complex den, double den_scale) {
  const bool num_zero = negligible(num, num_scale);
  const bool den_zero = negligible(den, den_scale);
  if (num_zero && den_zero) throw Error(ErrorKind::Indeterminate, "0/0");
  if (den_zero) return ExtendedComplex::infinity();
  if (num_zero) return ExtendedComplex(0.0);
  return ExtendedComplex(num / den);
}

}  // namespace

ExtendedComplex evaluate_ratio(const Polynomial& numerator, const Polynomial& denominator,
                               std::span<const ExtendedComplex> point) {
  const bool finite = std::all_of(point.begin(), point.end(), [](const auto& c) { return c.is_finite(); });
  if (finite) {
    std::array<Complex, kMaxVariables> values{};
    for (std::size_t i = 0; i < point.size(); ++i) values[i] = point[i].value();
    const auto [num, ns] = numerator.evaluate_with_scale(values);
    const auto [den, ds] = denominator.evaluate_with_scale(values);
    return finite_ratio(num, ns, den, ds);
  }

  const Expansion num = expand(numerator, point);
  const Expansion den = expand(denominator, point);
  if (num.uncertain || den.uncertain) {
    throw Error(ErrorKind::Indeterminate, "zero times infinity in a coordinate");
  }
  if (num.degree < 0 && den.degree < 0) throw Error(ErrorKind::Indeterminate, "0/0");
  if (den.degree < 0 || num.degree > den.degree) return ExtendedComplex::infinity();
  if (num.degree < 0 || num.degree < den.degree) return ExtendedComplex(0.0);

  // equal growth: the limit exists only if the leading parts are proportional
  if (num.top.size() != den.top.size()) {
    throw Error(ErrorKind::Indeterminate, "limit at infinity depends on direction");
  }
  auto pivot = std::max_element(den.top.begin(), den.top.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) < std::abs(b.second);
  });
  const auto num_pivot = num.top.find(pivot->first);
  if (num_pivot == num.top.end()) {
    throw Error(ErrorKind::Indeterminate, "limit at infinity depends on direction");
  }
  const Complex ratio = num_pivot->second / pivot->second;
  for (const auto& [alpha, d] : den.top) {
    const auto it = num.top.find(alpha);
    if (it == num.top.end() || std::abs(it->second - ratio * d) > 1e-12 * std::abs(it->second)) {
      throw Error(ErrorKind::Indeterminate, "limit at infinity depends on direction");
    }
  }
  return ExtendedComplex(ratio);
}

RationalMapSpec::RationalMapSpec(int dimension, std::vector<RationalComponent> components,
                                 std::vector<NamedInvariant> invariants, std::string name)
    : dimension_(dimension),
      components_(std::move(components)),
      invariants_(std::move(invariants)),
      name_(std::move(name)) {
  if (dimension_ < 1 || dimension_ > kMaxVariables) {
    throw Error(ErrorKind::SemanticError, "dimension must be 1, 2 or 3");
  }
  if (components_.size() != static_cast<std::size_t>(dimension_)) {
    throw Error(ErrorKind::SemanticError, "map of dimension " + std::to_string(dimension_) + " has " +
                                              std::to_string(components_.size()) + " components");
  }
  for (const auto& c : components_) {
    if (c.denominator.is_zero()) throw Error(ErrorKind::SemanticError, "zero denominator");
    if (c.numerator.variables_used() > dimension_ || c.denominator.variables_used() > dimension_) {
      throw Error(ErrorKind::SemanticError, "component uses a variable beyond the map dimension");
    }
  }
  for (const auto& inv : invariants_) {
    if (inv.polynomial.variables_used() > dimension_) {
      throw Error(ErrorKind::SemanticError, "invariant '" + inv.name + "' uses an undeclared variable");
    }
  }
  if (invariants_.empty()) return;

  std::mt19937_64 rng(0x1f2d3f4dULL);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  int accepted = 0;
  for (int attempt = 0; attempt < 20000 && accepted < 100; ++attempt) {
    std::array<Complex, kMaxVariables> p{};
    for (int i = 0; i < dimension_; ++i) p[static_cast<std::size_t>(i)] = {coord(rng), coord(rng)};
    std::array<Complex, kMaxVariables> image{};
    bool usable = true;
    for (int i = 0; i < dimension_ && usable; ++i) {
      const auto& c = components_[static_cast<std::size_t>(i)];
      const Complex den = c.denominator.evaluate(p);
      const Complex val = c.numerator.evaluate(p) / den;
      usable = std::abs(den) > 0.05 && std::abs(val) < 1e3;
      image[static_cast<std::size_t>(i)] = val;
    }
    if (!usable) continue;
    ++accepted;
    for (const auto& inv : invariants_) {
      const auto [before, s0] = inv.polynomial.evaluate_with_scale(p);
      const auto [after, s1] = inv.polynomial.evaluate_with_scale(image);
      if (std::abs(after - before) > kTolInvariant * std::max({1.0, s0, s1})) {
        throw Error(ErrorKind::SemanticError, "declared invariant '" + inv.name + "' is not conserved by the map");
      }
    }
  }
  if (accepted < 100) {
    throw Error(ErrorKind::SemanticError, "could not sample enough regular points to check invariants");
  }
}

bool RationalMapSpec::same_structure(const RationalMapSpec& other) const {
  if (dimension_ != other.dimension_ || components_ != other.components_) return false;
  if (invariants_.size() != other.invariants_.size()) return false;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i].polynomial != other.invariants_[i].polynomial) return false;
  }
  return true;
}

PointD apply(const RationalMapSpec& map, const PointD& p) {
  if (p.dimension() != static_cast<std::size_t>(map.dimension())) {
    throw Error(ErrorKind::InvalidArgument, "point dimension does not match the map");
  }
  std::array<ExtendedComplex, kMaxVariables> padded{};
  for (std::size_t i = 0; i < p.dimension(); ++i) padded[i] = p[i];
  std::vector<ExtendedComplex> out;
  out.reserve(p.dimension());
  for (const auto& c : map.components()) out.push_back(evaluate_ratio(c.numerator, c.denominator, padded));
  return PointD(std::move(out));
}

OrbitTrace iterate(const RationalMapSpec& map, const PointD& p, int steps, double tol) {
  if (steps < 1) throw Error(ErrorKind::InvalidArgument, "iterate needs at least one step");
  OrbitTrace trace;
  trace.points.push_back(p);
  for (int k = 1; k <= steps; ++k) {
    try {
      trace.points.push_back(apply(map, trace.points.back()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Indeterminate) throw;
      trace.indeterminate_step = k;
      return trace;
    }
  }
  trace.closed = chordal_distance(trace.points.back(), trace.points.front()) < tol;
  if (trace.closed) {
    for (int m = 1; m <= steps; ++m) {
      if (chordal_distance(trace.points[static_cast<std::size_t>(m)], trace.points.front()) < tol) {
        if (steps % m == 0) trace.minimal_period = m;
        break;
      }
    }
  }
  return trace;
}

std::vector<Complex> invariant_values(const RationalMapSpec& map, const PointD& p) {
  std::array<Complex, kMaxVariables> values{};
  const auto finite = p.finite_values();
  std::copy(finite.begin(), finite.end(), values.begin());
  std::vector<Complex> out;
  for (const auto& inv : map.invariants()) out.push_back(inv.polynomial.evaluate(values));
  return out;
}

std::optional<int> detect_period(const RationalMapSpec& map, const PointD& p, int n_max, double tol) {
  if (n_max < 1 || !(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "need n_max >= 1 and tol > 0");
  PointD q = p;
  for (int n = 1; n <= n_max; ++n) {
    try {
      q = apply(map, q);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Indeterminate) throw Error(ErrorKind::Indeterminate, e.what(), n);
      throw;
    }
    if (chordal_distance(q, p) < tol) return n;
  }
  return std::nullopt;
}

namespace builtin {

namespace {

const Polynomial kX = Polynomial::variable(0);
const Polynomial kY = Polynomial::variable(1);
const Polynomial kZ = Polynomial::variable(2);
const Polynomial kOne = Polynomial::constant(1.0);

}  // namespace

const RationalMapSpec& f2d() {
  static const RationalMapSpec spec(
      2,
      {{kX * (kOne - kY), kOne - kX}, {kY * (kOne - kX), kOne - kY}},
      {{"r", kX * kY}}, "f2d");
  return spec;
}

const RationalMapSpec& f3d() {
  static const RationalMapSpec spec = [] {
    const Polynomial u = kOne - kY + kY * kZ;
    const Polynomial v = kOne - kZ + kZ * kX;
    const Polynomial w = kOne - kX + kX * kY;
    return RationalMapSpec(3, {{kX * u, v}, {kY * v, w}, {kZ * w, u}},
                           {{"r", kX * kY * kZ}, {"s", (kOne - kX) * (kOne - kY) * (kOne - kZ)}}, "f3d");
  }();
  return spec;
}

RationalMapSpec f2d_reduced(double r) {
  return RationalMapSpec(1, {{kX - Polynomial::constant(r), kOne - kX}}, {}, "f2d-reduced");
}

const RationalMapSpec& lv_recurrence() {
  static const RationalMapSpec spec(1, {{-kX, kOne - kX}}, {}, "lv-recurrence");
  return spec;
}

RationalMapSpec by_name(const std::string& name, double r) {
  if (name == "f2d") return f2d();
  if (name == "f3d") return f3d();
  if (name == "f2d-reduced") return f2d_reduced(r);
  if (name == "lv-recurrence") return lv_recurrence();
  throw Error(ErrorKind::InvalidArgument, "unknown built-in map '" + name + "'");
}

}  // namespace builtin

}  // namespace ivpp
