#include "ivpp/denominators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ivpp/error.hpp"

namespace ivpp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// out[(k - 1) * d + j] = denominator of component j evaluated at F^{k-1}(p);
// NaN once the orbit leaves the finite part or hits indeterminacy.
void denominator_values(const RationalMapSpec& map, PointD p, int k_max, std::span<double> out) {
  const int d = map.dimension();
  std::fill(out.begin(), out.end(), kNaN);
  for (int k = 1; k <= k_max; ++k) {
    if (!p.all_finite()) return;
    const auto values = p.finite_values();
    for (int j = 0; j < d; ++j) {
      const Complex v = map.components()[static_cast<std::size_t>(j)].denominator.evaluate(values);
      out[static_cast<std::size_t>((k - 1) * d + j)] = v.real();
    }
    if (k == k_max) return;
    try {
      p = apply(map, p);
    } catch (const Error&) {
      return;
    }
  }
}

PointD slice_point(const RationalMapSpec& map, double x, double y, std::span<const double> slice) {
  std::vector<ExtendedComplex> coords{ExtendedComplex(x), ExtendedComplex(y)};
  for (int i = 2; i < map.dimension(); ++i) {
    coords.emplace_back(slice[static_cast<std::size_t>(i - 2)]);
  }
  coords.resize(static_cast<std::size_t>(map.dimension()));
  return PointD(std::move(coords));
}

}  // namespace

bool DenominatorZeroSet::marked(int k, int component, int col, int row) const {
  if (k < 1 || k > depth || component < 0 || component >= components) return false;
  if (col < 0 || row < 0 || col >= resolution.width || row >= resolution.height) return false;
  return layers[static_cast<std::size_t>((k - 1) * components + component)]
               [static_cast<std::size_t>(row) * resolution.width + col] != 0;
}

bool DenominatorZeroSet::marked_at(int k, int component, double x, double y) const {
  const double fx = (x - window.x_min) / (window.x_max - window.x_min) * resolution.width;
  const double fy = (window.y_max - y) / (window.y_max - window.y_min) * resolution.height;
  if (!(fx >= 0 && fy >= 0)) return false;
  return marked(k, component, static_cast<int>(fx), static_cast<int>(fy));
}

std::vector<std::uint8_t> DenominatorZeroSet::first_hit() const {
  const std::size_t cells = static_cast<std::size_t>(resolution.width) * resolution.height;
  std::vector<std::uint8_t> hit(cells, 0);
  for (int k = depth; k >= 1; --k) {
    for (int j = 0; j < components; ++j) {
      const auto& layer = layers[static_cast<std::size_t>((k - 1) * components + j)];
      for (std::size_t i = 0; i < cells; ++i) {
        if (layer[i]) hit[i] = static_cast<std::uint8_t>(k);
      }
    }
  }
  return hit;
}

std::size_t DenominatorZeroSet::count(int k, int component) const {
  if (k < 1 || k > depth || component < 0 || component >= components) return 0;
  const auto& layer = layers[static_cast<std::size_t>((k - 1) * components + component)];
  return static_cast<std::size_t>(std::count(layer.begin(), layer.end(), std::uint8_t{1}));
}

DenominatorZeroSet denominator_zero_curves(const RationalMapSpec& map, int k_max, const Window& window,
                                           const Resolution& resolution, std::span<const double> slice,
                                           unsigned threads) {
  validate(window, resolution);
  if (k_max < 1 || k_max > 6) throw Error(ErrorKind::InvalidArgument, "k_max must be in 1..6");
  const int d = map.dimension();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "denominator curves need a map of dimension >= 2");
  if (static_cast<int>(slice.size()) < d - 2) {
    throw Error(ErrorKind::InvalidArgument, "missing slice coordinates for a " + std::to_string(d) + "D map");
  }

  const int w = resolution.width;
  const int h = resolution.height;
  const int per_corner = k_max * d;
  const double dx = (window.x_max - window.x_min) / w;
  const double dy = (window.y_max - window.y_min) / h;

  // Corner values, (h + 1) rows of (w + 1) corners, row 0 at y_max.
  std::vector<double> corners(static_cast<std::size_t>(w + 1) * (h + 1) * per_corner);
  if (threads == 0) threads = default_threads();
  parallel_for(h + 1, threads, [&](int row) {
    const double y = window.y_max - row * dy;
    for (int col = 0; col <= w; ++col) {
      const double x = window.x_min + col * dx;
      const auto offset = (static_cast<std::size_t>(row) * (w + 1) + col) * per_corner;
      denominator_values(map, slice_point(map, x, y, slice), k_max,
                         std::span<double>(corners).subspan(offset, static_cast<std::size_t>(per_corner)));
    }
  });

  DenominatorZeroSet set;
  set.depth = k_max;
  set.components = d;
  set.window = window;
  set.resolution = resolution;
  set.layers.assign(static_cast<std::size_t>(per_corner),
                    std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, 0));

  parallel_for(h, threads, [&](int row) {
    for (int col = 0; col < w; ++col) {
      const std::size_t base[4] = {
          (static_cast<std::size_t>(row) * (w + 1) + col) * per_corner,
          (static_cast<std::size_t>(row) * (w + 1) + col + 1) * per_corner,
          (static_cast<std::size_t>(row + 1) * (w + 1) + col) * per_corner,
          (static_cast<std::size_t>(row + 1) * (w + 1) + col + 1) * per_corner,
      };
      const std::size_t cell = static_cast<std::size_t>(row) * w + col;
      for (int k = 1; k <= k_max; ++k) {
        bool hit = false;
        for (int j = 0; j < d; ++j) {
          const int idx = (k - 1) * d + j;
          double lo = std::numeric_limits<double>::infinity();
          double hi = -lo;
          bool defined = true;
          for (const auto b : base) {
            const double v = corners[b + static_cast<std::size_t>(idx)];
            if (std::isnan(v)) {
              defined = false;
              break;
            }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
          }
          if (defined && lo <= 0.0 && hi >= 0.0) {
            set.layers[static_cast<std::size_t>(idx)][cell] = 1;
            hit = true;
          }
        }
        if (hit) break;
      }
    }
  });
  return set;
}

std::string first_hit_pgm(const DenominatorZeroSet& set) {
  const auto hit = set.first_hit();
  std::string out = "P5\n" + std::to_string(set.resolution.width) + " " + std::to_string(set.resolution.height) +
                    "\n255\n";
  out.append(hit.begin(), hit.end());
  return out;
}

std::string zero_set_csv(const DenominatorZeroSet& set) {
  std::ostringstream out;
  out.precision(17);
  out << "x,y,k,component\n";
  for (int row = 0; row < set.resolution.height; ++row) {
    for (int col = 0; col < set.resolution.width; ++col) {
      for (int k = 1; k <= set.depth; ++k) {
        for (int j = 0; j < set.components; ++j) {
          if (!set.marked(k, j, col, row)) continue;
          const auto rect = cell_rect(set.window, set.resolution, col, row);
          out << rect.x_center() << ',' << rect.y_center() << ',' << k << ',' << j << '\n';
        }
      }
    }
  }
  return out.str();
}

std::vector<CurveZero> denominator_zeros_on_curve(const RationalMapSpec& map, const Parametrization& param,
                                                  int k_max, double x_min, double x_max, int samples) {
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be positive");
  if (!(x_min < x_max) || samples < 2) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  const int d = map.dimension();
  const std::size_t width = static_cast<std::size_t>(k_max * d);

  auto values_at = [&](double x, std::span<double> out) {
    try {
      denominator_values(map, param(x), k_max, out);
    } catch (const Error&) {
      std::fill(out.begin(), out.end(), kNaN);
    }
  };

  std::vector<double> prev(width), cur(width), mid(width);
  const double step = (x_max - x_min) / (samples - 1);
  std::vector<CurveZero> zeros;
  values_at(x_min, prev);
  for (int i = 1; i < samples; ++i) {
    const double a0 = x_min + (i - 1) * step;
    const double b0 = x_min + i * step;
    values_at(b0, cur);
    for (std::size_t idx = 0; idx < width; ++idx) {
      const double fa0 = prev[idx];
      const double fb0 = cur[idx];
      if (std::isnan(fa0) || std::isnan(fb0)) continue;
      if (fa0 == 0.0) {
        if (i == 1) zeros.push_back({a0, static_cast<int>(idx) / d + 1, static_cast<int>(idx) % d});
        continue;
      }
      if (fb0 != 0.0 && (fa0 < 0) == (fb0 < 0)) continue;
      if (fb0 == 0.0) {
        zeros.push_back({b0, static_cast<int>(idx) / d + 1, static_cast<int>(idx) % d});
        continue;
      }
      double a = a0;
      double b = b0;
      double fa = fa0;
      bool ok = true;
      for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        values_at(m, mid);
        const double fm = mid[idx];
        if (std::isnan(fm)) {
          ok = false;
          break;
        }
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      if (!ok) continue;
      const double root = 0.5 * (a + b);
      values_at(root, mid);
      // A jump through infinity also changes sign; only small values count.
      if (!std::isnan(mid[idx]) && std::abs(mid[idx]) < 1e-6) {
        zeros.push_back({root, static_cast<int>(idx) / d + 1, static_cast<int>(idx) % d});
      }
    }
    std::swap(prev, cur);
  }
  std::sort(zeros.begin(), zeros.end(), [](const CurveZero& l, const CurveZero& r) {
    if (l.x != r.x) return l.x < r.x;
    if (l.step != r.step) return l.step < r.step;
    return l.component < r.component;
  });
  return zeros;
}

}  // namespace ivpp
