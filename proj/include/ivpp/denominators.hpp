#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ivpp/decomposition.hpp"
#include "ivpp/grid.hpp"
#include "ivpp/rational_map.hpp"

namespace ivpp {

/// Zero sets of the denominators of the iterates F^k, drawn on a raster of
/// the (x, y) plane. A cell is marked in layer (k, j) when the denominator of
/// component j at step k changes sign across its corners and no earlier step
/// marked the cell, so each layer holds the curves first reached at step k.
struct DenominatorZeroSet {
  int depth = 0;
  int components = 0;
  Window window;
  Resolution resolution;
  /// layers[(k - 1) * components + j], row-major, row 0 at y_max.
  std::vector<std::vector<std::uint8_t>> layers;

  bool marked(int k, int component, int col, int row) const;
  /// Marks of the cell containing (x, y); false outside the window.
  bool marked_at(int k, int component, double x, double y) const;
  /// Per cell, the smallest k with a mark in any component (0 when none).
  std::vector<std::uint8_t> first_hit() const;
  std::size_t count(int k, int component) const;
};

/// For three-dimensional maps the extra coordinates are fixed at `slice`.
/// k_max is limited to 1..6.
DenominatorZeroSet denominator_zero_curves(const RationalMapSpec& map, int k_max, const Window& window,
                                           const Resolution& resolution, std::span<const double> slice = {},
                                           unsigned threads = 0);

/// P5 greymap of first_hit (value k, 0 for unmarked cells).
std::string first_hit_pgm(const DenominatorZeroSet& set);
/// Rows "x,y,k,component" for every marked cell centre.
std::string zero_set_csv(const DenominatorZeroSet& set);

struct CurveZero {
  double x = 0.0;
  int step = 0;       // k, 1-based
  int component = 0;  // 0-based coordinate index
};

/// Genuine zeros (not jumps through infinity) of the step-k denominators
/// along a parametrized curve, for k = 1..k_max, located by bisection on
/// sign changes over `samples` points of [x_min, x_max].
std::vector<CurveZero> denominator_zeros_on_curve(const RationalMapSpec& map, const Parametrization& param,
                                                  int k_max, double x_min, double x_max, int samples = 20000);

}  // namespace ivpp
