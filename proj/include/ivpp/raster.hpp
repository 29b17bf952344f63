#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivpp/decomposition.hpp"
#include "ivpp/grid.hpp"
#include "ivpp/ivpp2d.hpp"
#include "ivpp/rational_map.hpp"

namespace ivpp {

struct RasterCell {
  std::optional<int> period;
  std::optional<int> component;  // 1-based, only for cells on a target variety
  std::optional<double> level;
  bool undefined = false;        // an orbit step hit a pole or indeterminacy
};

struct RasterHit {
  PointD point;
  std::optional<double> level;
};

/// A variety drawn on the raster. `locate` returns a point of the variety
/// inside the cell (if any); `component` names its component.
struct RasterTarget {
  int period = 0;
  std::function<std::optional<RasterHit>(const CellRect&)> locate;
  std::function<int(const PointD&)> component;
};

struct RasterOptions {
  int n_max = 8;
  double tol = 1e-6;
  unsigned threads = 0;  // 0: default_threads()
  /// Run period detection on cells not reached by any target.
  bool classify_generic = true;
  /// Fixed coordinates beyond (x, y) for generic cells of 3D maps.
  std::vector<double> slice;
};

class TilingRaster {
 public:
  TilingRaster(Window window, Resolution resolution, std::vector<RasterCell> cells);

  const Window& window() const noexcept { return window_; }
  const Resolution& resolution() const noexcept { return resolution_; }
  const RasterCell& at(int col, int row) const;
  std::span<const RasterCell> cells() const noexcept { return cells_; }
  CellRect rect(int col, int row) const { return cell_rect(window_, resolution_, col, row); }

  /// P5 greymap: the 1-based component, 0 for unclassified cells; row 0 is y_max.
  std::string to_pgm() const;
  /// Rows "x,y,period,component" (plus ",r" when any cell carries a level)
  /// for every cell with a period.
  std::string to_csv() const;

 private:
  Window window_;
  Resolution resolution_;
  std::vector<RasterCell> cells_;
};

/// Deterministic for any thread count.
TilingRaster render_tiling(const RationalMapSpec& map, std::span<const RasterTarget> targets, const Window& window,
                           const Resolution& resolution, const RasterOptions& options = {});

/// The hyperbola xy = rho of a 2D branch, coloured by `decomposition`.
RasterTarget ivpp2d_target(const IvppBranch2D& branch, ComponentDecomposition decomposition);

}  // namespace ivpp
