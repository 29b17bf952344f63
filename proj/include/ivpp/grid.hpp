#pragma once

#include <functional>

namespace ivpp {

struct Window {
  double x_min = -4.0;
  double x_max = 4.0;
  double y_min = -4.0;
  double y_max = 4.0;
};

struct Resolution {
  int width = 800;
  int height = 800;
};

/// Throws InvalidArgument for an empty window or a non-positive resolution.
void validate(const Window& window, const Resolution& resolution);

struct CellRect {
  double x_lo, x_hi, y_lo, y_hi;
  double x_center() const noexcept { return 0.5 * (x_lo + x_hi); }
  double y_center() const noexcept { return 0.5 * (y_lo + y_hi); }
  bool contains(double x, double y) const noexcept { return x >= x_lo && x < x_hi && y >= y_lo && y < y_hi; }
};

/// Cell (col, row); row 0 is the top edge of the window (y_max).
CellRect cell_rect(const Window& window, const Resolution& resolution, int col, int row);

/// Worker count: IVPP_THREADS if set and positive, else the hardware count.
unsigned default_threads();

/// Runs body(i) for i in [0, count) on `threads` workers. Bodies must only
/// write state owned by their own index.
void parallel_for(int count, unsigned threads, const std::function<void(int)>& body);

}  // namespace ivpp
