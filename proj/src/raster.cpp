#include "ivpp/raster.hpp"

#include <cmath>
#include <sstream>

#include "ivpp/error.hpp"

namespace ivpp {
namespace {

// Coordinates beyond this are treated as a pole of the orbit.
constexpr double kPoleMagnitude = 1e8;

bool orbit_is_regular(const RationalMapSpec& map, PointD p, int steps) {
  for (int i = 0; i < steps; ++i) {
    try {
      p = apply(map, p);
    } catch (const Error&) {
      return false;
    }
    for (const auto& c : p.coords()) {
      if (c.is_infinite() || std::abs(c.value()) > kPoleMagnitude) return false;
    }
  }
  return true;
}

RasterCell classify_cell(const RationalMapSpec& map, std::span<const RasterTarget> targets, const CellRect& rect,
                         const RasterOptions& options) {
  RasterCell cell;
  for (const auto& target : targets) {
    auto hit = target.locate(rect);
    if (!hit) continue;
    if (!orbit_is_regular(map, hit->point, target.period)) {
      cell.undefined = true;
      return cell;
    }
    std::optional<int> period;
    try {
      period = detect_period(map, hit->point, options.n_max, options.tol);
    } catch (const Error&) {
      cell.undefined = true;
      return cell;
    }
    if (period != target.period) continue;
    cell.period = period;
    cell.component = target.component(hit->point);
    cell.level = hit->level;
    return cell;
  }
  if (!options.classify_generic) return cell;

  std::vector<ExtendedComplex> coords{ExtendedComplex(rect.x_center()), ExtendedComplex(rect.y_center())};
  for (int i = 2; i < map.dimension(); ++i) {
    const auto k = static_cast<std::size_t>(i - 2);
    coords.emplace_back(k < options.slice.size() ? options.slice[k] : 0.0);
  }
  coords.resize(static_cast<std::size_t>(map.dimension()));
  try {
    cell.period = detect_period(map, PointD(std::move(coords)), options.n_max, options.tol);
  } catch (const Error&) {
    cell.undefined = true;
  }
  return cell;
}

}  // namespace

TilingRaster::TilingRaster(Window window, Resolution resolution, std::vector<RasterCell> cells)
    : window_(window), resolution_(resolution), cells_(std::move(cells)) {
  validate(window_, resolution_);
  if (cells_.size() != static_cast<std::size_t>(resolution_.width) * resolution_.height) {
    throw Error(ErrorKind::InvalidArgument, "cell count does not match the resolution");
  }
}

const RasterCell& TilingRaster::at(int col, int row) const {
  if (col < 0 || row < 0 || col >= resolution_.width || row >= resolution_.height) {
    throw Error(ErrorKind::InvalidArgument, "cell index out of range");
  }
  return cells_[static_cast<std::size_t>(row) * resolution_.width + col];
}

std::string TilingRaster::to_pgm() const {
  std::string out = "P5\n" + std::to_string(resolution_.width) + " " + std::to_string(resolution_.height) + "\n255\n";
  out.reserve(out.size() + cells_.size());
  for (const auto& cell : cells_) {
    out.push_back(static_cast<char>(cell.component ? std::min(*cell.component, 255) : 0));
  }
  return out;
}

std::string TilingRaster::to_csv() const {
  bool with_level = false;
  for (const auto& cell : cells_) with_level = with_level || cell.level.has_value();
  std::ostringstream out;
  out.precision(17);
  out << "x,y,period,component" << (with_level ? ",r" : "") << '\n';
  for (int row = 0; row < resolution_.height; ++row) {
    for (int col = 0; col < resolution_.width; ++col) {
      const auto& cell = at(col, row);
      if (!cell.period) continue;
      const auto r = rect(col, row);
      out << r.x_center() << ',' << r.y_center() << ',' << *cell.period << ',';
      if (cell.component) out << *cell.component;
      if (with_level) {
        out << ',';
        if (cell.level) out << *cell.level;
      }
      out << '\n';
    }
  }
  return out.str();
}

TilingRaster render_tiling(const RationalMapSpec& map, std::span<const RasterTarget> targets, const Window& window,
                           const Resolution& resolution, const RasterOptions& options) {
  validate(window, resolution);
  if (options.n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
  if (resolution.width > 4096 || resolution.height > 4096) {
    throw Error(ErrorKind::InvalidArgument, "raster resolution is limited to 4096x4096");
  }
  std::vector<RasterCell> cells(static_cast<std::size_t>(resolution.width) * resolution.height);
  parallel_for(resolution.height, options.threads ? options.threads : default_threads(), [&](int row) {
    for (int col = 0; col < resolution.width; ++col) {
      cells[static_cast<std::size_t>(row) * resolution.width + col] =
          classify_cell(map, targets, cell_rect(window, resolution, col, row), options);
    }
  });
  return TilingRaster(window, resolution, std::move(cells));
}

RasterTarget ivpp2d_target(const IvppBranch2D& branch, ComponentDecomposition decomposition) {
  RasterTarget target;
  target.period = branch.period;
  const double rho = branch.rho;
  // Cell centres are never exactly on the hyperbola; project along the
  // column first, then along the row.
  target.locate = [branch, rho](const CellRect& rect) -> std::optional<RasterHit> {
    const double xc = rect.x_center();
    if (xc != 0.0 && rect.contains(xc, rho / xc)) return RasterHit{branch.point(xc), std::nullopt};
    const double yc = rect.y_center();
    if (yc != 0.0 && rect.contains(rho / yc, yc)) return RasterHit{branch.point(rho / yc), std::nullopt};
    return std::nullopt;
  };
  target.component = [decomposition = std::move(decomposition)](const PointD& p) {
    return decomposition.classify(p[0].real_or_inf());
  };
  return target;
}

}  // namespace ivpp
