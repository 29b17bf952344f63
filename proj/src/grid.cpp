#include "ivpp/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "ivpp/error.hpp"

namespace ivpp {

void validate(const Window& window, const Resolution& resolution) {
  if (!(window.x_min < window.x_max) || !(window.y_min < window.y_max)) {
    throw Error(ErrorKind::InvalidArgument, "window is empty");
  }
  if (resolution.width <= 0 || resolution.height <= 0) {
    throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
  }
}

CellRect cell_rect(const Window& window, const Resolution& resolution, int col, int row) {
  const double dx = (window.x_max - window.x_min) / resolution.width;
  const double dy = (window.y_max - window.y_min) / resolution.height;
  return {window.x_min + col * dx, window.x_min + (col + 1) * dx, window.y_max - (row + 1) * dy,
          window.y_max - row * dy};
}

unsigned default_threads() {
  if (const char* env = std::getenv("IVPP_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(int count, unsigned threads, const std::function<void(int)>& body) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1))));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (int i = static_cast<int>(t); i < count; i += static_cast<int>(threads)) body(i);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

}  // namespace ivpp
