#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace malign::render {

namespace {

std::pair<double, double> value_range(const Grid& g) {
  double lo = g.data.front(), hi = g.data.front();
  for (double x : g.data) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

}  // namespace

bool degenerate_range(const Grid& distances) {
  auto [lo, hi] = value_range(distances);
  return lo == hi;
}

int gray_level(double value, double min, double max) {
  if (max == min) return 128;
  double t = 255.0 * (value - min) / (max - min);
  long v = std::lround(t);
  return static_cast<int>(std::clamp(v, 0L, 255L));
}

std::string render_pgm(const Grid& distances) {
  const std::size_t n = distances.rows, m = distances.cols;
  auto [lo, hi] = value_range(distances);
  std::ostringstream out;
  out << "P2\n" << n << " " << m << "\n255\n";
  // Plain PGM lines must stay short; emit one text row per line unless
  // it would run long, then wrap at 16 values.
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      out << gray_level(distances.at(i, j), lo, hi);
      bool wrap = (i + 1) % 16 == 0;
      out << ((i + 1 == n || wrap) ? '\n' : ' ');
    }
  }
  return out.str();
}

std::string render_svg(const Grid& distances, const Alignment& path) {
  const std::size_t n = distances.rows, m = distances.cols;
  auto [lo, hi] = value_range(distances);
  const int cell = 8;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << n * cell << "\" height=\"" << m * cell
      << "\" viewBox=\"0 0 " << n * cell << " " << m * cell
      << "\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      int v = gray_level(distances.at(i, j), lo, hi);
      out << "<rect x=\"" << i * cell << "\" y=\"" << j * cell
          << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"rgb(" << v << "," << v << "," << v << ")\"/>\n";
    }
  }
  for (std::size_t i = 0; i < path.size() && i < n; ++i) {
    out << "<rect x=\"" << i * cell << "\" y=\"" << path[i] * cell
        << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"#ffd60a\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace malign::render
