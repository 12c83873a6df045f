#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "pisot/io.hpp"

namespace pisot {

namespace {

constexpr const char* kColors[3] = {"red", "green", "blue"};

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  bool empty() const { return min_x > max_x; }
};

std::string header(Box box) {
  if (box.empty()) box = {0.0, 0.0, 1.0, 1.0};
  const double w = box.max_x - box.min_x;
  const double h = box.max_y - box.min_y;
  const double margin = 0.05 * std::max({w, h, 1e-9});
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << num(box.min_x - margin) << ' ' << num(box.min_y - margin) << ' '
     << num(w + 2 * margin) << ' ' << num(h + 2 * margin) << "\" width=\"600\" height=\""
     << num(600.0 * (h + 2 * margin) / (w + 2 * margin)) << "\">\n";
  return os.str();
}

}  // namespace

std::string render_window_svg(const WindowApprox& wa) {
  // SVG's y axis points down; flip so the picture has the usual orientation.
  Box box;
  for (const auto& pl : wa.boundaries)
    for (Point2 p : pl) box.add(p.x, -p.y);
  const double stroke = box.empty() ? 0.001 : 0.002 * std::max(box.max_x - box.min_x, box.max_y - box.min_y);

  std::ostringstream os;
  os << header(box);
  os << "<g id=\"windows\" stroke=\"black\" stroke-width=\"" << num(stroke)
     << "\" fill-opacity=\"0.5\">\n";
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& pl = wa.boundaries[i];
    if (pl.empty()) continue;
    os << "<path id=\"window-" << generator_name(static_cast<int>(i)) << "\" fill=\"" << kColors[i]
       << "\" d=\"M";
    for (std::size_t k = 0; k < pl.size(); ++k) {
      os << (k ? " L" : "") << ' ' << num(pl[k].x) << ' ' << num(-pl[k].y);
    }
    os << " Z\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_tiling_svg(const TilingPatch& patch) {
  double max_len = 0.0;
  for (const Tile& t : patch.segments) max_len = std::max(max_len, t.length);
  const double height = 0.5 * max_len;
  Box box;
  if (!patch.segments.empty()) {
    box.add(0.0, 0.0);
    box.add(patch.total_length(), height);
  }
  std::ostringstream os;
  os << header(box);
  os << "<g id=\"tiles\" stroke=\"black\" stroke-width=\"" << num(0.02 * max_len)
     << "\" fill-opacity=\"0.5\">\n";
  for (const Tile& t : patch.segments) {
    os << "<rect x=\"" << num(t.left) << "\" y=\"0.000000\" width=\"" << num(t.length)
       << "\" height=\"" << num(height) << "\" fill=\"" << kColors[t.letter] << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_polylines_text(const WindowApprox& wa) {
  std::ostringstream os;
  char buf[80];
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << '\n';
    for (Point2 p : wa.boundaries[i]) {
      std::snprintf(buf, sizeof buf, "%.12f %.12f\n", p.x, p.y);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace pisot
