#include "nahodge/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace nahodge {

namespace {

constexpr double kWidth = 480, kHeight = 360, kMargin = 48;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double xmax, ymin, ymax;
  double sx(double x) const { return kMargin + x / xmax * (kWidth - 2 * kMargin); }
  double sy(double y) const { return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin); }
};

void draw(std::ostringstream& o, const Frame& f, const Polygon& p, const char* colour, const std::string& label,
          double label_y) {
  o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i <= p.length(); ++i) {
    if (i) o << ' ';
    o << fmt(f.sx(static_cast<double>(i))) << ',' << fmt(f.sy(p.y(i).get_d()));
  }
  o << "\"/>\n";
  for (const auto& [x, y] : p.vertices())
    o << "<circle cx=\"" << fmt(f.sx(static_cast<double>(x))) << "\" cy=\"" << fmt(f.sy(y.get_d()))
      << "\" r=\"3.5\" fill=\"" << colour << "\"><title>(" << x << ", " << to_string(y) << ")</title></circle>\n";
  o << "<text x=\"" << fmt(kWidth - kMargin) << "\" y=\"" << fmt(label_y) << "\" fill=\"" << colour
    << "\" font-size=\"12\" text-anchor=\"end\">" << escape(label) << "</text>\n";
}

}  // namespace

std::string render_polygon_svg(const Polygon& base, const std::string& base_label,
                               const std::optional<Polygon>& overlay, const std::string& overlay_label) {
  Frame f{static_cast<double>(std::max<size_t>(base.length(), 1)), 0, 0};
  auto extend = [&](const Polygon& p) {
    f.xmax = std::max(f.xmax, static_cast<double>(p.length()));
    for (const auto& y : p.partial_sums()) {
      f.ymin = std::min(f.ymin, y.get_d());
      f.ymax = std::max(f.ymax, y.get_d());
    }
  };
  extend(base);
  if (overlay) extend(*overlay);
  if (f.ymax - f.ymin < 1) f.ymax = f.ymin + 1;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  o << "<!-- " << kRenderVersion << " -->\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes through the origin with integer ticks on x.
  o << "<g stroke=\"#444\" stroke-width=\"1\">\n";
  o << "<line x1=\"" << fmt(f.sx(0)) << "\" y1=\"" << fmt(f.sy(0)) << "\" x2=\"" << fmt(f.sx(f.xmax)) << "\" y2=\""
    << fmt(f.sy(0)) << "\"/>\n";
  o << "<line x1=\"" << fmt(f.sx(0)) << "\" y1=\"" << fmt(f.sy(f.ymin)) << "\" x2=\"" << fmt(f.sx(0)) << "\" y2=\""
    << fmt(f.sy(f.ymax)) << "\"/>\n";
  for (size_t i = 1; i <= static_cast<size_t>(f.xmax); ++i)
    o << "<line x1=\"" << fmt(f.sx(static_cast<double>(i))) << "\" y1=\"" << fmt(f.sy(0) - 3) << "\" x2=\""
      << fmt(f.sx(static_cast<double>(i))) << "\" y2=\"" << fmt(f.sy(0) + 3) << "\"/>\n";
  o << "</g>\n";
  o << "<g font-size=\"11\" fill=\"#444\">\n";
  for (size_t i = 0; i <= static_cast<size_t>(f.xmax); ++i)
    o << "<text x=\"" << fmt(f.sx(static_cast<double>(i))) << "\" y=\"" << fmt(f.sy(0) + 16)
      << "\" text-anchor=\"middle\">" << i << "</text>\n";
  o << "<text x=\"" << fmt(f.sx(0) - 6) << "\" y=\"" << fmt(f.sy(f.ymax) + 4) << "\" text-anchor=\"end\">"
    << fmt(f.ymax) << "</text>\n";
  o << "<text x=\"" << fmt(f.sx(0) - 6) << "\" y=\"" << fmt(f.sy(f.ymin) + 4) << "\" text-anchor=\"end\">"
    << fmt(f.ymin) << "</text>\n";
  o << "</g>\n";
  draw(o, f, base, "#1f77b4", base_label, kMargin - 20);
  if (overlay) draw(o, f, *overlay, "#d62728", overlay_label, kMargin - 6);
  o << "</svg>\n";
  return o.str();
}

}  // namespace nahodge
