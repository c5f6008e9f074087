#include "mwg/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mwg {

namespace {
constexpr int kMargin = 8;
}

bool Image::is_background(int x, int y) const {
  const std::size_t i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
  return rgb[i] == 255 && rgb[i + 1] == 255 && rgb[i + 2] == 255;
}

Layout::Layout(const MWSystem& sys, int width, int height) {
  const int n = static_cast<int>(sys.graph->vertex_count());
  if (width < n * (2 * kMargin + 2) || height < 2 * kMargin + 2) {
    throw std::invalid_argument("render: image too small for the vertex panels");
  }
  const int panel_w = width / n;
  for (int i = 0; i < n; ++i) {
    const Box& box = sys.spaces[static_cast<std::size_t>(i)];
    const int left = i * panel_w + kMargin;
    const int avail_w = panel_w - 2 * kMargin - 1;
    const int avail_h = height - 2 * kMargin - 1;
    const double bw = box.max.x - box.min.x;
    const double bh = box.max.y - box.min.y;

    Panel panel;
    panel.origin = box.min;
    PixelRect rect;
    if (sys.dimension == 1 || bh == 0.0) {
      panel.scale_x = bw > 0.0 ? avail_w / bw : 0.0;
      panel.scale_y = 0.0;
      const int band = std::max(2, avail_h / 8);
      const int mid = kMargin + avail_h / 2;
      rect = {left, mid - band / 2, left + (bw > 0.0 ? avail_w : 0), mid + band / 2};
    } else {
      double s = std::min(bw > 0.0 ? avail_w / bw : 1e300, avail_h / bh);
      panel.scale_x = panel.scale_y = s;
      const int w = static_cast<int>(std::floor(bw * s));
      const int h = static_cast<int>(std::floor(bh * s));
      const int top = kMargin + (avail_h - h) / 2;
      rect = {left, top, left + w, top + h};
    }
    rects_.push_back(rect);
    panels_.push_back(panel);
  }
}

std::pair<int, int> Layout::to_pixel(VertexId v, Point p) const {
  const Panel& panel = panels_.at(v.index);
  const PixelRect& r = rects_.at(v.index);
  if (panel.scale_y == 0.0) {
    int x = r.x0 + static_cast<int>(std::lround((p.x - panel.origin.x) * panel.scale_x));
    return {std::clamp(x, r.x0, r.x1), (r.y0 + r.y1) / 2};
  }
  int x = r.x0 + static_cast<int>(std::lround((p.x - panel.origin.x) * panel.scale_x));
  // Image rows grow downward.
  int y = r.y1 - static_cast<int>(std::lround((p.y - panel.origin.y) * panel.scale_y));
  return {std::clamp(x, r.x0, r.x1), std::clamp(y, r.y0, r.y1)};
}

Image render_image(const MWSystem& sys, const AttractorApprox& k, int width, int height) {
  Layout layout(sys, width, height);
  Image image{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height * 3, 255)};
  auto plot = [&](int x, int y) {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    image.rgb[i] = image.rgb[i + 1] = image.rgb[i + 2] = 0;
  };
  for (VertexId v : sys.graph->vertices()) {
    const PixelRect rect = layout.box_rect(v);
    for (Point p : k.points.at(v.index)) {
      auto [x, y] = layout.to_pixel(v, p);
      if (sys.dimension == 1) {
        for (int yy = rect.y0; yy <= rect.y1; ++yy) plot(x, yy);
      } else {
        plot(x, y);
      }
    }
  }
  return image;
}

void write_ppm(std::ostream& os, const Image& image) {
  os << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(image.rgb.data()), static_cast<std::streamsize>(image.rgb.size()));
}

std::string render_svg(const MWSystem& sys, const AttractorApprox& k, int width, int height) {
  Layout layout(sys, width, height);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (VertexId v : sys.graph->vertices()) {
    const PixelRect rect = layout.box_rect(v);
    os << "<g id=\"" << sys.graph->name(v) << "\" fill=\"black\" stroke=\"black\">\n";
    for (Point p : k.points.at(v.index)) {
      auto [x, y] = layout.to_pixel(v, p);
      if (sys.dimension == 1) {
        os << "<line x1=\"" << x << "\" y1=\"" << rect.y0 << "\" x2=\"" << x << "\" y2=\"" << rect.y1 << "\"/>\n";
      } else {
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"1\" height=\"1\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_point_cloud(std::ostream& os, const MWSystem& sys, const AttractorApprox& k) {
  for (VertexId v : sys.graph->vertices()) {
    for (Point p : k.points.at(v.index)) {
      os << sys.graph->name(v) << ' ' << std::setprecision(17) << p.x;
      if (sys.dimension == 2) os << ' ' << p.y;
      os << '\n';
    }
  }
}

}  // namespace mwg
