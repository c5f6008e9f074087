#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mwg/ifs.hpp"

namespace mwg {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  bool is_background(int x, int y) const;
};

/// Inclusive pixel rectangle.
struct PixelRect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool contains(int x, int y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
};

/// One panel per vertex, left to right in vertex order. Each panel shows its
/// box T_v scaled to fit; one-dimensional boxes become a horizontal band.
class Layout {
 public:
  Layout(const MWSystem& sys, int width, int height);

  /// Pixel rectangle the box T_v occupies.
  PixelRect box_rect(VertexId v) const { return rects_.at(v.index); }
  /// Pixel containing p, clamped into box_rect(v).
  std::pair<int, int> to_pixel(VertexId v, Point p) const;

 private:
  struct Panel {
    Point origin;
    double scale_x = 1.0;
    double scale_y = 1.0;
  };
  std::vector<PixelRect> rects_;
  std::vector<Panel> panels_;
};

/// White background, black points (1D points are drawn as short ticks).
Image render_image(const MWSystem& sys, const AttractorApprox& k, int width, int height);

/// Binary P6.
void write_ppm(std::ostream& os, const Image& image);

std::string render_svg(const MWSystem& sys, const AttractorApprox& k, int width, int height);

/// One line per point: `vertex x` in dimension 1, `vertex x y` in dimension 2.
void write_point_cloud(std::ostream& os, const MWSystem& sys, const AttractorApprox& k);

}  // namespace mwg
