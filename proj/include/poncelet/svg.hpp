#pragma once

#include <string>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

// A static SVG scene in world coordinates (y up).
class SvgScene {
 public:
  SvgScene(double width_px = 640.0) : width_(width_px) {}

  void polyline(const std::vector<Point>& pts, const std::string& stroke, double width = 1.0, bool closed = false,
                const std::string& dash = "");
  void circle(const Circle& c, const std::string& stroke, double width = 1.0, const std::string& dash = "");
  void dot(Point p, const std::string& fill, double radius_px = 3.0);
  void segment(Point p, Point q, const std::string& stroke, double width = 1.0);
  void label(Point p, const std::string& text, const std::string& fill = "#000");

  std::string render() const;

 private:
  struct Item {
    enum Kind { poly, circ, pt, text } kind;
    std::vector<Point> pts;
    double r = 0.0;
    std::string color, dash, text_value;
    double width = 1.0;
    bool closed = false;
  };
  void grow(Point p);

  double width_;
  std::vector<Item> items_;
  double xmin_ = 1e300, xmax_ = -1e300, ymin_ = 1e300, ymax_ = -1e300;
};

}  // namespace poncelet
