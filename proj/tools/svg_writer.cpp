#include "svg_writer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <variant>

namespace cycdr::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct Frame {
  double xmin, xmax, ymin, ymax;
  // SVG y grows downward; world points are mirrored about the box midline so
  // the viewBox coordinates coincide with world x/y ranges.
  double flip;

  double sx(double x) const { return x; }
  double sy(double y) const { return flip - y; }
  double diag() const { return std::hypot(xmax - xmin, ymax - ymin); }
};

void append_point_list(std::string& out, const Frame& f, const std::vector<Vector>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(f.sx(pts[i][0]));
    out += ',';
    out += fmt(f.sy(pts[i][1]));
  }
}

void draw_line_through(std::string& out, const Frame& f, const Vector& point, const Vector& dir,
                       const char* color, double width) {
  const double t = 2.0 * f.diag() + 1.0;
  const double x0 = point[0] - t * dir[0];
  const double y0 = point[1] - t * dir[1];
  const double x1 = point[0] + t * dir[0];
  const double y1 = point[1] + t * dir[1];
  out += "<line x1=\"" + fmt(f.sx(x0)) + "\" y1=\"" + fmt(f.sy(y0)) + "\" x2=\"" +
         fmt(f.sx(x1)) + "\" y2=\"" + fmt(f.sy(y1)) + "\" stroke=\"" + color +
         "\" stroke-width=\"" + fmt(width) + "\" fill=\"none\"/>\n";
}

void draw_set(std::string& out, const Frame& f, const SetSpec& set, const char* color,
              double width, double dot_r) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          out += "<circle cx=\"" + fmt(f.sx(s.center[0])) + "\" cy=\"" + fmt(f.sy(s.center[1])) +
                 "\" r=\"" + fmt(s.radius) + "\" stroke=\"" + color + "\" stroke-width=\"" +
                 fmt(width) + "\" fill=\"" + color + "\" fill-opacity=\"0.08\"/>\n";
        } else if constexpr (std::is_same_v<T, Sphere>) {
          out += "<circle cx=\"" + fmt(f.sx(s.center[0])) + "\" cy=\"" + fmt(f.sy(s.center[1])) +
                 "\" r=\"" + fmt(s.radius) + "\" stroke=\"" + color + "\" stroke-width=\"" +
                 fmt(width) + "\" fill=\"none\"/>\n";
        } else if constexpr (std::is_same_v<T, Hyperplane> || std::is_same_v<T, HalfSpace>) {
          const Vector p{s.normal[0] * s.offset, s.normal[1] * s.offset};
          const Vector dir{-s.normal[1], s.normal[0]};
          draw_line_through(out, f, p, dir, color, width);
        } else if constexpr (std::is_same_v<T, AffineSubspace>) {
          if (s.basis.empty()) {
            out += "<circle cx=\"" + fmt(f.sx(s.anchor[0])) + "\" cy=\"" + fmt(f.sy(s.anchor[1])) +
                   "\" r=\"" + fmt(dot_r) + "\" fill=\"" + color + "\"/>\n";
          } else if (s.basis.size() == 1) {
            draw_line_through(out, f, s.anchor, s.basis.front(), color, width);
          }
          // A 2D affine set with a full basis is the whole plane; nothing to draw.
        } else if constexpr (std::is_same_v<T, Box>) {
          out += "<rect x=\"" + fmt(f.sx(s.lower[0])) + "\" y=\"" + fmt(f.sy(s.upper[1])) +
                 "\" width=\"" + fmt(s.upper[0] - s.lower[0]) + "\" height=\"" +
                 fmt(s.upper[1] - s.lower[1]) + "\" stroke=\"" + color + "\" stroke-width=\"" +
                 fmt(width) + "\" fill=\"" + color + "\" fill-opacity=\"0.08\"/>\n";
        } else if constexpr (std::is_same_v<T, Singleton>) {
          out += "<circle cx=\"" + fmt(f.sx(s.point[0])) + "\" cy=\"" + fmt(f.sy(s.point[1])) +
                 "\" r=\"" + fmt(dot_r) + "\" fill=\"" + color + "\"/>\n";
        }
        // Product/Diagonal have no planar drawing.
      },
      set.variant());
}

}  // namespace

std::string render_svg(const TraceScene& scene) {
  if (scene.polyline.empty()) throw std::invalid_argument("render_svg: empty trajectory");
  for (const auto& s : scene.sets) {
    if (s.dim() != 2) throw std::invalid_argument("render_svg: sets must be 2-dimensional");
  }

  double xmin = scene.polyline.front()[0], xmax = xmin;
  double ymin = scene.polyline.front()[1], ymax = ymin;
  auto grow = [&](const Vector& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  };
  for (const auto& p : scene.polyline) grow(p);
  for (const auto& p : scene.markers) grow(p);

  // 10% margin per side; a floor keeps degenerate traces visible.
  const double mx = std::max(0.1 * (xmax - xmin), 0.5);
  const double my = std::max(0.1 * (ymax - ymin), 0.5);
  xmin -= mx;
  xmax += mx;
  ymin -= my;
  ymax += my;

  const Frame frame{xmin, xmax, ymin, ymax, ymin + ymax};
  const double scale = std::max(xmax - xmin, ymax - ymin);
  const double set_width = 0.004 * scale;
  const double path_width = 0.003 * scale;
  const double marker_r = 0.008 * scale;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(xmin) +
         " " + fmt(ymin) + " " + fmt(xmax - xmin) + " " + fmt(ymax - ymin) + "\">\n";

  static const char* kSetColors[] = {"#1f77b4", "#d62728", "#e0a800", "#7f3fbf", "#2ca02c"};
  for (std::size_t i = 0; i < scene.sets.size(); ++i) {
    draw_set(out, frame, scene.sets[i], kSetColors[i % 5], set_width, 1.5 * marker_r);
  }

  if (scene.polyline.size() > 1) {
    out += "<polyline points=\"";
    append_point_list(out, frame, scene.polyline);
    out += "\" stroke=\"#555555\" stroke-width=\"" + fmt(path_width) + "\" fill=\"none\"/>\n";
  }
  for (const auto& m : scene.markers) {
    out += "<circle cx=\"" + fmt(frame.sx(m[0])) + "\" cy=\"" + fmt(frame.sy(m[1])) + "\" r=\"" +
           fmt(marker_r) + "\" fill=\"#2ca02c\"/>\n";
  }
  // Start point marker.
  out += "<circle cx=\"" + fmt(frame.sx(scene.polyline.front()[0])) + "\" cy=\"" +
         fmt(frame.sy(scene.polyline.front()[1])) + "\" r=\"" + fmt(marker_r) +
         "\" fill=\"#555555\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace cycdr::cli
