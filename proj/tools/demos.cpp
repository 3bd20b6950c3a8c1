#include "demos.hpp"

#include <string>

namespace cycdr::cli {

const std::vector<Demo>& demo_catalogue() {
  static const std::vector<Demo> demos = [] {
    std::vector<Demo> d;
    d.push_back({"two-lines",
                 "two lines through the origin with unit normals (1,0) and (0.6,0.8)",
                 {SetSpec::hyperplane({1.0, 0.0}, 0.0), SetSpec::hyperplane({0.6, 0.8}, 0.0)},
                 {1.0, 1.0}});
    d.push_back({"circle-line",
                 "unit circle and the line y = 0.5",
                 {SetSpec::sphere({0.0, 0.0}, 1.0), SetSpec::hyperplane({0.0, 1.0}, 0.5)},
                 {3.0, -1.0}});
    d.push_back({"two-circles",
                 "unit circles centered at (-0.5,0) and (0.5,0)",
                 {SetSpec::sphere({-0.5, 0.0}, 1.0), SetSpec::sphere({0.5, 0.0}, 1.0)},
                 {3.0, 2.0}});
    d.push_back({"ball-point",
                 "unit ball and the separated point (2,0)",
                 {SetSpec::ball({0.0, 0.0}, 1.0), SetSpec::singleton({2.0, 0.0})},
                 {7.0, -3.0}});
    d.push_back({"ball-point-inside",
                 "unit ball and the interior point (0.5,0.25)",
                 {SetSpec::ball({0.0, 0.0}, 1.0), SetSpec::singleton({0.5, 0.25})},
                 {7.0, -3.0}});
    d.push_back({"ball-line-disjoint",
                 "unit ball and the non-intersecting line y = 2",
                 {SetSpec::ball({0.0, 0.0}, 1.0), SetSpec::hyperplane({0.0, 1.0}, 2.0)},
                 {3.0, -1.0}});
    return d;
  }();
  return demos;
}

std::optional<Demo> find_demo(std::string_view name) {
  for (const Demo& d : demo_catalogue()) {
    if (d.name == name) return d;
  }
  return std::nullopt;
}

std::string demo_names() {
  std::string out;
  for (const Demo& d : demo_catalogue()) {
    if (!out.empty()) out += "|";
    out += d.name;
  }
  return out;
}

}  // namespace cycdr::cli
