#pragma once

#include <string>
#include <vector>

#include "cycdr/sets.hpp"

namespace cycdr::cli {

/// Scene for a 2D trajectory plot: the constraint sets, the outer iterate
/// polyline, and one marker per recorded sub-step.
struct TraceScene {
  std::vector<SetSpec> sets;
  std::vector<Vector> polyline;
  std::vector<Vector> markers;
};

/// SVG 1.1 document. The viewBox covers the extent of the recorded points
/// plus a 10% margin; constraint geometry may extend beyond it.
std::string render_svg(const TraceScene& scene);

}  // namespace cycdr::cli
