#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cycdr/sets.hpp"

namespace cycdr::cli {

/// A named 2D feasibility scenario with a fixed default starting point, so
/// runs are comparable across machines.
struct Demo {
  std::string_view name;
  std::string_view description;
  std::vector<SetSpec> sets;
  Vector default_x0;
};

const std::vector<Demo>& demo_catalogue();
std::optional<Demo> find_demo(std::string_view name);
std::string demo_names();

}  // namespace cycdr::cli
