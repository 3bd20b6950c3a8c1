#pragma once

#include <string>

#include "cycdr/operators.hpp"

namespace cycdr {

/// CSV with columns iter,substep,coord_0..coord_{n-1},step_norm.
/// Rows appear in chronological order: the substep rows of iteration k
/// (substep = 1..S, empty step_norm) followed by the outer row of iterate k
/// (empty substep; step_norm of the step into that iterate, empty for x_0).
std::string trace_to_csv(const IterationTrace& trace);

/// JSON mirror of the CSV rows:
///   {"rows": [{"iter": k, "substep": s|null, "coords": [...],
///              "step_norm": v|null}, ...]}
std::string trace_to_json(const IterationTrace& trace);

}  // namespace cycdr
