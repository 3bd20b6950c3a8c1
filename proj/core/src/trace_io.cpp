#include "cycdr/trace_io.hpp"

#include <charconv>

#include <json.hpp>

namespace cycdr {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string trace_to_csv(const IterationTrace& trace) {
  const std::size_t n = trace.iterates.empty() ? 0 : trace.iterates.front().size();
  const int K = trace.iterations;
  const std::size_t per_iter = (K > 0 && !trace.substeps.empty()) ? trace.substeps.size() / K : 0;

  std::string out = "iter,substep";
  for (std::size_t i = 0; i < n; ++i) out += ",coord_" + std::to_string(i);
  out += ",step_norm\n";

  auto emit_row = [&](int iter, int substep, const Vector& p, double step_norm, bool has_step) {
    out += std::to_string(iter);
    out += ',';
    if (substep >= 0) out += std::to_string(substep);
    for (double c : p) {
      out += ',';
      out += format_double(c);
    }
    out += ',';
    if (has_step) out += format_double(step_norm);
    out += '\n';
  };

  emit_row(0, -1, trace.iterates.front(), 0.0, false);
  for (int k = 1; k <= K; ++k) {
    for (std::size_t s = 0; s < per_iter; ++s) {
      emit_row(k, static_cast<int>(s + 1), trace.substeps[(k - 1) * per_iter + s], 0.0, false);
    }
    emit_row(k, -1, trace.iterates[k], trace.step_norms[k - 1], true);
  }
  return out;
}

std::string trace_to_json(const IterationTrace& trace) {
  using nlohmann::json;
  const int K = trace.iterations;
  const std::size_t per_iter = (K > 0 && !trace.substeps.empty()) ? trace.substeps.size() / K : 0;

  json rows = json::array();
  auto emit_row = [&](int iter, int substep, const Vector& p, double step_norm, bool has_step) {
    rows.push_back({{"iter", iter},
                    {"substep", substep >= 0 ? json(substep) : json(nullptr)},
                    {"coords", p},
                    {"step_norm", has_step ? json(step_norm) : json(nullptr)}});
  };

  emit_row(0, -1, trace.iterates.front(), 0.0, false);
  for (int k = 1; k <= K; ++k) {
    for (std::size_t s = 0; s < per_iter; ++s) {
      emit_row(k, static_cast<int>(s + 1), trace.substeps[(k - 1) * per_iter + s], 0.0, false);
    }
    emit_row(k, -1, trace.iterates[k], trace.step_norms[k - 1], true);
  }
  return json{{"rows", std::move(rows)}}.dump();
}

}  // namespace cycdr
