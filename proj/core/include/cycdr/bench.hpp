#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycdr/instances.hpp"
#include "cycdr/operators.hpp"

namespace cycdr {

enum class Method { CyclicDR, AveragedDR, ProductDR, MAP };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// One (method, instance, x0, eps) run.
struct TrialRecord {
  Method method = Method::CyclicDR;
  int n = 0;
  int N = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  int iterations = 0;
  double elapsed_s = 0.0;
  double error = 0.0;
  Termination termination = Termination::IterationCap;
};

struct CellKey {
  int n;
  int N;
  Method method;
  double eps;

  auto operator<=>(const CellKey&) const = default;
};

/// Mean/max aggregates over the trials of one cell.
struct CellStats {
  double iter_mean = 0.0;
  int iter_max = 0;
  double time_mean = 0.0;
  double time_max = 0.0;
  double err_mean = 0.0;
  double err_max = 0.0;
  int trials = 0;

  bool operator==(const CellStats&) const = default;
};

struct BenchmarkReport {
  std::map<CellKey, CellStats> rows;
  ProblemKind kind = ProblemKind::Balls;
  int trials = 0;
  std::uint64_t base_seed = 0;
  int cap = 0;
  std::vector<std::uint64_t> seeds;  // derived per-trial seeds
  /// Protocol notes carried into the JSON output.
  std::string notes;

  /// Equality over non-timing content (rows compared without time fields).
  bool same_results(const BenchmarkReport& other) const;
};

/// Build the requested operator over the instance sets, iterate from x0
/// (diagonally embedded for ProductDR) and measure the solution error at the
/// extracted candidate (blockwise mean for ProductDR, the final iterate
/// otherwise). elapsed_s covers the iteration loop only.
TrialRecord run_trial(Method method, const ProblemInstance& instance, const Vector& x0, double eps,
                      int cap, RandomStream& rng);

/// Run `trials` independent (instance, x0) pairs per cell, with per-trial
/// seeds base_seed + k. The same (instance, x0) pair is shared across all
/// methods and eps values of a trial index, so comparisons are paired.
/// Progress lines of the form
///   cell=<n>,<N>,<method>,<eps> trial=<k> iters=<i>
/// go to standard error. Non-timing results are deterministic in the inputs.
BenchmarkReport run_suite(ProblemKind kind, std::span<const std::pair<int, int>> sizes,
                          std::span<const double> eps_list, std::span<const Method> methods,
                          int trials, std::uint64_t base_seed, int cap);

enum class TableFormat { CSV, JSON };

/// CSV header:
///   n,N,method,eps,iter_mean,iter_max,time_mean,time_max,err_mean,err_max,trials
/// JSON mirrors the same rows plus the report metadata. Numbers are emitted
/// at full (shortest round-trip) precision.
std::string emit_table(const BenchmarkReport& report, TableFormat format);

/// Parse emit_table's JSON output back into a report.
BenchmarkReport read_table_json(std::string_view bytes);

}  // namespace cycdr
