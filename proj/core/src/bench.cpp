#include "cycdr/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "cycdr/product.hpp"

#include <json.hpp>

namespace cycdr {

namespace {

using nlohmann::json;

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::CyclicDR:
      return "cyclic";
    case Method::AveragedDR:
      return "averaged";
    case Method::ProductDR:
      return "product-dr";
    case Method::MAP:
      return "map";
  }
  return "cyclic";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "cyclic") return Method::CyclicDR;
  if (name == "averaged") return Method::AveragedDR;
  if (name == "product-dr") return Method::ProductDR;
  if (name == "map") return Method::MAP;
  return std::nullopt;
}

bool BenchmarkReport::same_results(const BenchmarkReport& other) const {
  if (kind != other.kind || trials != other.trials || base_seed != other.base_seed ||
      cap != other.cap || seeds != other.seeds || rows.size() != other.rows.size()) {
    return false;
  }
  auto it = other.rows.begin();
  for (const auto& [key, stats] : rows) {
    const auto& [okey, ostats] = *it++;
    if (key != okey || stats.iter_mean != ostats.iter_mean || stats.iter_max != ostats.iter_max ||
        stats.err_mean != ostats.err_mean || stats.err_max != ostats.err_max ||
        stats.trials != ostats.trials) {
      return false;
    }
  }
  return true;
}

TrialRecord run_trial(Method method, const ProblemInstance& instance, const Vector& x0, double eps,
                      int cap, RandomStream& rng) {
  require_dim(x0, static_cast<std::size_t>(instance.dim), "run_trial x0");
  if (instance.sets.empty()) throw std::invalid_argument("run_trial: instance has no sets");

  TrialRecord rec;
  rec.method = method;
  rec.n = instance.dim;
  rec.N = static_cast<int>(instance.sets.size());
  rec.eps = eps;
  rec.seed = instance.seed;

  IterationTrace trace;
  Vector final_candidate;
  if (method == Method::ProductDR) {
    auto [c, d] = lift(instance.sets);
    const OperatorSpec op = OperatorSpec::two_set_dr(std::move(c), std::move(d));
    trace = iterate(op, embed_diagonal(x0, rec.N), eps, cap, rng);
    final_candidate = candidate(trace.iterates.back(), instance.dim);
  } else {
    OperatorSpec op = [&] {
      switch (method) {
        case Method::CyclicDR:
          return OperatorSpec::cyclic_dr(instance.sets);
        case Method::AveragedDR:
          return OperatorSpec::averaged_dr(instance.sets);
        case Method::MAP:
          return OperatorSpec::alternating_projections(instance.sets);
        default:
          throw std::logic_error("run_trial: unexpected method");
      }
    }();
    trace = iterate(op, x0, eps, cap, rng);
    final_candidate = trace.iterates.back();
  }

  rec.iterations = trace.iterations;
  rec.elapsed_s = trace.elapsed_s;
  rec.termination = trace.termination;
  rec.error = error_metric(instance.sets, final_candidate, rng);
  return rec;
}

BenchmarkReport run_suite(ProblemKind kind, std::span<const std::pair<int, int>> sizes,
                          std::span<const double> eps_list, std::span<const Method> methods,
                          int trials, std::uint64_t base_seed, int cap) {
  if (trials < 1) throw std::invalid_argument("run_suite: trials must be at least 1");
  if (kind == ProblemKind::Custom) {
    throw std::invalid_argument("run_suite: generated suites need kind balls or spheres");
  }
  if (sizes.empty() || eps_list.empty() || methods.empty()) {
    throw std::invalid_argument("run_suite: sizes, eps values and methods must be non-empty");
  }

  BenchmarkReport report;
  report.kind = kind;
  report.trials = trials;
  report.base_seed = base_seed;
  report.cap = cap;
  for (int k = 0; k < trials; ++k) report.seeds.push_back(base_seed + static_cast<std::uint64_t>(k));
  report.notes =
      "trial k uses seed base_seed+k; the (instance, x0) pair of a trial index is shared "
      "across all methods and eps values for paired comparison";

  struct Accum {
    long long iter_sum = 0;
    int iter_max = 0;
    double time_sum = 0.0;
    double time_max = 0.0;
    double err_sum = 0.0;
    double err_max = 0.0;
    int count = 0;
  };
  std::map<CellKey, Accum> cells;

  for (const auto& [n, N] : sizes) {
    for (const double eps : eps_list) {
      for (int k = 0; k < trials; ++k) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(k);
        const ProblemInstance instance =
            kind == ProblemKind::Balls ? gen_balls(n, N, seed) : gen_spheres(n, N, seed);
        const Vector x0 = gen_x0(n, seed);
        for (const Method method : methods) {
          RandomStream rng = RandomStream(seed).substream(method_name(method), 0);
          const TrialRecord rec = run_trial(method, instance, x0, eps, cap, rng);
          std::fprintf(stderr, "cell=%d,%d,%s,%s trial=%d iters=%d\n", n, N,
                       std::string(method_name(method)).c_str(), format_double(eps).c_str(), k,
                       rec.iterations);
          Accum& acc = cells[CellKey{n, N, method, eps}];
          acc.iter_sum += rec.iterations;
          acc.iter_max = std::max(acc.iter_max, rec.iterations);
          acc.time_sum += rec.elapsed_s;
          acc.time_max = std::max(acc.time_max, rec.elapsed_s);
          acc.err_sum += rec.error;
          acc.err_max = std::max(acc.err_max, rec.error);
          acc.count += 1;
        }
      }
    }
  }

  for (const auto& [key, acc] : cells) {
    CellStats stats;
    stats.iter_mean = static_cast<double>(acc.iter_sum) / acc.count;
    stats.iter_max = acc.iter_max;
    stats.time_mean = acc.time_sum / acc.count;
    stats.time_max = acc.time_max;
    stats.err_mean = acc.err_sum / acc.count;
    stats.err_max = acc.err_max;
    stats.trials = acc.count;
    report.rows.emplace(key, stats);
  }
  return report;
}

std::string emit_table(const BenchmarkReport& report, TableFormat format) {
  if (report.rows.empty()) throw std::invalid_argument("emit_table: empty report");

  if (format == TableFormat::CSV) {
    std::string out =
        "n,N,method,eps,iter_mean,iter_max,time_mean,time_max,err_mean,err_max,trials\n";
    for (const auto& [key, s] : report.rows) {
      out += std::to_string(key.n) + ',' + std::to_string(key.N) + ',';
      out += std::string(method_name(key.method)) + ',' + format_double(key.eps) + ',';
      out += format_double(s.iter_mean) + ',' + std::to_string(s.iter_max) + ',';
      out += format_double(s.time_mean) + ',' + format_double(s.time_max) + ',';
      out += format_double(s.err_mean) + ',' + format_double(s.err_max) + ',';
      out += std::to_string(s.trials) + '\n';
    }
    return out;
  }

  json j;
  j["kind"] = std::string(kind_name(report.kind));
  j["trials"] = report.trials;
  j["base_seed"] = report.base_seed;
  j["cap"] = report.cap;
  j["seeds"] = report.seeds;
  j["notes"] = report.notes;
  json rows = json::array();
  for (const auto& [key, s] : report.rows) {
    rows.push_back({{"n", key.n},
                    {"N", key.N},
                    {"method", std::string(method_name(key.method))},
                    {"eps", key.eps},
                    {"iter_mean", s.iter_mean},
                    {"iter_max", s.iter_max},
                    {"time_mean", s.time_mean},
                    {"time_max", s.time_max},
                    {"err_mean", s.err_mean},
                    {"err_max", s.err_max},
                    {"trials", s.trials}});
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

BenchmarkReport read_table_json(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report: malformed JSON: ") + e.what());
  }
  BenchmarkReport report;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "balls") {
    report.kind = ProblemKind::Balls;
  } else if (kind == "spheres") {
    report.kind = ProblemKind::Spheres;
  } else {
    report.kind = ProblemKind::Custom;
  }
  report.trials = j.at("trials").get<int>();
  report.base_seed = j.at("base_seed").get<std::uint64_t>();
  report.cap = j.at("cap").get<int>();
  report.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  report.notes = j.at("notes").get<std::string>();
  for (const json& row : j.at("rows")) {
    const auto method = parse_method(row.at("method").get<std::string>());
    if (!method) throw std::invalid_argument("report: unknown method in row");
    CellKey key{row.at("n").get<int>(), row.at("N").get<int>(), *method,
                row.at("eps").get<double>()};
    CellStats s;
    s.iter_mean = row.at("iter_mean").get<double>();
    s.iter_max = row.at("iter_max").get<int>();
    s.time_mean = row.at("time_mean").get<double>();
    s.time_max = row.at("time_max").get<double>();
    s.err_mean = row.at("err_mean").get<double>();
    s.err_max = row.at("err_max").get<double>();
    s.trials = row.at("trials").get<int>();
    report.rows.emplace(key, s);
  }
  return report;
}

}  // namespace cycdr
