#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycdr/bench.hpp"
#include "cycdr/instances.hpp"
#include "cycdr/operators.hpp"
#include "cycdr/product.hpp"
#include "cycdr/trace_io.hpp"
#include "demos.hpp"
#include "svg_writer.hpp"

namespace {

using namespace cycdr;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  if (!out) throw std::runtime_error("cannot write " + path);
}

Vector parse_csv_vector(const std::string& text) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::runtime_error("bad --x0 entry \"" + item + "\"");
    }
  }
  if (out.empty()) throw std::runtime_error("--x0 needs at least one coordinate");
  require_finite(out, "--x0");
  return out;
}

std::uint64_t env_seed() {
  const char* env = std::getenv("CYCDR_SEED");
  if (!env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw std::runtime_error("CYCDR_SEED is not an integer");
  }
}

Method require_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) {
    throw std::runtime_error("unknown method \"" + name +
                             "\" (expected cyclic|averaged|product-dr|map)");
  }
  return *m;
}

struct Run {
  IterationTrace trace;
  Vector candidate_point;  // single-space point the error is measured at
  double error = 0.0;
};

Run execute(Method method, const ProblemInstance& inst, const Vector& x0, double eps,
            int max_iter, RandomStream& rng, bool record) {
  Run run;
  const int N = static_cast<int>(inst.sets.size());
  if (method == Method::ProductDR) {
    auto [c, d] = lift(inst.sets);
    const auto op = OperatorSpec::two_set_dr(std::move(c), std::move(d));
    run.trace = iterate(op, embed_diagonal(x0, N), eps, max_iter, rng, record);
    run.candidate_point = candidate(run.trace.iterates.back(), inst.dim);
  } else {
    OperatorSpec op = method == Method::CyclicDR      ? OperatorSpec::cyclic_dr(inst.sets)
                      : method == Method::AveragedDR ? OperatorSpec::averaged_dr(inst.sets)
                                                     : OperatorSpec::alternating_projections(inst.sets);
    run.trace = iterate(op, x0, eps, max_iter, rng, record);
    run.candidate_point = run.trace.iterates.back();
  }
  run.error = error_metric(inst.sets, run.candidate_point, rng);
  return run;
}

struct SolveOpts {
  std::string instance_path;
  std::string demo_name;
  std::string method;
  std::string x0_csv;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double eps = 1e-6;
  int max_iter = 1000;
  std::string trace_path;
  std::string out_path;
};

int cmd_solve(const SolveOpts& opt) {
  if (opt.instance_path.empty() == opt.demo_name.empty()) {
    throw std::runtime_error("pass exactly one of --instance or --demo");
  }

  ProblemInstance inst;
  std::optional<cli::Demo> demo;
  if (!opt.demo_name.empty()) {
    demo = cli::find_demo(opt.demo_name);
    if (!demo) {
      throw std::runtime_error("unknown demo \"" + opt.demo_name + "\" (" + cli::demo_names() + ")");
    }
    inst.dim = 2;
    inst.sets = demo->sets;
  } else {
    inst = read_instance(read_file(opt.instance_path));
  }

  const Method method = require_method(opt.method);
  const std::uint64_t seed = opt.seed_given ? opt.seed : env_seed();

  Vector x0;
  if (!opt.x0_csv.empty()) {
    x0 = parse_csv_vector(opt.x0_csv);
    require_dim(x0, static_cast<std::size_t>(inst.dim), "--x0");
  } else if (!opt.seed_given && demo) {
    x0 = demo->default_x0;
  } else {
    x0 = gen_x0(inst.dim, seed);
  }

  RandomStream rng = RandomStream(seed).substream("solve", 0);
  const Run run = execute(method, inst, x0, opt.eps, opt.max_iter, rng, !opt.trace_path.empty());

  const bool converged = run.trace.termination == Termination::Converged;
  std::cout << "status=" << (converged ? "converged" : "iteration-cap")
            << " iters=" << run.trace.iterations << " error=" << fmt(run.error) << "\n";

  if (!opt.trace_path.empty()) {
    const bool json = opt.trace_path.size() > 5 &&
                      opt.trace_path.compare(opt.trace_path.size() - 5, 5, ".json") == 0;
    write_file(opt.trace_path, json ? trace_to_json(run.trace) : trace_to_csv(run.trace));
  }
  if (!opt.out_path.empty()) {
    nlohmann::json j;
    j["status"] = converged ? "converged" : "iteration-cap";
    j["iterations"] = run.trace.iterations;
    j["error"] = run.error;
    j["x"] = run.candidate_point;
    write_file(opt.out_path, j.dump());
  }
  return converged ? 0 : 2;
}

struct BenchOpts {
  std::string problem;
  std::vector<int> ns;
  std::vector<int> Ns;
  std::vector<double> eps;
  std::vector<std::string> methods;
  int trials = 10;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int cap = 1000;
  std::string format = "csv";
  std::string out_path;
};

int cmd_bench(const BenchOpts& opt) {
  const ProblemKind kind = opt.problem == "balls" ? ProblemKind::Balls : ProblemKind::Spheres;
  std::vector<Method> methods;
  for (const auto& name : opt.methods) methods.push_back(require_method(name));

  std::vector<std::pair<int, int>> sizes;
  for (int n : opt.ns) {
    for (int N : opt.Ns) sizes.emplace_back(n, N);
  }

  const std::uint64_t seed = opt.seed_given ? opt.seed : env_seed();
  const BenchmarkReport report = run_suite(kind, sizes, opt.eps, methods, opt.trials, seed, opt.cap);
  const std::string table =
      emit_table(report, opt.format == "json" ? TableFormat::JSON : TableFormat::CSV);

  if (opt.out_path.empty()) {
    std::cout << table;
  } else {
    write_file(opt.out_path, table);
    for (const auto& [key, s] : report.rows) {
      std::cout << "n=" << key.n << " N=" << key.N << " method=" << method_name(key.method)
                << " eps=" << fmt(key.eps) << ": iters " << fmt(s.iter_mean) << " (" << s.iter_max
                << ") err " << fmt(s.err_mean) << " (" << fmt(s.err_max) << ")\n";
    }
  }
  return 0;
}

struct TraceOpts {
  std::string demo_name;
  std::string method = "cyclic";
  std::string x0_csv;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double eps = 1e-6;
  int max_iter = 1000;
  std::string svg_path;
  std::string csv_path;
};

int cmd_trace(const TraceOpts& opt) {
  const auto demo = cli::find_demo(opt.demo_name);
  if (!demo) {
    throw std::runtime_error("unknown demo \"" + opt.demo_name + "\" (" + cli::demo_names() + ")");
  }
  if (opt.svg_path.empty() && opt.csv_path.empty()) {
    throw std::runtime_error("pass --svg and/or --csv");
  }
  const Method method = require_method(opt.method);
  if (method == Method::AveragedDR) {
    throw std::runtime_error("trace supports cyclic|map|product-dr");
  }

  ProblemInstance inst;
  inst.dim = 2;
  inst.sets = demo->sets;

  const std::uint64_t seed = opt.seed_given ? opt.seed : env_seed();
  Vector x0 = opt.x0_csv.empty() ? demo->default_x0 : parse_csv_vector(opt.x0_csv);
  require_dim(x0, 2, "--x0");

  RandomStream rng = RandomStream(seed).substream("trace", 0);
  const Run run = execute(method, inst, x0, opt.eps, opt.max_iter, rng, /*record=*/true);

  if (!opt.csv_path.empty()) write_file(opt.csv_path, trace_to_csv(run.trace));
  if (!opt.svg_path.empty()) {
    cli::TraceScene scene;
    scene.sets = demo->sets;
    const bool lifted = method == Method::ProductDR;
    for (const auto& p : run.trace.iterates) {
      scene.polyline.push_back(lifted ? candidate(p, 2) : p);
    }
    for (const auto& p : run.trace.substeps) {
      scene.markers.push_back(lifted ? candidate(p, 2) : p);
    }
    write_file(opt.svg_path, cli::render_svg(scene));
  }
  std::cout << "status="
            << (run.trace.termination == Termination::Converged ? "converged" : "iteration-cap")
            << " iters=" << run.trace.iterations << " error=" << fmt(run.error) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cycdr: N-set feasibility via cyclic / averaged Douglas-Rachford iterations,\n"
      "the classical product-space Douglas-Rachford method, and alternating projections"};
  app.require_subcommand(1);

  SolveOpts solve;
  CLI::App* s = app.add_subcommand("solve", "solve one instance or demo");
  s->add_option("--instance", solve.instance_path, "instance JSON file");
  s->add_option("--demo", solve.demo_name, "built-in 2D demo (" + cli::demo_names() + ")");
  s->add_option("--method", solve.method, "cyclic|averaged|product-dr|map")->required();
  s->add_option("--x0", solve.x0_csv, "starting point as comma-separated values");
  auto* ss = s->add_option("--seed", solve.seed, "seed for x0 and tie-breaks (default $CYCDR_SEED or 0)");
  s->add_option("--eps", solve.eps, "stopping tolerance on the step norm")->check(CLI::PositiveNumber);
  s->add_option("--max-iter", solve.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  s->add_option("--trace", solve.trace_path, "write the iteration trace (.json for JSON, else CSV)");
  s->add_option("--out", solve.out_path, "write a JSON result summary");

  BenchOpts bench;
  CLI::App* b = app.add_subcommand("bench", "run a benchmark suite over generated instances");
  b->add_option("--problem", bench.problem, "balls|spheres")
      ->required()
      ->check(CLI::IsMember({"balls", "spheres"}));
  b->add_option("--n", bench.ns, "ambient dimensions")->required()->delimiter(',');
  b->add_option("--N", bench.Ns, "set counts")->required()->delimiter(',');
  b->add_option("--eps", bench.eps, "stopping tolerances")->required()->delimiter(',');
  b->add_option("--methods", bench.methods, "methods to compare")->required()->delimiter(',');
  b->add_option("--trials", bench.trials, "trials per cell")->check(CLI::PositiveNumber);
  auto* bs = b->add_option("--seed", bench.seed, "base seed (default $CYCDR_SEED or 0)");
  b->add_option("--cap", bench.cap, "iteration cap")->check(CLI::PositiveNumber);
  b->add_option("--format", bench.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  b->add_option("--out", bench.out_path, "output file (default: stdout)");

  TraceOpts trace;
  CLI::App* t = app.add_subcommand("trace", "emit a 2D trajectory trace for a demo");
  t->add_option("--demo", trace.demo_name, cli::demo_names())->required();
  t->add_option("--method", trace.method, "cyclic|map|product-dr");
  t->add_option("--x0", trace.x0_csv, "starting point as comma-separated values");
  auto* ts = t->add_option("--seed", trace.seed, "seed for tie-breaks (default $CYCDR_SEED or 0)");
  t->add_option("--eps", trace.eps, "stopping tolerance")->check(CLI::PositiveNumber);
  t->add_option("--max-iter", trace.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  t->add_option("--svg", trace.svg_path, "write an SVG plot");
  t->add_option("--csv", trace.csv_path, "write the trace as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 1;
  }

  solve.seed_given = ss->count() > 0;
  bench.seed_given = bs->count() > 0;
  trace.seed_given = ts->count() > 0;

  try {
    if (s->parsed()) return cmd_solve(solve);
    if (b->parsed()) return cmd_bench(bench);
    if (t->parsed()) return cmd_trace(trace);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
