#include "cycdr/operators.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>

namespace cycdr {

namespace {

int common_dim(const std::vector<SetSpec>& sets, const char* what) {
  if (sets.empty()) throw std::invalid_argument(std::string(what) + ": needs at least one set");
  const int n = sets.front().dim();
  for (const SetSpec& s : sets) {
    if (s.dim() != n) {
      throw std::invalid_argument(std::string(what) + ": sets have mixed ambient dimensions");
    }
  }
  return n;
}

int cycle_dim(const std::vector<SetSpec>& sets, const char* what) {
  if (sets.size() < 2) throw std::invalid_argument(std::string(what) + ": needs at least 2 sets");
  return common_dim(sets, what);
}

}  // namespace

OperatorSpec OperatorSpec::projection(SetSpec set) {
  const int n = set.dim();
  return OperatorSpec(ProjectionOp{std::move(set)}, n);
}

OperatorSpec OperatorSpec::two_set_dr(SetSpec a, SetSpec b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("two_set_dr: dimension mismatch");
  const int n = a.dim();
  return OperatorSpec(TwoSetDROp{std::move(a), std::move(b)}, n);
}

OperatorSpec OperatorSpec::cyclic_dr(std::vector<SetSpec> sets) {
  const int n = cycle_dim(sets, "cyclic_dr");
  return OperatorSpec(CyclicDROp{std::move(sets)}, n);
}

OperatorSpec OperatorSpec::averaged_dr(std::vector<SetSpec> sets) {
  const int n = cycle_dim(sets, "averaged_dr");
  return OperatorSpec(AveragedDROp{std::move(sets)}, n);
}

OperatorSpec OperatorSpec::alternating_projections(std::vector<SetSpec> sets) {
  if (sets.size() < 2) {
    throw std::invalid_argument("alternating_projections: needs at least 2 sets");
  }
  const int n = common_dim(sets, "alternating_projections");
  return OperatorSpec(AlternatingProjectionsOp{std::move(sets)}, n);
}

OperatorSpec relax(OperatorSpec op, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("relax: alpha must lie in [0, 1)");
  }
  const int n = op.dim();
  return OperatorSpec(
      RelaxationOp{alpha, std::make_shared<const OperatorSpec>(std::move(op))}, n);
}

OperatorSpec compose(std::vector<OperatorSpec> ops) {
  if (ops.empty()) throw std::invalid_argument("compose: needs at least one operator");
  const int n = ops.front().dim();
  for (const OperatorSpec& op : ops) {
    if (op.dim() != n) throw std::invalid_argument("compose: operators have mixed dimensions");
  }
  return OperatorSpec(CompositionOp{std::move(ops)}, n);
}

Vector dr_step(const SetSpec& a, const SetSpec& b, const Vector& x, RandomStream& rng) {
  const Vector r = reflect(b, reflect(a, x, rng), rng);
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = 0.5 * (x[i] + r[i]);
  return out;
}

CyclicStepResult cyclic_step(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng,
                             bool record_substeps) {
  if (sets.size() < 2) throw std::invalid_argument("cyclic_step: needs at least 2 sets");
  const std::size_t n = sets.size();
  CyclicStepResult res;
  res.point = x;
  if (record_substeps) res.substeps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    res.point = dr_step(sets[i], sets[(i + 1) % n], res.point, rng);
    if (record_substeps) res.substeps.push_back(res.point);
  }
  return res;
}

Vector averaged_step(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng) {
  if (sets.size() < 2) throw std::invalid_argument("averaged_step: needs at least 2 sets");
  const std::size_t n = sets.size();
  RandomStream base = rng.split();
  Vector acc = zeros(x.size());
  for (std::size_t i = 0; i < n; ++i) {
    RandomStream sub = base.substream("averaged-summand", i);
    axpy(acc, 1.0, dr_step(sets[i], sets[(i + 1) % n], x, sub));
  }
  for (double& c : acc) c /= static_cast<double>(n);
  return acc;
}

Vector map_step(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng) {
  if (sets.empty()) throw std::invalid_argument("map_step: needs at least one set");
  Vector p = x;
  for (const SetSpec& s : sets) p = project(s, p, rng);
  return p;
}

namespace {

/// Evaluates one application of op at x, appending intermediate points to
/// `substeps` when non-null.
Vector apply_step(const OperatorSpec& op, const Vector& x, RandomStream& rng,
                  std::vector<Vector>* substeps) {
  return std::visit(
      [&](const auto& node) -> Vector {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ProjectionOp>) {
          Vector p = project(node.set, x, rng);
          if (substeps) substeps->push_back(p);
          return p;
        } else if constexpr (std::is_same_v<T, TwoSetDROp>) {
          Vector p = dr_step(node.a, node.b, x, rng);
          if (substeps) substeps->push_back(p);
          return p;
        } else if constexpr (std::is_same_v<T, CyclicDROp>) {
          CyclicStepResult r = cyclic_step(node.sets, x, rng, substeps != nullptr);
          if (substeps) {
            for (Vector& s : r.substeps) substeps->push_back(std::move(s));
          }
          return std::move(r.point);
        } else if constexpr (std::is_same_v<T, AveragedDROp>) {
          Vector p = averaged_step(node.sets, x, rng);
          if (substeps) substeps->push_back(p);
          return p;
        } else if constexpr (std::is_same_v<T, AlternatingProjectionsOp>) {
          Vector p = x;
          for (const SetSpec& s : node.sets) {
            p = project(s, p, rng);
            if (substeps) substeps->push_back(p);
          }
          return p;
        } else if constexpr (std::is_same_v<T, RelaxationOp>) {
          Vector inner = apply_step(*node.inner, x, rng, nullptr);
          Vector p(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) {
            p[i] = node.alpha * x[i] + (1.0 - node.alpha) * inner[i];
          }
          if (substeps) substeps->push_back(p);
          return p;
        } else {
          static_assert(std::is_same_v<T, CompositionOp>);
          Vector p = x;
          for (const OperatorSpec& inner : node.ops) {
            p = apply_step(inner, p, rng, nullptr);
            if (substeps) substeps->push_back(p);
          }
          return p;
        }
      },
      op.variant());
}

void collect_sets(const OperatorSpec& op, std::vector<SetSpec>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ProjectionOp>) {
          out.push_back(node.set);
        } else if constexpr (std::is_same_v<T, TwoSetDROp>) {
          out.push_back(node.a);
          out.push_back(node.b);
        } else if constexpr (std::is_same_v<T, RelaxationOp>) {
          collect_sets(*node.inner, out);
        } else if constexpr (std::is_same_v<T, CompositionOp>) {
          for (const OperatorSpec& inner : node.ops) collect_sets(inner, out);
        } else {
          for (const SetSpec& s : node.sets) out.push_back(s);
        }
      },
      op.variant());
}

}  // namespace

Vector apply(const OperatorSpec& op, const Vector& x, RandomStream& rng) {
  require_dim(x, static_cast<std::size_t>(op.dim()), "apply");
  require_finite(x, "apply");
  return apply_step(op, x, rng, nullptr);
}

std::vector<SetSpec> operator_sets(const OperatorSpec& op) {
  std::vector<SetSpec> out;
  collect_sets(op, out);
  return out;
}

IterationTrace iterate(const OperatorSpec& op, const Vector& x0, double eps, int max_iter,
                       RandomStream& rng, bool record_substeps) {
  require_dim(x0, static_cast<std::size_t>(op.dim()), "iterate");
  require_finite(x0, "iterate");
  if (!(eps > 0.0)) throw std::invalid_argument("iterate: eps must be positive");
  if (max_iter < 1) throw std::invalid_argument("iterate: max_iter must be positive");

  IterationTrace trace;
  trace.iterates.push_back(x0);

  Vector x = x0;
  int k = 0;
  Termination term = Termination::IterationCap;

  const auto t0 = std::chrono::steady_clock::now();
  while (k < max_iter) {
    Vector next;
    try {
      next = apply_step(op, x, rng, record_substeps ? &trace.substeps : nullptr);
    } catch (const std::domain_error& e) {
      // Non-finite intermediate inside the step; report where.
      throw std::runtime_error("iterate: non-finite value at iteration " + std::to_string(k + 1) +
                               " (" + e.what() + ")");
    }
    ++k;
    if (!all_finite(next)) {
      throw std::runtime_error("iterate: non-finite iterate at iteration " + std::to_string(k));
    }
    const double step = distance(next, x);
    trace.step_norms.push_back(step);
    trace.iterates.push_back(next);
    x = std::move(next);
    if (step < eps) {
      term = Termination::Converged;
      break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();

  trace.termination = term;
  trace.iterations = k;
  trace.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
  trace.final_error = error_metric(operator_sets(op), x, rng);
  return trace;
}

double error_metric(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng) {
  if (sets.size() < 2) return 0.0;
  const Vector p1 = project(sets.front(), x, rng);
  double err = 0.0;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const Vector pi = project(sets[i], x, rng);
    const double d = distance(p1, pi);
    err += d * d;
  }
  return err;
}

}  // namespace cycdr
