#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "cycdr/sets.hpp"

namespace cycdr {

class OperatorSpec;

struct ProjectionOp {
  SetSpec set;
};

/// 2-set Douglas-Rachford operator T_{A,B} = (I + R_B R_A) / 2.
struct TwoSetDROp {
  SetSpec a;
  SetSpec b;
};

/// Cyclic Douglas-Rachford: T_{C_N,C_1} ... T_{C_2,C_3} T_{C_1,C_2},
/// i.e. one full pass of 2-set operators around the cycle per application.
struct CyclicDROp {
  std::vector<SetSpec> sets;
};

/// Averaged Douglas-Rachford: (1/N) sum_i T_{C_i,C_{i+1}}, every summand
/// evaluated at the same input point.
struct AveragedDROp {
  std::vector<SetSpec> sets;
};

/// Composition of projections P_{C_N} ... P_{C_2} P_{C_1}.
struct AlternatingProjectionsOp {
  std::vector<SetSpec> sets;
};

/// alpha * I + (1 - alpha) * inner, alpha in [0, 1).
struct RelaxationOp {
  double alpha;
  std::shared_ptr<const OperatorSpec> inner;
};

/// Left-to-right composition: the first listed operator is applied first.
struct CompositionOp {
  std::vector<OperatorSpec> ops;
};

/// A composable self-map of the ambient space. Immutable; evaluation is pure
/// given the caller's random stream.
class OperatorSpec {
 public:
  using Variant = std::variant<ProjectionOp, TwoSetDROp, CyclicDROp, AveragedDROp,
                               AlternatingProjectionsOp, RelaxationOp, CompositionOp>;

  static OperatorSpec projection(SetSpec set);
  static OperatorSpec two_set_dr(SetSpec a, SetSpec b);
  static OperatorSpec cyclic_dr(std::vector<SetSpec> sets);
  static OperatorSpec averaged_dr(std::vector<SetSpec> sets);
  static OperatorSpec alternating_projections(std::vector<SetSpec> sets);

  int dim() const { return dim_; }
  const Variant& variant() const { return v_; }

  friend OperatorSpec relax(OperatorSpec op, double alpha);
  friend OperatorSpec compose(std::vector<OperatorSpec> ops);

 private:
  OperatorSpec(Variant v, int dim) : v_(std::move(v)), dim_(dim) {}

  Variant v_;
  int dim_;
};

/// alpha * I + (1 - alpha) * op; fixed points of op stay fixed.
OperatorSpec relax(OperatorSpec op, double alpha);

/// Apply ops left to right (first listed applied first).
OperatorSpec compose(std::vector<OperatorSpec> ops);

/// One 2-set Douglas-Rachford step: (x + R_B(R_A(x))) / 2.
Vector dr_step(const SetSpec& a, const SetSpec& b, const Vector& x, RandomStream& rng);

struct CyclicStepResult {
  Vector point;
  /// The N intermediate 2-set outputs of the pass, recorded when requested;
  /// the last entry equals `point`.
  std::vector<Vector> substeps;
};

/// One full cyclic pass: 2-set steps over (C_1,C_2), (C_2,C_3), ..., (C_N,C_1).
CyclicStepResult cyclic_step(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng,
                             bool record_substeps = false);

/// (1/N) sum_i T_{C_i,C_{i+1}} x, all summands evaluated at the same x.
/// Each summand draws from an independently derived child stream, so the
/// result does not depend on evaluation order.
Vector averaged_step(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng);

/// P_{C_N}(... P_{C_2}(P_{C_1}(x)) ...).
Vector map_step(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng);

/// Evaluate the operator once.
Vector apply(const OperatorSpec& op, const Vector& x, RandomStream& rng);

/// Constituent sets in application order, collected recursively.
std::vector<SetSpec> operator_sets(const OperatorSpec& op);

enum class Termination { Converged, IterationCap };

/// Ordered record of a fixed-point iteration x_{n+1} = T(x_n).
struct IterationTrace {
  std::vector<Vector> iterates;    // x_0 ... x_K
  std::vector<Vector> substeps;    // intermediate points, when recorded
  std::vector<double> step_norms;  // ||x_{n+1} - x_n||, length K
  Termination termination = Termination::IterationCap;
  int iterations = 0;  // K
  double elapsed_s = 0.0;
  double final_error = 0.0;
};

/// Iterate op from x0 until ||x_n - x_{n+1}|| < eps (Converged, the firing
/// step included in the trace) or max_iter applications (IterationCap).
/// A non-finite iterate raises an error carrying the iteration index.
/// elapsed_s covers the iteration loop only.
///
/// With record_substeps set, each application appends its intermediate
/// points: N per pass for cyclic Douglas-Rachford (one per 2-set step) and
/// for alternating projections (one per projection), one per constituent for
/// compositions, and the step result alone for the other operators.
IterationTrace iterate(const OperatorSpec& op, const Vector& x0, double eps, int max_iter,
                       RandomStream& rng, bool record_substeps = false);

/// Solution-quality metric sum_{i >= 2} ||P_{C_1}(x) - P_{C_i}(x)||^2;
/// zero when fewer than two sets are given.
double error_metric(std::span<const SetSpec> sets, const Vector& x, RandomStream& rng);

}  // namespace cycdr
