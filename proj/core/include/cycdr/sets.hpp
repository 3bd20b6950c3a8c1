#pragma once

#include <variant>
#include <vector>

#include "cycdr/rng.hpp"
#include "cycdr/vector_ops.hpp"

namespace cycdr {

class SetSpec;

/// Closed ball {y : ||y - center|| <= radius}.
struct Ball {
  Vector center;
  double radius;
  bool operator==(const Ball&) const = default;
};

/// Sphere {y : ||y - center|| = radius}. Non-convex; the projection of the
/// center itself is set-valued and a random nearest point is drawn from the
/// caller's stream.
struct Sphere {
  Vector center;
  double radius;
  bool operator==(const Sphere&) const = default;
};

/// {x : <normal, x> = offset}, with the normal stored unit length.
struct Hyperplane {
  Vector normal;
  double offset;
  bool operator==(const Hyperplane&) const = default;
};

/// {x : <normal, x> <= offset}, with the normal stored unit length.
struct HalfSpace {
  Vector normal;
  double offset;
  bool operator==(const HalfSpace&) const = default;
};

/// anchor + span(basis). The basis is orthonormalized at construction;
/// an empty basis leaves the single point {anchor}.
struct AffineSubspace {
  Vector anchor;
  std::vector<Vector> basis;
  bool operator==(const AffineSubspace&) const = default;
};

struct Box {
  Vector lower;
  Vector upper;
  bool operator==(const Box&) const = default;
};

struct Singleton {
  Vector point;
  bool operator==(const Singleton&) const = default;
};

/// Cartesian product of blocks, stacked in index order.
struct Product {
  std::vector<SetSpec> blocks;
  std::vector<int> offsets;  // start coordinate of each block
  bool operator==(const Product&) const;
};

/// Diagonal {(x, x, ..., x)} of `copies` blocks of dimension `block_dim`.
struct Diagonal {
  int block_dim;
  int copies;
  bool operator==(const Diagonal&) const = default;
};

/// A closed set with a computable projection, as a tagged union over the
/// catalogue above. Values are immutable after construction and safe to
/// share across threads.
class SetSpec {
 public:
  using Variant = std::variant<Ball, Sphere, Hyperplane, HalfSpace, AffineSubspace,
                               Box, Singleton, Product, Diagonal>;

  static SetSpec ball(Vector center, double radius);
  static SetSpec sphere(Vector center, double radius);
  /// Normalizes (normal, offset) so the stored normal has unit norm.
  static SetSpec hyperplane(Vector normal, double offset);
  static SetSpec half_space(Vector normal, double offset);
  /// Orthonormalizes `basis` by modified Gram-Schmidt; vectors whose
  /// residual norm falls below 1e-12 times their input norm are dropped
  /// as dependent.
  static SetSpec affine_subspace(Vector anchor, std::vector<Vector> basis);
  static SetSpec box(Vector lower, Vector upper);
  static SetSpec singleton(Vector point);
  static SetSpec product(std::vector<SetSpec> blocks);
  static SetSpec diagonal(int block_dim, int copies);

  int dim() const { return dim_; }
  const Variant& variant() const { return v_; }

  bool operator==(const SetSpec&) const = default;

 private:
  SetSpec(Variant v, int dim) : v_(std::move(v)), dim_(dim) {}

  Variant v_;
  int dim_;
};

inline bool Product::operator==(const Product& other) const {
  return blocks == other.blocks && offsets == other.offsets;
}

/// Nearest point to x in the set. For convex variants this is the unique
/// best approximation; for Sphere at its exact center a uniformly random
/// unit direction is drawn from `rng` (the only case that consumes it).
Vector project(const SetSpec& set, const Vector& x, RandomStream& rng);

/// 2 * project(set, x) - x.
Vector reflect(const SetSpec& set, const Vector& x, RandomStream& rng);

/// True iff the distance from x to the set is at most tol. Uses a fixed
/// internal stream for the sphere-center tie-break, so the answer is a pure
/// function of (set, x, tol).
bool contains(const SetSpec& set, const Vector& x, double tol);

/// Distance from x to the set, computed via a projection with a fixed
/// internal stream.
double distance_to(const SetSpec& set, const Vector& x);

/// False only for Sphere and for Product containing a non-convex block.
bool is_convex(const SetSpec& set);

}  // namespace cycdr
