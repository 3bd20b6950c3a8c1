#include "cycdr/sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cycdr {

namespace {

void require_positive(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument(std::string(what) + ": radius must be positive and finite");
  }
}

void require_nonempty(const Vector& v, const char* what) {
  if (v.empty()) {
    throw std::invalid_argument(std::string(what) + ": dimension must be at least 1");
  }
  require_finite(v, what);
}

}  // namespace

SetSpec SetSpec::ball(Vector center, double radius) {
  require_nonempty(center, "Ball");
  require_positive(radius, "Ball");
  const int n = static_cast<int>(center.size());
  return SetSpec(Ball{std::move(center), radius}, n);
}

SetSpec SetSpec::sphere(Vector center, double radius) {
  require_nonempty(center, "Sphere");
  require_positive(radius, "Sphere");
  const int n = static_cast<int>(center.size());
  return SetSpec(Sphere{std::move(center), radius}, n);
}

namespace {

/// Rescale (normal, offset) to a unit normal. Normals already within 1e-12
/// of unit length are kept bit-identical, so deserializing a normalized set
/// reproduces it exactly.
double normalize_normal(Vector& normal, double offset, const char* what) {
  const double na = norm(normal);
  if (na == 0.0) throw std::invalid_argument(std::string(what) + ": normal must be nonzero");
  if (std::abs(na - 1.0) <= 1e-12) return offset;
  for (double& c : normal) c /= na;
  return offset / na;
}

}  // namespace

SetSpec SetSpec::hyperplane(Vector normal, double offset) {
  require_nonempty(normal, "Hyperplane");
  if (!std::isfinite(offset)) throw std::invalid_argument("Hyperplane: non-finite offset");
  offset = normalize_normal(normal, offset, "Hyperplane");
  const int n = static_cast<int>(normal.size());
  return SetSpec(Hyperplane{std::move(normal), offset}, n);
}

SetSpec SetSpec::half_space(Vector normal, double offset) {
  require_nonempty(normal, "HalfSpace");
  if (!std::isfinite(offset)) throw std::invalid_argument("HalfSpace: non-finite offset");
  offset = normalize_normal(normal, offset, "HalfSpace");
  const int n = static_cast<int>(normal.size());
  return SetSpec(HalfSpace{std::move(normal), offset}, n);
}

namespace {

bool is_orthonormal(const std::vector<Vector>& basis, double tol) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(dot(basis[i], basis[j]) - expected) > tol) return false;
    }
  }
  return true;
}

}  // namespace

SetSpec SetSpec::affine_subspace(Vector anchor, std::vector<Vector> basis) {
  require_nonempty(anchor, "AffineSubspace");
  const std::size_t n = anchor.size();
  for (const Vector& v : basis) {
    require_dim(v, n, "AffineSubspace basis vector");
    require_finite(v, "AffineSubspace basis vector");
  }
  // A basis that is already orthonormal (to 1e-12) is stored bit-identical;
  // otherwise run modified Gram-Schmidt, dropping dependent vectors whose
  // residual norm falls below 1e-12 of their input norm.
  if (is_orthonormal(basis, 1e-12)) {
    return SetSpec(AffineSubspace{std::move(anchor), std::move(basis)}, static_cast<int>(n));
  }
  std::vector<Vector> ortho;
  ortho.reserve(basis.size());
  for (Vector& v : basis) {
    const double input_norm = norm(v);
    Vector w = std::move(v);
    for (const Vector& q : ortho) {
      axpy(w, -dot(q, w), q);
    }
    const double wn = norm(w);
    if (wn == 0.0 || wn < 1e-12 * input_norm) continue;  // dependent, drop
    for (double& c : w) c /= wn;
    ortho.push_back(std::move(w));
  }
  return SetSpec(AffineSubspace{std::move(anchor), std::move(ortho)}, static_cast<int>(n));
}

SetSpec SetSpec::box(Vector lower, Vector upper) {
  require_nonempty(lower, "Box");
  require_dim(upper, lower.size(), "Box upper");
  require_finite(upper, "Box");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw std::invalid_argument("Box: lower bound exceeds upper bound at coordinate " +
                                  std::to_string(i));
    }
  }
  const int n = static_cast<int>(lower.size());
  return SetSpec(Box{std::move(lower), std::move(upper)}, n);
}

SetSpec SetSpec::singleton(Vector point) {
  require_nonempty(point, "Singleton");
  const int n = static_cast<int>(point.size());
  return SetSpec(Singleton{std::move(point)}, n);
}

SetSpec SetSpec::product(std::vector<SetSpec> blocks) {
  if (blocks.empty()) throw std::invalid_argument("Product: needs at least one block");
  std::vector<int> offsets;
  offsets.reserve(blocks.size());
  int total = 0;
  for (const SetSpec& b : blocks) {
    offsets.push_back(total);
    total += b.dim();
  }
  return SetSpec(Product{std::move(blocks), std::move(offsets)}, total);
}

SetSpec SetSpec::diagonal(int block_dim, int copies) {
  if (block_dim < 1 || copies < 1) {
    throw std::invalid_argument("Diagonal: block_dim and copies must be at least 1");
  }
  return SetSpec(Diagonal{block_dim, copies}, block_dim * copies);
}

namespace {

Vector project_impl(const SetSpec& set, const Vector& x, RandomStream& rng);

struct Projector {
  const Vector& x;
  RandomStream& rng;

  Vector operator()(const Ball& s) const {
    const double d = distance(x, s.center);
    if (d <= s.radius) return x;
    Vector p = s.center;
    axpy(p, s.radius / d, sub(x, s.center));
    return p;
  }

  Vector operator()(const Sphere& s) const {
    const double d = distance(x, s.center);
    if (d == 0.0) {
      // All points of the sphere are nearest; draw a uniformly random unit
      // direction by normalizing independent Gaussian coordinates.
      Vector g(x.size());
      double gn = 0.0;
      do {
        for (double& c : g) c = rng.normal();
        gn = norm(g);
      } while (gn == 0.0);
      Vector p = s.center;
      axpy(p, s.radius / gn, g);
      return p;
    }
    Vector p = s.center;
    axpy(p, s.radius / d, sub(x, s.center));
    return p;
  }

  Vector operator()(const Hyperplane& s) const {
    Vector p = x;
    axpy(p, -(dot(s.normal, x) - s.offset), s.normal);
    return p;
  }

  Vector operator()(const HalfSpace& s) const {
    const double slack = dot(s.normal, x) - s.offset;
    if (slack <= 0.0) return x;
    Vector p = x;
    axpy(p, -slack, s.normal);
    return p;
  }

  Vector operator()(const AffineSubspace& s) const {
    const Vector y = sub(x, s.anchor);
    Vector p = s.anchor;
    for (const Vector& q : s.basis) {
      axpy(p, dot(q, y), q);
    }
    return p;
  }

  Vector operator()(const Box& s) const {
    Vector p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      p[i] = std::clamp(x[i], s.lower[i], s.upper[i]);
    }
    return p;
  }

  Vector operator()(const Singleton& s) const { return s.point; }

  Vector operator()(const Product& s) const {
    // Blocks consume the stream in index order.
    Vector p(x.size());
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      const int off = s.offsets[b];
      const int bd = s.blocks[b].dim();
      Vector xb(x.begin() + off, x.begin() + off + bd);
      Vector pb = project_impl(s.blocks[b], xb, rng);
      std::copy(pb.begin(), pb.end(), p.begin() + off);
    }
    return p;
  }

  Vector operator()(const Diagonal& s) const {
    Vector mean(s.block_dim, 0.0);
    for (int c = 0; c < s.copies; ++c) {
      for (int i = 0; i < s.block_dim; ++i) mean[i] += x[c * s.block_dim + i];
    }
    for (double& m : mean) m /= s.copies;
    Vector p(x.size());
    for (int c = 0; c < s.copies; ++c) {
      std::copy(mean.begin(), mean.end(), p.begin() + c * s.block_dim);
    }
    return p;
  }
};

Vector project_impl(const SetSpec& set, const Vector& x, RandomStream& rng) {
  return std::visit(Projector{x, rng}, set.variant());
}

}  // namespace

Vector project(const SetSpec& set, const Vector& x, RandomStream& rng) {
  require_dim(x, static_cast<std::size_t>(set.dim()), "project");
  require_finite(x, "project");
  return project_impl(set, x, rng);
}

Vector reflect(const SetSpec& set, const Vector& x, RandomStream& rng) {
  Vector p = project(set, x, rng);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = 2.0 * p[i] - x[i];
  return p;
}

double distance_to(const SetSpec& set, const Vector& x) {
  RandomStream fixed(0x5EEDu);
  return distance(x, project(set, x, fixed));
}

bool contains(const SetSpec& set, const Vector& x, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("contains: tolerance must be nonnegative");
  return distance_to(set, x) <= tol;
}

bool is_convex(const SetSpec& set) {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          return false;
        } else if constexpr (std::is_same_v<T, Product>) {
          return std::all_of(s.blocks.begin(), s.blocks.end(),
                             [](const SetSpec& b) { return is_convex(b); });
        } else {
          return true;
        }
      },
      set.variant());
}

}  // namespace cycdr
