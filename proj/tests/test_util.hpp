#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "cycdr/instances.hpp"
#include "cycdr/rng.hpp"
#include "cycdr/sets.hpp"

namespace cycdr::testing {

inline void check_close(const Vector& actual, const Vector& expected, double tol = 1e-12) {
  REQUIRE(actual.size() == expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    CAPTURE(i);
    CAPTURE(actual[i]);
    CAPTURE(expected[i]);
    CHECK(std::abs(actual[i] - expected[i]) <= tol);
  }
}

inline Vector random_point(RandomStream& rng, int dim, double scale = 5.0) {
  Vector x(dim);
  for (double& c : x) c = rng.uniform(-scale, scale);
  return x;
}

inline Vector random_unit(RandomStream& rng, int dim) {
  Vector u(dim);
  double n = 0.0;
  do {
    for (double& c : u) c = rng.normal();
    n = norm(u);
  } while (n < 1e-6);
  for (double& c : u) c /= n;
  return u;
}

/// A random convex set drawn from the scalar catalogue (no sphere).
inline SetSpec random_convex_set(RandomStream& rng, int dim) {
  const int pick = static_cast<int>(rng.next_u64() % 6);
  switch (pick) {
    case 0:
      return SetSpec::ball(random_point(rng, dim), rng.uniform(0.5, 4.0));
    case 1:
      return SetSpec::hyperplane(random_unit(rng, dim), rng.uniform(-2.0, 2.0));
    case 2:
      return SetSpec::half_space(random_unit(rng, dim), rng.uniform(-2.0, 2.0));
    case 3: {
      const int k = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(dim));
      std::vector<Vector> basis;
      for (int i = 0; i < k; ++i) basis.push_back(random_point(rng, dim, 1.0));
      return SetSpec::affine_subspace(random_point(rng, dim, 2.0), std::move(basis));
    }
    case 4: {
      Vector lo = random_point(rng, dim, 3.0);
      Vector hi = lo;
      for (double& c : hi) c += rng.uniform(0.1, 3.0);
      return SetSpec::box(std::move(lo), std::move(hi));
    }
    default:
      return SetSpec::singleton(random_point(rng, dim));
  }
}

/// Random affine set: hyperplane or affine subspace (line, plane, ...).
inline SetSpec random_affine_set(RandomStream& rng, int dim) {
  if (rng.next_u64() % 2 == 0) {
    return SetSpec::hyperplane(random_unit(rng, dim), rng.uniform(-2.0, 2.0));
  }
  const int k = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(dim));
  std::vector<Vector> basis;
  for (int i = 0; i < k; ++i) basis.push_back(random_point(rng, dim, 1.0));
  return SetSpec::affine_subspace(random_point(rng, dim, 2.0), std::move(basis));
}

}  // namespace cycdr::testing
