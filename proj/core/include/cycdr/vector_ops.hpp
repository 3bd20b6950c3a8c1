#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycdr {

/// Dense coordinate vector in the ambient space.
using Vector = std::vector<double>;

inline bool all_finite(const Vector& v) {
  for (double c : v) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

inline void require_finite(const Vector& v, const char* what) {
  if (!all_finite(v)) {
    throw std::domain_error(std::string(what) + ": non-finite coordinate");
  }
}

inline void require_dim(const Vector& v, std::size_t dim, const char* what) {
  if (v.size() != dim) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(dim) + ", got " + std::to_string(v.size()));
  }
}

inline double dot(const Vector& a, const Vector& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double norm_sq(const Vector& v) { return dot(v, v); }

inline double norm(const Vector& v) { return std::sqrt(norm_sq(v)); }

inline double distance(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector scaled(const Vector& v, double alpha) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = alpha * v[i];
  return out;
}

/// y += alpha * x
inline void axpy(Vector& y, double alpha, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline Vector zeros(std::size_t n) { return Vector(n, 0.0); }

}  // namespace cycdr
