#include "cycdr/product.hpp"

#include <stdexcept>
#include <vector>

namespace cycdr {

std::pair<SetSpec, SetSpec> lift(std::span<const SetSpec> sets) {
  if (sets.empty()) throw std::invalid_argument("lift: needs at least one set");
  const int n = sets.front().dim();
  for (const SetSpec& s : sets) {
    if (s.dim() != n) throw std::invalid_argument("lift: sets have mixed ambient dimensions");
  }
  std::vector<SetSpec> blocks(sets.begin(), sets.end());
  return {SetSpec::product(std::move(blocks)),
          SetSpec::diagonal(n, static_cast<int>(sets.size()))};
}

Vector embed_diagonal(const Vector& x, int copies) {
  if (copies < 1) throw std::invalid_argument("embed_diagonal: copies must be at least 1");
  Vector out;
  out.reserve(x.size() * static_cast<std::size_t>(copies));
  for (int c = 0; c < copies; ++c) out.insert(out.end(), x.begin(), x.end());
  return out;
}

Vector candidate(const Vector& product_point, int block_dim) {
  if (block_dim < 1 || product_point.size() % static_cast<std::size_t>(block_dim) != 0) {
    throw std::invalid_argument("candidate: dimension not divisible by block_dim");
  }
  const std::size_t copies = product_point.size() / static_cast<std::size_t>(block_dim);
  Vector mean(block_dim, 0.0);
  for (std::size_t c = 0; c < copies; ++c) {
    for (int i = 0; i < block_dim; ++i) {
      mean[i] += product_point[c * static_cast<std::size_t>(block_dim) + i];
    }
  }
  for (double& m : mean) m /= static_cast<double>(copies);
  return mean;
}

}  // namespace cycdr
