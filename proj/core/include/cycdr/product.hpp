#pragma once

#include <span>
#include <utility>

#include "cycdr/sets.hpp"

namespace cycdr {

/// Product-space lift of an N-set feasibility problem over a common ambient
/// space of dimension n: returns (C, D) with C the product of the sets and
/// D the diagonal, both of dimension n * N. A point lies in every input set
/// iff its diagonal embedding lies in C and D.
std::pair<SetSpec, SetSpec> lift(std::span<const SetSpec> sets);

/// Concatenate `copies` copies of x.
Vector embed_diagonal(const Vector& x, int copies);

/// Blockwise mean of a product-space point, i.e. the diagonal block of its
/// projection onto the diagonal. Extracts a single-space solution candidate.
Vector candidate(const Vector& product_point, int block_dim);

}  // namespace cycdr
