#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cycdr/sets.hpp"

namespace cycdr {

enum class ProblemKind { Balls, Spheres, Custom };

std::string_view kind_name(ProblemKind kind);

/// An N-set feasibility instance over a common ambient dimension.
struct ProblemInstance {
  int dim = 0;
  std::vector<SetSpec> sets;
  std::uint64_t seed = 0;
  ProblemKind kind = ProblemKind::Custom;

  bool operator==(const ProblemInstance&) const = default;
};

/// N ball constraints with centers uniform on [-5, 5]^n and radii uniform on
/// [||center||, ||center|| + 0.1], so the origin lies in every set.
/// Deterministic under (n, N, seed): set i draws its center from the named
/// substream ("center", i) and its radius from ("radius", i).
ProblemInstance gen_balls(int n, int N, std::uint64_t seed);

/// N sphere constraints with centers uniform on [-5, 5]^n and radius exactly
/// ||center||, so the origin lies on every sphere. Substreams as gen_balls.
ProblemInstance gen_spheres(int n, int N, std::uint64_t seed);

/// Initial point uniform on [-10, 10]^n, drawn from substream ("x0", 0).
Vector gen_x0(int n, std::uint64_t seed);

/// Instance JSON:
///   {"dim": n, "kind": "balls"|"spheres"|"custom", "seed": u64,
///    "sets": [{"type": ..., fields...}, ...]}
/// with set entries one of
///   {"type":"ball",       "center":[...], "radius": r}
///   {"type":"sphere",     "center":[...], "radius": r}
///   {"type":"hyperplane", "normal":[...], "offset": b}
///   {"type":"halfspace",  "normal":[...], "offset": b}
///   {"type":"affine",     "anchor":[...], "basis":[[...], ...]}
///   {"type":"box",        "lower":[...],  "upper":[...]}
///   {"type":"singleton",  "point":[...]}
/// "kind" and "seed" are optional on input (default custom / 0). Product and
/// diagonal sets are in-memory constructions and are not serialized.
ProblemInstance read_instance(std::string_view bytes);
std::string write_instance(const ProblemInstance& instance);

}  // namespace cycdr
