#include "cycdr/instances.hpp"

#include <stdexcept>
#include <utility>

#include "cycdr/rng.hpp"

#include <json.hpp>

namespace cycdr {

namespace {

using nlohmann::json;

Vector draw_box_point(RandomStream& stream, int n, double lo, double hi) {
  Vector x(n);
  for (double& c : x) c = stream.uniform(lo, hi);
  return x;
}

ProblemInstance gen_round_sets(int n, int N, std::uint64_t seed, bool spheres) {
  if (n < 1) throw std::invalid_argument("instance generator: n must be at least 1");
  if (N < 1) throw std::invalid_argument("instance generator: N must be at least 1");
  RandomStream root(seed);
  ProblemInstance inst;
  inst.dim = n;
  inst.seed = seed;
  inst.kind = spheres ? ProblemKind::Spheres : ProblemKind::Balls;
  inst.sets.reserve(N);
  for (int i = 0; i < N; ++i) {
    RandomStream cs = root.substream("center", static_cast<std::uint64_t>(i));
    Vector center = draw_box_point(cs, n, -5.0, 5.0);
    const double cn = norm(center);
    if (spheres) {
      // Radius assigned from the computed norm, never recomputed, so
      // radius == ||center|| holds exactly in float arithmetic.
      inst.sets.push_back(SetSpec::sphere(std::move(center), cn));
    } else {
      RandomStream rs = root.substream("radius", static_cast<std::uint64_t>(i));
      const double r = rs.uniform(cn, cn + 0.1);
      inst.sets.push_back(SetSpec::ball(std::move(center), r));
    }
  }
  return inst;
}

json vector_to_json(const Vector& v) { return json(v); }

Vector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("instance schema: " + where + " must be a non-empty array");
  }
  Vector v;
  v.reserve(j.size());
  for (const json& c : j) {
    if (!c.is_number()) {
      throw std::invalid_argument("instance schema: " + where + " must contain numbers");
    }
    v.push_back(c.get<double>());
  }
  return v;
}

json set_to_json(const SetSpec& set) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return {{"type", "ball"}, {"center", vector_to_json(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, Sphere>) {
          return {{"type", "sphere"}, {"center", vector_to_json(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          return {{"type", "hyperplane"}, {"normal", vector_to_json(s.normal)}, {"offset", s.offset}};
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return {{"type", "halfspace"}, {"normal", vector_to_json(s.normal)}, {"offset", s.offset}};
        } else if constexpr (std::is_same_v<T, AffineSubspace>) {
          json basis = json::array();
          for (const Vector& b : s.basis) basis.push_back(vector_to_json(b));
          return {{"type", "affine"}, {"anchor", vector_to_json(s.anchor)}, {"basis", basis}};
        } else if constexpr (std::is_same_v<T, Box>) {
          return {{"type", "box"}, {"lower", vector_to_json(s.lower)}, {"upper", vector_to_json(s.upper)}};
        } else if constexpr (std::is_same_v<T, Singleton>) {
          return {{"type", "singleton"}, {"point", vector_to_json(s.point)}};
        } else {
          throw std::invalid_argument(
              "instance schema: product/diagonal sets are not serializable");
        }
      },
      set.variant());
}

const json& require_field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument("instance schema: " + where + " is missing \"" + key + "\"");
  }
  return *it;
}

double number_field(const json& j, const char* key, const std::string& where) {
  const json& f = require_field(j, key, where);
  if (!f.is_number()) {
    throw std::invalid_argument("instance schema: " + where + " field \"" + key +
                                "\" must be a number");
  }
  return f.get<double>();
}

SetSpec set_from_json(const json& j, std::size_t index) {
  const std::string where = "sets[" + std::to_string(index) + "]";
  if (!j.is_object()) throw std::invalid_argument("instance schema: " + where + " must be an object");
  const json& type = require_field(j, "type", where);
  if (!type.is_string()) {
    throw std::invalid_argument("instance schema: " + where + " \"type\" must be a string");
  }
  const std::string t = type.get<std::string>();
  if (t == "ball") {
    return SetSpec::ball(vector_from_json(require_field(j, "center", where), where + ".center"),
                         number_field(j, "radius", where));
  }
  if (t == "sphere") {
    return SetSpec::sphere(vector_from_json(require_field(j, "center", where), where + ".center"),
                           number_field(j, "radius", where));
  }
  if (t == "hyperplane") {
    return SetSpec::hyperplane(vector_from_json(require_field(j, "normal", where), where + ".normal"),
                               number_field(j, "offset", where));
  }
  if (t == "halfspace") {
    return SetSpec::half_space(vector_from_json(require_field(j, "normal", where), where + ".normal"),
                               number_field(j, "offset", where));
  }
  if (t == "affine") {
    const json& basis_json = require_field(j, "basis", where);
    if (!basis_json.is_array()) {
      throw std::invalid_argument("instance schema: " + where + ".basis must be an array");
    }
    std::vector<Vector> basis;
    basis.reserve(basis_json.size());
    for (std::size_t k = 0; k < basis_json.size(); ++k) {
      basis.push_back(vector_from_json(basis_json[k], where + ".basis[" + std::to_string(k) + "]"));
    }
    return SetSpec::affine_subspace(
        vector_from_json(require_field(j, "anchor", where), where + ".anchor"), std::move(basis));
  }
  if (t == "box") {
    return SetSpec::box(vector_from_json(require_field(j, "lower", where), where + ".lower"),
                        vector_from_json(require_field(j, "upper", where), where + ".upper"));
  }
  if (t == "singleton") {
    return SetSpec::singleton(vector_from_json(require_field(j, "point", where), where + ".point"));
  }
  throw std::invalid_argument("instance schema: " + where + " has unknown type \"" + t + "\"");
}

}  // namespace

std::string_view kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Balls:
      return "balls";
    case ProblemKind::Spheres:
      return "spheres";
    case ProblemKind::Custom:
      return "custom";
  }
  return "custom";
}

ProblemInstance gen_balls(int n, int N, std::uint64_t seed) {
  return gen_round_sets(n, N, seed, /*spheres=*/false);
}

ProblemInstance gen_spheres(int n, int N, std::uint64_t seed) {
  return gen_round_sets(n, N, seed, /*spheres=*/true);
}

Vector gen_x0(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_x0: n must be at least 1");
  RandomStream stream = RandomStream(seed).substream("x0", 0);
  return draw_box_point(stream, n, -10.0, 10.0);
}

ProblemInstance read_instance(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance schema: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("instance schema: top level must be an object");
  const json& dim = require_field(j, "dim", "instance");
  if (!dim.is_number_integer() || dim.get<int>() < 1) {
    throw std::invalid_argument("instance schema: \"dim\" must be a positive integer");
  }
  const json& sets_json = require_field(j, "sets", "instance");
  if (!sets_json.is_array() || sets_json.empty()) {
    throw std::invalid_argument("instance schema: \"sets\" must be a non-empty array");
  }

  ProblemInstance inst;
  inst.dim = dim.get<int>();
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_integer() && !it->is_number_unsigned()) {
      throw std::invalid_argument("instance schema: \"seed\" must be an integer");
    }
    inst.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("kind"); it != j.end()) {
    const std::string k = it->get<std::string>();
    if (k == "balls") {
      inst.kind = ProblemKind::Balls;
    } else if (k == "spheres") {
      inst.kind = ProblemKind::Spheres;
    } else if (k == "custom") {
      inst.kind = ProblemKind::Custom;
    } else {
      throw std::invalid_argument("instance schema: unknown kind \"" + k + "\"");
    }
  }

  inst.sets.reserve(sets_json.size());
  for (std::size_t i = 0; i < sets_json.size(); ++i) {
    SetSpec s = set_from_json(sets_json[i], i);
    if (s.dim() != inst.dim) {
      throw std::invalid_argument("instance schema: sets[" + std::to_string(i) +
                                  "] has dimension " + std::to_string(s.dim()) +
                                  ", expected " + std::to_string(inst.dim));
    }
    inst.sets.push_back(std::move(s));
  }
  return inst;
}

std::string write_instance(const ProblemInstance& instance) {
  json j;
  j["dim"] = instance.dim;
  j["kind"] = std::string(kind_name(instance.kind));
  j["seed"] = instance.seed;
  json sets = json::array();
  for (const SetSpec& s : instance.sets) sets.push_back(set_to_json(s));
  j["sets"] = std::move(sets);
  return j.dump();
}

}  // namespace cycdr
