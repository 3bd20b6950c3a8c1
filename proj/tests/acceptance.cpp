// Acceptance suite: end-to-end checks of solver behavior at desk scale.
// Each numbered criterion prints one PASS/FAIL line; failing clauses are
// listed underneath. The process exits with the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cycdr/bench.hpp"
#include "cycdr/instances.hpp"
#include "cycdr/operators.hpp"
#include "cycdr/product.hpp"

using namespace cycdr;

namespace {

constexpr std::uint64_t kBaseSeed = 1;

struct Checker {
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int g_failed = 0;

void criterion(int id, const std::string& title, const std::function<void(Checker&)>& body) {
  Checker c;
  body(c);
  std::printf("[%s] %2d. %s\n", c.failures.empty() ? "PASS" : "FAIL", id, title.c_str());
  for (const auto& f : c.failures) std::printf("         - %s\n", f.c_str());
  if (!c.failures.empty()) ++g_failed;
  std::fflush(stdout);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Vector random_point(RandomStream& rng, int dim, double scale) {
  Vector x(dim);
  for (double& c : x) c = rng.uniform(-scale, scale);
  return x;
}

Vector random_unit(RandomStream& rng, int dim) {
  Vector u(dim);
  double n = 0.0;
  do {
    for (double& c : u) c = rng.normal();
    n = norm(u);
  } while (n < 1e-6);
  for (double& c : u) c /= n;
  return u;
}

SetSpec random_convex_set(RandomStream& rng, int dim) {
  switch (rng.next_u64() % 6) {
    case 0:
      return SetSpec::ball(random_point(rng, dim, 5.0), rng.uniform(0.5, 4.0));
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
      return SetSpec::singleton(random_point(rng, dim, 5.0));
  }
}

SetSpec random_affine_set(RandomStream& rng, int dim) {
  if (rng.next_u64() % 2 == 0) {
    return SetSpec::hyperplane(random_unit(rng, dim), rng.uniform(-2.0, 2.0));
  }
  const int k = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(dim));
  std::vector<Vector> basis;
  for (int i = 0; i < k; ++i) basis.push_back(random_point(rng, dim, 1.0));
  return SetSpec::affine_subspace(random_point(rng, dim, 2.0), std::move(basis));
}

const CellStats& row(const BenchmarkReport& report, int n, int N, Method m, double eps) {
  return report.rows.at(CellKey{n, N, m, eps});
}

}  // namespace

int main() {
  std::printf("acceptance suite (base seed %llu, 10 trials per benchmark cell)\n",
              static_cast<unsigned long long>(kBaseSeed));

  criterion(1, "balls n=100 N=10 eps=1e-3: cyclic <=20 mean iters, per-trial error <=1e-12; "
               "product DR <=100 mean iters", [](Checker& c) {
    const std::vector<std::pair<int, int>> sizes{{100, 10}};
    const std::vector<double> eps{1e-3};
    const std::vector<Method> methods{Method::CyclicDR, Method::ProductDR};
    const auto report = run_suite(ProblemKind::Balls, sizes, eps, methods, 10, kBaseSeed, 1000);
    const auto& cyc = row(report, 100, 10, Method::CyclicDR, 1e-3);
    const auto& prod = row(report, 100, 10, Method::ProductDR, 1e-3);
    c.check(cyc.iter_mean <= 20.0, "cyclic mean iterations " + num(cyc.iter_mean) + " > 20");
    c.check(cyc.err_max <= 1e-12,
            "cyclic worst per-trial error " + num(cyc.err_max) + " > 1e-12");
    c.check(prod.iter_mean <= 100.0, "product mean iterations " + num(prod.iter_mean) + " > 100");
  });

  criterion(2, "balls n=100 N=100 eps=1e-6: cyclic mean iterations <= 10", [](Checker& c) {
    const std::vector<std::pair<int, int>> sizes{{100, 100}};
    const std::vector<double> eps{1e-6};
    const std::vector<Method> methods{Method::CyclicDR};
    const auto report = run_suite(ProblemKind::Balls, sizes, eps, methods, 10, kBaseSeed, 1000);
    const auto& cyc = row(report, 100, 100, Method::CyclicDR, 1e-6);
    c.check(cyc.iter_mean <= 10.0, "cyclic mean iterations " + num(cyc.iter_mean) + " > 10");
  });

  criterion(3, "spheres n=100 N=10 eps=1e-3: cyclic <=34 mean iters, per-trial error <=1e-9",
            [](Checker& c) {
    const std::vector<std::pair<int, int>> sizes{{100, 10}};
    const std::vector<double> eps{1e-3};
    const std::vector<Method> methods{Method::CyclicDR};
    const auto report = run_suite(ProblemKind::Spheres, sizes, eps, methods, 10, kBaseSeed, 1000);
    const auto& cyc = row(report, 100, 10, Method::CyclicDR, 1e-3);
    c.check(cyc.iter_mean <= 34.0, "cyclic mean iterations " + num(cyc.iter_mean) + " > 34");
    c.check(cyc.err_max <= 1e-9, "cyclic worst per-trial error " + num(cyc.err_max) + " > 1e-9");
  });

  criterion(4, "spheres n=100 N=20 eps=1e-6: product DR caps at 1000 in every trial; "
               "cyclic converges within 30 iterations", [](Checker& c) {
    for (int k = 0; k < 10; ++k) {
      const std::uint64_t seed = kBaseSeed + static_cast<std::uint64_t>(k);
      const auto inst = gen_spheres(100, 20, seed);
      const Vector x0 = gen_x0(100, seed);

      RandomStream rng_p = RandomStream(seed).substream("product-dr", 0);
      const auto prod = run_trial(Method::ProductDR, inst, x0, 1e-6, 1000, rng_p);
      c.check(prod.termination == Termination::IterationCap && prod.iterations == 1000,
              "trial " + std::to_string(k) + ": product DR stopped after " +
                  std::to_string(prod.iterations) + " iterations instead of capping");

      RandomStream rng_c = RandomStream(seed).substream("cyclic", 0);
      const auto cyc = run_trial(Method::CyclicDR, inst, x0, 1e-6, 1000, rng_c);
      c.check(cyc.termination == Termination::Converged && cyc.iterations <= 30,
              "trial " + std::to_string(k) + ": cyclic took " + std::to_string(cyc.iterations) +
                  " iterations (> 2x reference max 15)");
    }
  });

  criterion(5, "two-hyperplane pass contracts normal components by the squared cosine "
               "(1000 random pairs + worked case)", [](Checker& c) {
    RandomStream rng(501);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
      const Vector a1 = random_unit(rng, dim);
      const Vector a2 = random_unit(rng, dim);
      const Vector x = random_point(rng, dim, 5.0);
      const std::vector<SetSpec> sets{SetSpec::hyperplane(a1, 0.0), SetSpec::hyperplane(a2, 0.0)};
      const Vector tx = cyclic_step(sets, x, rng).point;
      const double c2 = dot(a1, a2) * dot(a1, a2);
      if (std::abs(dot(a1, tx) - c2 * dot(a1, x)) > 1e-12 ||
          std::abs(dot(a2, tx) - c2 * dot(a2, x)) > 1e-12) {
        ++bad;
      }
    }
    c.check(bad == 0, std::to_string(bad) + "/1000 random pairs exceeded 1e-12");

    const std::vector<SetSpec> worked{SetSpec::hyperplane({1.0, 0.0}, 0.0),
                                      SetSpec::hyperplane({0.6, 0.8}, 0.0)};
    const Vector tx = cyclic_step(worked, {1.0, 1.0}, rng).point;
    c.check(std::abs(tx[0] - 0.36) <= 1e-12 && std::abs(tx[1] - 0.36) <= 1e-12,
            "worked case gave (" + num(tx[0]) + ", " + num(tx[1]) + "), expected (0.36, 0.36)");
  });

  criterion(6, "cyclic == averaged on 200 random affine pairs; the two differ on 50 "
               "hyperplane triples", [](Checker& c) {
    RandomStream rng(601);
    int pair_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
      const std::vector<SetSpec> sets{random_affine_set(rng, dim), random_affine_set(rng, dim)};
      const Vector x = random_point(rng, dim, 8.0);
      Vector a = cyclic_step(sets, x, rng).point;
      Vector b = averaged_step(sets, x, rng);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-12) {
          ++pair_bad;
          break;
        }
      }
    }
    c.check(pair_bad == 0, std::to_string(pair_bad) + "/200 affine pairs differed beyond 1e-12");

    int triple_bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<SetSpec> sets{
          SetSpec::hyperplane(random_unit(rng, 3), rng.uniform(-1.0, 1.0)),
          SetSpec::hyperplane(random_unit(rng, 3), rng.uniform(-1.0, 1.0)),
          SetSpec::hyperplane(random_unit(rng, 3), rng.uniform(-1.0, 1.0))};
      bool found = false;
      for (int attempt = 0; attempt < 5 && !found; ++attempt) {
        const Vector x = random_point(rng, 3, 5.0);
        found = distance(cyclic_step(sets, x, rng).point, averaged_step(sets, x, rng)) > 1e-6;
      }
      if (!found) ++triple_bad;
    }
    c.check(triple_bad == 0,
            std::to_string(triple_bad) + "/50 hyperplane triples never differed beyond 1e-6");
  });

  criterion(7, "from a start in the first set, 25 cyclic passes equal alternating projections "
               "on 100 random convex instances", [](Checker& c) {
    RandomStream rng(701);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng.next_u64() % 9);
      const int N = 2 + static_cast<int>(rng.next_u64() % 5);
      const auto inst = gen_balls(n, N, 7000 + static_cast<std::uint64_t>(trial));
      Vector x_cyc = project(inst.sets[0], gen_x0(n, 7100 + static_cast<std::uint64_t>(trial)), rng);
      Vector x_map = x_cyc;

      std::vector<SetSpec> reordered(inst.sets.begin() + 1, inst.sets.end());
      reordered.push_back(inst.sets[0]);

      bool ok = true;
      for (int k = 0; k < 25 && ok; ++k) {
        x_cyc = cyclic_step(inst.sets, x_cyc, rng).point;
        x_map = map_step(reordered, x_map, rng);
        for (std::size_t i = 0; i < x_cyc.size(); ++i) {
          if (std::abs(x_cyc[i] - x_map[i]) > 1e-10) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) ++bad;
    }
    c.check(bad == 0, std::to_string(bad) + "/100 instances diverged beyond 1e-10");
  });

  criterion(8, "two non-parallel lines through the origin: cyclic limit within 1e-6 of the "
               "origin for 100 random starts", [](Checker& c) {
    RandomStream rng(801);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = rng.uniform(0.05, 1.52);
      const auto op = OperatorSpec::cyclic_dr(
          {SetSpec::hyperplane({1.0, 0.0}, 0.0),
           SetSpec::hyperplane({std::cos(theta), std::sin(theta)}, 0.0)});
      const auto trace = iterate(op, random_point(rng, 2, 10.0), 1e-12, 200000, rng);
      if (trace.termination != Termination::Converged || norm(trace.iterates.back()) > 1e-6) ++bad;
    }
    c.check(bad == 0, std::to_string(bad) + "/100 starts missed the origin by more than 1e-6");
  });

  criterion(9, "unit ball vs singleton: separated point yields the best approximation pair, "
               "interior point is the limit", [](Checker& c) {
    RandomStream rng(901);
    const auto ball = SetSpec::ball({0.0, 0.0}, 1.0);

    const auto sep = OperatorSpec::cyclic_dr({ball, SetSpec::singleton({2.0, 0.0})});
    const auto trace = iterate(sep, {7.0, -3.0}, 1e-12, 200000, rng);
    const Vector x = trace.iterates.back();
    const Vector pb = project(ball, x, rng);
    c.check(trace.termination == Termination::Converged &&
                std::abs(pb[0] - 1.0) <= 1e-6 && std::abs(pb[1]) <= 1e-6,
            "ball shadow (" + num(pb[0]) + ", " + num(pb[1]) + ") is not (1, 0)");

    int bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Vector y = random_point(rng, 2, 0.7);
      const auto op = OperatorSpec::cyclic_dr({ball, SetSpec::singleton(y)});
      const auto tr = iterate(op, random_point(rng, 2, 8.0), 1e-12, 200000, rng);
      if (tr.termination != Termination::Converged || distance(tr.iterates.back(), y) > 1e-6) ++bad;
    }
    c.check(bad == 0, std::to_string(bad) + "/20 interior points were not reached within 1e-6");
  });

  criterion(10, "from a diagonal start, one cyclic pass over [D, C] equals the embedded "
                "average of projections on 100 random instances", [](Checker& c) {
    RandomStream rng(1001);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng.next_u64() % 5);
      const int N = 2 + static_cast<int>(rng.next_u64() % 4);
      const auto inst = gen_balls(n, N, 10000 + static_cast<std::uint64_t>(trial));
      const Vector x0 = gen_x0(n, 10100 + static_cast<std::uint64_t>(trial));

      const auto [cset, dset] = lift(inst.sets);
      const std::vector<SetSpec> cycle{dset, cset};
      const Vector lifted = cyclic_step(cycle, embed_diagonal(x0, N), rng).point;

      Vector mean = zeros(n);
      for (const auto& set : inst.sets) axpy(mean, 1.0 / N, project(set, x0, rng));
      const Vector expected = embed_diagonal(mean, N);
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (std::abs(lifted[i] - expected[i]) > 1e-10) {
          ++bad;
          break;
        }
      }
    }
    c.check(bad == 0, std::to_string(bad) + "/100 instances diverged beyond 1e-10");
  });

  criterion(11, "property suites, >=1000 randomized cases each: firm nonexpansiveness, "
                "translation/dilation formulas, Fejer monotonicity, nonincreasing steps",
            [](Checker& c) {
    // Firm nonexpansiveness of projections onto convex sets.
    {
      RandomStream rng(1101);
      int bad = 0;
      for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const auto set = random_convex_set(rng, dim);
        const Vector x = random_point(rng, dim, 8.0);
        const Vector y = random_point(rng, dim, 8.0);
        const Vector px = project(set, x, rng);
        const Vector py = project(set, y, rng);
        if (norm_sq(sub(px, py)) + norm_sq(sub(sub(x, px), sub(y, py))) >
            norm_sq(sub(x, y)) + 1e-9) {
          ++bad;
        }
      }
      c.check(bad == 0, std::to_string(bad) + "/1000 projection pairs broke firm nonexpansiveness");
    }
    // Firm nonexpansiveness of the 2-set step over convex pairs.
    {
      RandomStream rng(1102);
      int bad = 0;
      for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const auto a = random_convex_set(rng, dim);
        const auto b = random_convex_set(rng, dim);
        const Vector x = random_point(rng, dim, 8.0);
        const Vector y = random_point(rng, dim, 8.0);
        const Vector tx = dr_step(a, b, x, rng);
        const Vector ty = dr_step(a, b, y, rng);
        if (norm_sq(sub(tx, ty)) + norm_sq(sub(sub(x, tx), sub(y, ty))) >
            norm_sq(sub(x, y)) + 1e-9) {
          ++bad;
        }
      }
      c.check(bad == 0, std::to_string(bad) + "/1000 2-set steps broke firm nonexpansiveness");
    }
    // Translation formula.
    {
      RandomStream rng(1103);
      int bad = 0;
      for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const Vector y = random_point(rng, dim, 5.0);
        const Vector x = random_point(rng, dim, 8.0);
        SetSpec base = SetSpec::ball({0.0, 0.0}, 1.0);
        SetSpec shifted = base;
        switch (trial % 3) {
          case 0: {
            const Vector center = random_point(rng, dim, 5.0);
            const double r = rng.uniform(0.5, 3.0);
            base = SetSpec::ball(center, r);
            shifted = SetSpec::ball(add(center, y), r);
            break;
          }
          case 1: {
            const Vector a = random_unit(rng, dim);
            const double b = rng.uniform(-2.0, 2.0);
            base = SetSpec::hyperplane(a, b);
            shifted = SetSpec::hyperplane(a, b + dot(a, y));
            break;
          }
          default: {
            const Vector anchor = random_point(rng, dim, 2.0);
            const std::vector<Vector> basis{random_point(rng, dim, 1.0)};
            base = SetSpec::affine_subspace(anchor, basis);
            shifted = SetSpec::affine_subspace(add(anchor, y), basis);
            break;
          }
        }
        Vector via = project(base, sub(x, y), rng);
        axpy(via, 1.0, y);
        const Vector direct = project(shifted, x, rng);
        for (std::size_t i = 0; i < via.size(); ++i) {
          if (std::abs(via[i] - direct[i]) > 1e-12) {
            ++bad;
            break;
          }
        }
      }
      c.check(bad == 0, std::to_string(bad) + "/1000 translation cases exceeded 1e-12");
    }
    // Dilation formula for centered balls and spheres.
    {
      RandomStream rng(1104);
      int bad = 0;
      for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const double r = rng.uniform(0.5, 3.0);
        const double lambda = (trial % 2 == 0 ? 1.0 : -1.0) * rng.uniform(0.3, 2.5);
        const Vector x = random_point(rng, dim, 8.0);
        const bool sphere = trial % 4 >= 2;
        const auto set = sphere ? SetSpec::sphere(zeros(dim), r) : SetSpec::ball(zeros(dim), r);
        const auto set_scaled = sphere ? SetSpec::sphere(zeros(dim), std::abs(lambda) * r)
                                       : SetSpec::ball(zeros(dim), std::abs(lambda) * r);
        const Vector direct = project(set_scaled, x, rng);
        const Vector via = scaled(project(set, scaled(x, 1.0 / lambda), rng), lambda);
        for (std::size_t i = 0; i < via.size(); ++i) {
          if (std::abs(via[i] - direct[i]) > 1e-12) {
            ++bad;
            break;
          }
        }
      }
      c.check(bad == 0, std::to_string(bad) + "/1000 dilation cases exceeded 1e-12");
    }
    // Fejer monotonicity toward the origin and nonincreasing step norms on
    // generated convex instances, cyclic and averaged schemes.
    {
      RandomStream rng(1105);
      int fejer_bad = 0;
      int step_bad = 0;
      long fejer_cases = 0;
      long step_cases = 0;
      for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 6);
        const int N = 2 + static_cast<int>(rng.next_u64() % 4);
        const auto inst = gen_balls(n, N, 11000 + static_cast<std::uint64_t>(trial));
        const Vector x0 = gen_x0(n, 11100 + static_cast<std::uint64_t>(trial));
        for (const auto& op :
             {OperatorSpec::cyclic_dr(inst.sets), OperatorSpec::averaged_dr(inst.sets)}) {
          const auto trace = iterate(op, x0, 1e-11, 300, rng);
          for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k) {
            ++fejer_cases;
            if (norm(trace.iterates[k + 1]) > norm(trace.iterates[k]) + 1e-10) ++fejer_bad;
          }
          for (std::size_t k = 0; k + 1 < trace.step_norms.size(); ++k) {
            ++step_cases;
            if (trace.step_norms[k + 1] > trace.step_norms[k] + 1e-10) ++step_bad;
          }
        }
      }
      c.check(fejer_cases >= 1000, "only " + std::to_string(fejer_cases) + " Fejer cases sampled");
      c.check(step_cases >= 1000, "only " + std::to_string(step_cases) + " step-norm cases sampled");
      c.check(fejer_bad == 0, std::to_string(fejer_bad) + "/" + std::to_string(fejer_cases) +
                                  " Fejer monotonicity violations");
      c.check(step_bad == 0, std::to_string(step_bad) + "/" + std::to_string(step_cases) +
                                 " step-norm monotonicity violations");
    }
  });

  std::printf("%d/11 criteria passed\n", 11 - g_failed);
  return g_failed;
}
