#include "ccopt/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "ccopt/rng.hpp"

namespace ccopt {

namespace {

// Compensated accumulation; keeps the suffix rounding of nearly identical
// sums (full evaluation vs. one-coordinate splice) at the ulp level.
struct Kahan {
  long double sum = 0.0L;
  long double c = 0.0L;
  void add(long double v) {
    const long double y = v - c;
    const long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

Fitness f_elliptic(const double* z, int n, const double* w) {
  Kahan k;
  for (int i = 0; i < n; ++i) {
    k.add(static_cast<long double>(w[i]) * z[i] * z[i]);
  }
  return k.sum;
}

Fitness f_sphere(const double* z, int n) {
  Kahan k;
  for (int i = 0; i < n; ++i) {
    k.add(static_cast<long double>(z[i]) * z[i]);
  }
  return k.sum;
}

Fitness f_rastrigin(const double* z, int n) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  Kahan k;
  for (int i = 0; i < n; ++i) {
    const long double zi = z[i];
    k.add(zi * zi - 10.0L * std::cos(two_pi * zi) + 10.0L);
  }
  return k.sum;
}

Fitness f_ackley(const double* z, int n) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  Kahan sq, cs;
  for (int i = 0; i < n; ++i) {
    const long double zi = z[i];
    sq.add(zi * zi);
    cs.add(std::cos(two_pi * zi));
  }
  const long double nn = n;
  return -20.0L * std::exp(-0.2L * std::sqrt(sq.sum / nn)) -
         std::exp(cs.sum / nn) + 20.0L + std::numbers::e_v<long double>;
}

Fitness f_schwefel12(const double* z, int n) {
  Kahan prefix, total;
  for (int i = 0; i < n; ++i) {
    prefix.add(z[i]);
    total.add(prefix.sum * prefix.sum);
  }
  return total.sum;
}

// z is pre-offset: z = 1 at the optimum.
Fitness f_rosenbrock(const double* z, int n) {
  Kahan k;
  for (int i = 0; i + 1 < n; ++i) {
    const long double a = static_cast<long double>(z[i]) * z[i] - z[i + 1];
    const long double b = z[i] - 1.0L;
    k.add(100.0L * a * a + b * b);
  }
  return k.sum;
}

struct IdInfo {
  int n_groups;            // 0 = fully separable
  BaseFn group_base;
  BaseFn separable_base;
  bool rotated;
  double group_weight;
  double lower, upper;
};

IdInfo id_info(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::F1:  return {0, BaseFn::Elliptic, BaseFn::Elliptic, false, 1.0, -100, 100};
    case BenchmarkId::F2:  return {0, BaseFn::Rastrigin, BaseFn::Rastrigin, false, 1.0, -5, 5};
    case BenchmarkId::F3:  return {0, BaseFn::Ackley, BaseFn::Ackley, false, 1.0, -32, 32};
    case BenchmarkId::F4:  return {1, BaseFn::Elliptic, BaseFn::Elliptic, true, 1e6, -100, 100};
    case BenchmarkId::F5:  return {1, BaseFn::Rastrigin, BaseFn::Rastrigin, true, 1e6, -5, 5};
    case BenchmarkId::F6:  return {1, BaseFn::Ackley, BaseFn::Ackley, true, 1e6, -32, 32};
    case BenchmarkId::F7:  return {1, BaseFn::Schwefel12, BaseFn::Sphere, false, 1e6, -100, 100};
    case BenchmarkId::F8:  return {1, BaseFn::Rosenbrock, BaseFn::Sphere, false, 1e6, -100, 100};
    case BenchmarkId::F9:  return {10, BaseFn::Elliptic, BaseFn::Elliptic, true, 1.0, -100, 100};
    case BenchmarkId::F10: return {10, BaseFn::Rastrigin, BaseFn::Rastrigin, true, 1.0, -5, 5};
    case BenchmarkId::F11: return {10, BaseFn::Ackley, BaseFn::Ackley, true, 1.0, -32, 32};
    case BenchmarkId::F12: return {10, BaseFn::Schwefel12, BaseFn::Sphere, false, 1.0, -100, 100};
    case BenchmarkId::F13: return {10, BaseFn::Rosenbrock, BaseFn::Sphere, false, 1.0, -100, 100};
  }
  throw std::invalid_argument("unknown benchmark id");
}

Matrix random_rotation(int m, Rng& rng) {
  Matrix g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      g(i, j) = rng.normal(0.0, 1.0);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ();
}

}  // namespace

BenchmarkId parse_benchmark_id(const std::string& name) {
  for (int i = 0; i < 13; ++i) {
    if (name == "F" + std::to_string(i + 1)) {
      return static_cast<BenchmarkId>(i);
    }
  }
  throw std::invalid_argument("unknown benchmark id: " + name);
}

std::string to_string(BenchmarkId id) {
  return "F" + std::to_string(static_cast<int>(id) + 1);
}

std::string to_string(BaseFn fn) {
  switch (fn) {
    case BaseFn::Elliptic:   return "elliptic";
    case BaseFn::Rastrigin:  return "rastrigin";
    case BaseFn::Ackley:     return "ackley";
    case BaseFn::Schwefel12: return "schwefel1.2";
    case BaseFn::Rosenbrock: return "rosenbrock";
    case BaseFn::Sphere:     return "sphere";
  }
  return "?";
}

Vector elliptic_weights(int n) {
  Vector w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  for (int i = 0; i < n; ++i) {
    w[i] = std::pow(10.0, 6.0 * i / (n - 1));
  }
  return w;
}

Fitness base_eval(BaseFn fn, const double* z, int n, const double* w) {
  switch (fn) {
    case BaseFn::Elliptic:   return f_elliptic(z, n, w);
    case BaseFn::Rastrigin:  return f_rastrigin(z, n);
    case BaseFn::Ackley:     return f_ackley(z, n);
    case BaseFn::Schwefel12: return f_schwefel12(z, n);
    case BaseFn::Rosenbrock: return f_rosenbrock(z, n);
    case BaseFn::Sphere:     return f_sphere(z, n);
  }
  throw std::invalid_argument("unknown base function");
}

BenchmarkSpec build_spec(BenchmarkId id, int dimension, int group_size, std::uint64_t seed) {
  const IdInfo info = id_info(id);
  if (dimension < 1 || group_size < 1) {
    throw std::invalid_argument("benchmark: dimension and group_size must be positive");
  }
  if (info.n_groups > 0) {
    if (group_size < 2) {
      throw std::invalid_argument("benchmark: nonseparable groups need group_size >= 2");
    }
    const int needed = std::max(2 * group_size, info.n_groups * group_size);
    if (dimension < needed) {
      throw std::invalid_argument("benchmark: dimension " + std::to_string(dimension) +
                                  " incompatible with group_size " + std::to_string(group_size) +
                                  " for " + to_string(id));
    }
  }

  BenchmarkSpec spec;
  spec.id = id;
  spec.dimension = dimension;
  spec.group_size = group_size;
  spec.seed = seed;
  spec.lower = info.lower;
  spec.upper = info.upper;
  spec.group_base = info.group_base;
  spec.separable_base = info.separable_base;
  spec.group_weight = info.group_weight;

  Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);

  // Shift inside the central 80% of the box.
  const double margin = 0.1 * (info.upper - info.lower);
  spec.shift.resize(dimension);
  for (int i = 0; i < dimension; ++i) {
    spec.shift[i] = rng.uniform(info.lower + margin, info.upper - margin);
  }

  if (info.n_groups > 0) {
    std::vector<int> perm(dimension);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = dimension - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
    }
    for (int g = 0; g < info.n_groups; ++g) {
      spec.groups.emplace_back(perm.begin() + g * group_size,
                               perm.begin() + (g + 1) * group_size);
      spec.rotations.push_back(info.rotated ? random_rotation(group_size, rng) : Matrix());
    }
    spec.separable.assign(perm.begin() + info.n_groups * group_size, perm.end());
    if (info.group_base == BaseFn::Elliptic) {
      spec.group_elliptic_weights = elliptic_weights(group_size);
    }
  } else {
    spec.separable.resize(dimension);
    std::iota(spec.separable.begin(), spec.separable.end(), 0);
  }
  if (info.separable_base == BaseFn::Elliptic && !spec.separable.empty()) {
    spec.sep_elliptic_weights = elliptic_weights(static_cast<int>(spec.separable.size()));
  }
  return spec;
}

Fitness evaluate_spec(const BenchmarkSpec& spec, const Vector& x) {
  const int m = spec.group_size;
  Kahan total;
  if (!spec.groups.empty()) {
    Vector z(m), y(m);
    for (std::size_t g = 0; g < spec.groups.size(); ++g) {
      const auto& idx = spec.groups[g];
      for (int j = 0; j < m; ++j) {
        z[j] = x[idx[j]] - spec.shift[idx[j]];
      }
      if (spec.group_base == BaseFn::Rosenbrock) {
        z.array() += 1.0;
      }
      const double* zp = z.data();
      if (spec.rotations[g].size() > 0) {
        y.noalias() = spec.rotations[g] * z;
        zp = y.data();
      }
      total.add(static_cast<long double>(spec.group_weight) *
                base_eval(spec.group_base, zp, m, spec.group_elliptic_weights.data()));
    }
  }
  if (!spec.separable.empty()) {
    const int n = static_cast<int>(spec.separable.size());
    Vector z(n);
    for (int j = 0; j < n; ++j) {
      z[j] = x[spec.separable[j]] - spec.shift[spec.separable[j]];
    }
    total.add(base_eval(spec.separable_base, z.data(), n, spec.sep_elliptic_weights.data()));
  }
  return total.sum;
}

Problem make_problem(const BenchmarkSpec& spec) {
  auto shared = std::make_shared<const BenchmarkSpec>(spec);
  GroupStructure structure;
  structure.separable = shared->separable;
  std::sort(structure.separable.begin(), structure.separable.end());
  for (const auto& g : shared->groups) {
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    structure.groups.push_back(std::move(sorted));
  }
  std::sort(structure.groups.begin(), structure.groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  const int d = shared->dimension;
  return Problem(
      [shared](const Vector& x) { return evaluate_spec(*shared, x); },
      Vector::Constant(d, shared->lower), Vector::Constant(d, shared->upper),
      std::move(structure));
}

Problem build_benchmark(BenchmarkId id, int dimension, int group_size, std::uint64_t seed) {
  return make_problem(build_spec(id, dimension, group_size, seed));
}

nlohmann::json benchmark_to_json(const BenchmarkSpec& spec) {
  return nlohmann::json{{"id", to_string(spec.id)},
                        {"dimension", spec.dimension},
                        {"group_size", spec.group_size},
                        {"seed", spec.seed},
                        {"bounds", {spec.lower, spec.upper}}};
}

BenchmarkSpec benchmark_from_json(const nlohmann::json& j) {
  auto spec = build_spec(parse_benchmark_id(j.at("id").get<std::string>()),
                         j.at("dimension").get<int>(), j.at("group_size").get<int>(),
                         j.at("seed").get<std::uint64_t>());
  if (j.contains("bounds")) {
    const auto b = j.at("bounds");
    if (b.at(0).get<double>() != spec.lower || b.at(1).get<double>() != spec.upper) {
      throw std::invalid_argument("benchmark json: bounds do not match id " + to_string(spec.id));
    }
  }
  return spec;
}

}  // namespace ccopt
