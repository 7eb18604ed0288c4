#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ccopt/problem.hpp"
#include "ccopt/types.hpp"

namespace ccopt {

enum class BenchmarkId {
  F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13,
};

BenchmarkId parse_benchmark_id(const std::string& name);
std::string to_string(BenchmarkId id);

enum class BaseFn { Elliptic, Rastrigin, Ackley, Schwefel12, Rosenbrock, Sphere };

std::string to_string(BaseFn fn);

// Base test functions on a deviation vector z (z = 0 at the optimum; the
// Rosenbrock deviation is pre-offset so that convention holds for it too).
Fitness base_eval(BaseFn fn, const double* z, int n, const double* elliptic_weights);

// Weights (1e6)^((i-1)/(n-1)) giving the elliptic function its 1e6 condition number.
Vector elliptic_weights(int n);

// Fully instantiated benchmark: everything needed to evaluate, derived
// deterministically from (id, dimension, group_size, seed).
struct BenchmarkSpec {
  BenchmarkId id = BenchmarkId::F1;
  int dimension = 1000;
  int group_size = 50;
  std::uint64_t seed = 0;

  double lower = 0.0;
  double upper = 0.0;
  Vector shift;                            // global optimum, f(shift) == 0
  std::vector<std::vector<int>> groups;    // nonseparable index sets, permutation order
  std::vector<int> separable;              // remaining indices, permutation order
  std::vector<Matrix> rotations;           // parallel to groups; 0x0 when unrotated
  BaseFn group_base = BaseFn::Elliptic;
  BaseFn separable_base = BaseFn::Elliptic;
  double group_weight = 1.0;               // 1e6 for the single-group ids
  Vector sep_elliptic_weights;             // cached when separable_base is elliptic
  Vector group_elliptic_weights;
};

BenchmarkSpec build_spec(BenchmarkId id, int dimension, int group_size, std::uint64_t seed);

Fitness evaluate_spec(const BenchmarkSpec& spec, const Vector& x);

// Problem wrapper with group-structure metadata attached.
Problem make_problem(const BenchmarkSpec& spec);
Problem build_benchmark(BenchmarkId id, int dimension, int group_size, std::uint64_t seed);

// Reproducibility record: (id, dimension, group_size, seed, bounds).
nlohmann::json benchmark_to_json(const BenchmarkSpec& spec);
BenchmarkSpec benchmark_from_json(const nlohmann::json& j);

}  // namespace ccopt
