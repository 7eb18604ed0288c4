#include "ccopt/decomposition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ccopt {

void validate_decomposition(const Decomposition& d, int dimension) {
  if (d.fe_cost < 0) {
    throw std::invalid_argument("decomposition: fe_cost must be nonnegative");
  }
  std::vector<int> seen(dimension, 0);
  auto mark = [&](int idx) {
    if (idx < 0 || idx >= dimension) {
      throw std::invalid_argument("decomposition: variable index out of range");
    }
    if (seen[idx]++) {
      throw std::invalid_argument("decomposition: variable covered twice");
    }
  };
  for (int idx : d.singletons) {
    mark(idx);
  }
  for (const auto& g : d.groups) {
    if (g.size() < 2) {
      throw std::invalid_argument("decomposition: groups must have size >= 2");
    }
    for (int idx : g) {
      mark(idx);
    }
  }
  if (std::accumulate(seen.begin(), seen.end(), 0) != dimension) {
    throw std::invalid_argument("decomposition: partition has gaps");
  }
}

namespace {

Decomposition canonical_order(Decomposition d) {
  std::sort(d.singletons.begin(), d.singletons.end());
  for (auto& g : d.groups) {
    std::sort(g.begin(), g.end());
  }
  std::sort(d.groups.begin(), d.groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return d;
}

std::map<std::string, DecomposerFn>& registry() {
  static std::map<std::string, DecomposerFn> r;
  return r;
}

std::once_flag builtins_flag;

void ensure_builtins() {
  std::call_once(builtins_flag, [] {
    registry()["ideal"] = [](const Problem& p, EvalBudget&) { return ideal_decompose(p); };
    registry()["monolithic"] = [](const Problem& p, EvalBudget&) {
      Decomposition d;
      std::vector<int> all(p.dimension());
      std::iota(all.begin(), all.end(), 0);
      d.groups.push_back(std::move(all));
      return d;
    };
    registry()["all-singleton"] = [](const Problem& p, EvalBudget&) {
      Decomposition d;
      d.singletons.resize(p.dimension());
      std::iota(d.singletons.begin(), d.singletons.end(), 0);
      return d;
    };
  });
}

}  // namespace

Decomposition ideal_decompose(const Problem& problem) {
  if (!problem.has_structure()) {
    throw std::invalid_argument("ideal_decompose: problem carries no group-structure metadata");
  }
  Decomposition d;
  d.singletons = problem.structure().separable;
  d.groups = problem.structure().groups;
  d.fe_cost = 0;
  d = canonical_order(std::move(d));
  validate_decomposition(d, problem.dimension());
  return d;
}

void register_decomposer(const std::string& name, DecomposerFn fn) {
  ensure_builtins();
  registry()[name] = std::move(fn);
}

std::vector<std::string> registered_decomposers() {
  ensure_builtins();
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) {
    names.push_back(name);
  }
  return names;
}

Decomposition decompose(const std::string& name, const Problem& problem, EvalBudget& budget) {
  ensure_builtins();
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw std::invalid_argument("decompose: unknown decomposer '" + name + "'");
  }
  const std::int64_t before = budget.used();
  Decomposition d = canonical_order(it->second(problem, budget));
  d.fe_cost = budget.used() - before;
  validate_decomposition(d, problem.dimension());
  return d;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  return nlohmann::json{
      {"singletons", d.singletons}, {"groups", d.groups}, {"fe_cost", d.fe_cost}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  Decomposition d;
  d.singletons = j.at("singletons").get<std::vector<int>>();
  d.groups = j.at("groups").get<std::vector<std::vector<int>>>();
  d.fe_cost = j.at("fe_cost").get<std::int64_t>();
  return d;
}

}  // namespace ccopt
