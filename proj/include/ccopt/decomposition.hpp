#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ccopt/budget.hpp"
#include "ccopt/problem.hpp"

namespace ccopt {

// Partition of the decision variables into 1-D separable subproblems and
// nonseparable groups. Singletons ascend; groups are ordered by smallest
// member, fixing the round-robin schedule.
struct Decomposition {
  std::vector<int> singletons;
  std::vector<std::vector<int>> groups;
  std::int64_t fe_cost = 0;
};

// Throws std::invalid_argument unless the partition covers {0..dimension-1}
// exactly, every group has size >= 2, and fe_cost >= 0.
void validate_decomposition(const Decomposition& d, int dimension);

// Zero-cost decomposition from benchmark metadata; throws when metadata is absent.
Decomposition ideal_decompose(const Problem& problem);

using DecomposerFn = std::function<Decomposition(const Problem&, EvalBudget&)>;

// The registry is populated at startup and read-only afterwards. Built-ins:
// "ideal", "monolithic", "all-singleton".
void register_decomposer(const std::string& name, DecomposerFn fn);
std::vector<std::string> registered_decomposers();

// Runs the named decomposer; its real evaluations are charged to `budget`
// (Phase::Decomposition) and reported as fe_cost. Output is validated.
Decomposition decompose(const std::string& name, const Problem& problem, EvalBudget& budget);

nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace ccopt
