#include "ccopt/budget.hpp"

#include <stdexcept>

namespace ccopt {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Decomposition: return "decomposition";
    case Phase::Context:       return "context";
    case Phase::PrSearch:      return "pr_search";
    case Phase::GroupInit:     return "group_init";
    case Phase::Generations:   return "generations";
    case Phase::Assemble:      return "assemble";
  }
  return "?";
}

EvalBudget::EvalBudget(std::int64_t max_fes) : max_fes_(max_fes) {
  if (max_fes < 0) {
    throw std::invalid_argument("budget: max_fes must be nonnegative");
  }
}

void EvalBudget::charge(Phase phase, std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("budget: cannot charge a negative count");
  }
  if (used_ + n > max_fes_) {
    throw std::logic_error("budget: overdraft in phase " + to_string(phase));
  }
  used_ += n;
  by_phase_[static_cast<int>(phase)] += n;
}

}  // namespace ccopt
