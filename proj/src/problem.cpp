#include "ccopt/problem.hpp"

#include <stdexcept>
#include <string>

namespace ccopt {

Problem::Problem(Objective fn, Vector lower, Vector upper,
                 std::optional<GroupStructure> structure)
    : fn_(std::move(fn)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      structure_(std::move(structure)) {
  if (lower_.size() != upper_.size() || lower_.size() == 0) {
    throw std::invalid_argument("problem: bound vectors must be non-empty and of equal length");
  }
  for (int i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw std::invalid_argument("problem: lower bound must be below upper bound");
    }
  }
}

const GroupStructure& Problem::structure() const {
  if (!structure_) {
    throw std::logic_error("problem: group-structure metadata absent");
  }
  return *structure_;
}

Fitness Problem::evaluate(const Vector& x) const {
  if (x.size() != lower_.size()) {
    throw std::invalid_argument("evaluate: expected dimension " +
                                std::to_string(lower_.size()) + ", got " +
                                std::to_string(x.size()));
  }
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] < lower_[i] || x[i] > upper_[i]) {
      throw std::domain_error("evaluate: coordinate " + std::to_string(i) +
                              " outside bounds");
    }
  }
  return fn_(x);
}

}  // namespace ccopt
