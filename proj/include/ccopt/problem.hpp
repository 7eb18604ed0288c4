#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ccopt/types.hpp"

namespace ccopt {

// True variable-interaction structure, present for benchmark problems and
// absent for genuinely black-box ones. `separable` is ascending; each group is
// ascending and groups are ordered by their smallest member.
struct GroupStructure {
  std::vector<int> separable;
  std::vector<std::vector<int>> groups;
};

// A black-box minimization problem over a box domain. Instances are immutable
// after construction; evaluate is pure and reentrant.
class Problem {
 public:
  using Objective = std::function<Fitness(const Vector&)>;

  Problem(Objective fn, Vector lower, Vector upper,
          std::optional<GroupStructure> structure = std::nullopt);

  int dimension() const { return static_cast<int>(lower_.size()); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

  bool has_structure() const { return structure_.has_value(); }
  const GroupStructure& structure() const;

  // Throws std::invalid_argument on dimension mismatch and std::domain_error
  // when any coordinate falls outside the box; clamping is the optimizer's job.
  Fitness evaluate(const Vector& x) const;

 private:
  Objective fn_;
  Vector lower_;
  Vector upper_;
  std::optional<GroupStructure> structure_;
};

// A complete candidate solution with its cached real fitness.
struct ContextVector {
  Vector values;
  Fitness fitness = 0;
};

}  // namespace ccopt
