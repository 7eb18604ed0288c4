#pragma once

#include <Eigen/Core>

namespace ccopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Fitness values are carried in extended precision. Sub-solution improvements
// are differences of two full-dimension evaluations whose magnitude can reach
// 1e11+, so the difference must survive the subtraction with more headroom
// than a double provides.
using Fitness = long double;

struct Interval {
  double lb;
  double ub;
};

}  // namespace ccopt
