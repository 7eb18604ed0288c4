#pragma once

#include <cstdint>
#include <vector>

#include "ccopt/types.hpp"

namespace ccopt {

// Real-evaluated sub-solutions with their fitness-improvement values and
// insertion-order age stamps (strictly increasing).
class SampleSet {
 public:
  explicit SampleSet(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }

  void add(Vector x, double value);
  void add1d(double x, double value);

  const Vector& point(int i) const { return points_[i]; }
  double value(int i) const { return values_[i]; }
  std::int64_t age(int i) const { return ages_[i]; }

  void set_value(int i, double v) { values_[i] = v; }

  // Overwrites entry i with a fresh age stamp.
  void replace(int i, Vector x, double value);

  // Indices of the q entries with the smallest age stamps, oldest first.
  std::vector<int> oldest(int q) const;

  // Rebase: subtract delta from every stored value.
  void shift_values(double delta);

  const std::vector<double>& values() const { return values_; }

 private:
  int dim_;
  std::vector<Vector> points_;
  std::vector<double> values_;
  std::vector<std::int64_t> ages_;
  std::int64_t next_age_ = 0;
};

}  // namespace ccopt
