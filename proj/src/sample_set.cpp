#include "ccopt/sample_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccopt {

void SampleSet::add(Vector x, double value) {
  if (x.size() != dim_) {
    throw std::invalid_argument("sample_set: point dimension mismatch");
  }
  points_.push_back(std::move(x));
  values_.push_back(value);
  ages_.push_back(next_age_++);
}

void SampleSet::add1d(double x, double value) {
  Vector v(1);
  v[0] = x;
  add(std::move(v), value);
}

void SampleSet::replace(int i, Vector x, double value) {
  if (x.size() != dim_) {
    throw std::invalid_argument("sample_set: point dimension mismatch");
  }
  points_[i] = std::move(x);
  values_[i] = value;
  ages_[i] = next_age_++;
}

std::vector<int> SampleSet::oldest(int q) const {
  std::vector<int> idx(points_.size());
  std::iota(idx.begin(), idx.end(), 0);
  q = std::min<int>(q, static_cast<int>(idx.size()));
  std::partial_sort(idx.begin(), idx.begin() + q, idx.end(),
                    [&](int a, int b) { return ages_[a] < ages_[b]; });
  idx.resize(q);
  return idx;
}

void SampleSet::shift_values(double delta) {
  for (double& v : values_) {
    v -= delta;
  }
}

}  // namespace ccopt
