#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace ccopt {

enum class Phase {
  Decomposition,
  Context,
  PrSearch,
  GroupInit,
  Generations,
  Assemble,
};

inline constexpr int kNumPhases = 6;

std::string to_string(Phase p);

// Monotone counter of real evaluations; the run's termination condition.
class EvalBudget {
 public:
  explicit EvalBudget(std::int64_t max_fes);

  std::int64_t max_fes() const { return max_fes_; }
  std::int64_t used() const { return used_; }
  std::int64_t remaining() const { return max_fes_ - used_; }
  bool can_afford(std::int64_t n) const { return n <= remaining(); }

  // Callers must check affordability first; overdraft is a programming error.
  void charge(Phase phase, std::int64_t n = 1);

  std::int64_t used_in(Phase phase) const {
    return by_phase_[static_cast<int>(phase)];
  }
  const std::array<std::int64_t, kNumPhases>& breakdown() const { return by_phase_; }

 private:
  std::int64_t max_fes_;
  std::int64_t used_ = 0;
  std::array<std::int64_t, kNumPhases> by_phase_{};
};

}  // namespace ccopt
