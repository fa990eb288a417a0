#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>

#include "bottcert/errors.hpp"

namespace bottcert {

/// Resource limits shared across one computation.  Checks are sprinkled
/// through the weight-multiset loops; hitting a cap raises BudgetExceeded
/// with the phase that was running, so partial results are never returned.
class Budget {
public:
  Budget() = default;
  Budget(double seconds, uint64_t max_weights) : max_weights_(max_weights) {
    if (seconds > 0)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
    has_deadline_ = seconds > 0;
  }

  void check_time(const char* phase) const {
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded(std::string("wall-clock budget exhausted during ") + phase);
  }

  void check_weights(uint64_t count, const char* phase) const {
    if (max_weights_ > 0 && count > max_weights_)
      throw BudgetExceeded(std::string("distinct-weight budget exceeded during ") + phase +
                           " (needed " + std::to_string(count) + ", cap " +
                           std::to_string(max_weights_) + ")");
  }

  void check(uint64_t count, const char* phase) const {
    check_time(phase);
    check_weights(count, phase);
  }

private:
  std::chrono::steady_clock::time_point deadline_{};
  bool has_deadline_ = false;
  uint64_t max_weights_ = 0; // 0 = unlimited
};

inline const Budget& unlimited_budget() {
  static const Budget b;
  return b;
}

} // namespace bottcert
