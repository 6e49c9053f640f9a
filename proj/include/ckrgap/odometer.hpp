#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ckrgap/rational.hpp"

namespace ckrgap {

/// Mixed-radix counter over per-position option lists. Position 0 is the
/// most significant digit, the last position varies fastest; this is the
/// enumeration order all exhaustive searches use.
template <class Value>
class Odometer {
 public:
  explicit Odometer(std::vector<std::vector<Value>> options) : options_(std::move(options)) {
    for (const auto& opt : options_) {
      if (opt.empty()) invalid_parameter("odometer position without options");
    }
    digits_.assign(options_.size(), 0);
    values_.resize(options_.size());
    for (std::size_t p = 0; p < options_.size(); ++p) values_[p] = options_[p][0];
  }

  /// Number of configurations, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept {
    std::uint64_t total = 1;
    for (const auto& opt : options_) {
      if (total > std::numeric_limits<std::uint64_t>::max() / opt.size()) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      total *= opt.size();
    }
    return total;
  }

  std::span<const Value> values() const noexcept { return values_; }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  const std::vector<std::vector<Value>>& options() const noexcept { return options_; }

  /// Pins position p to option index d (used to split work on a digit).
  void fix(std::size_t p, std::uint32_t d) {
    options_[p] = {options_[p][d]};
    digits_[p] = 0;
    values_[p] = options_[p][0];
  }

  /// Advances to the next configuration. Returns the most significant
  /// position that changed, or -1 after the last configuration (the counter
  /// then wraps to all zeros). Every position at or after the returned one
  /// may have changed.
  long advance() noexcept {
    for (std::size_t p = options_.size(); p-- > 0;) {
      if (++digits_[p] < options_[p].size()) {
        values_[p] = options_[p][digits_[p]];
        return static_cast<long>(p);
      }
      digits_[p] = 0;
      values_[p] = options_[p][0];
    }
    return -1;
  }

 private:
  std::vector<std::vector<Value>> options_;
  std::vector<std::uint32_t> digits_;
  std::vector<Value> values_;
};

}  // namespace ckrgap
