#pragma once

#include <cstdint>

namespace diffract {

/// 64-bit linear congruential generator shared by every seeded choice in the
/// library (random transversals, sampled associativity, bench inputs), so
/// results reproduce bit-exactly across implementations.
class Lcg {
public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  /// Advances the state and returns its high 32 bits.
  std::uint32_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// next() mod bound; bound must be positive.
  std::uint32_t below(std::uint32_t bound) { return next() % bound; }

  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

} // namespace diffract
