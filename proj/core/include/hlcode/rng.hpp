#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

namespace hlcode {

/// Seedable ChaCha20 keystream generator.
///
/// A 64-bit seed is expanded to a 256-bit key with BLAKE2b, so a given seed
/// yields the same stream on every platform. Without a seed the key comes
/// from the OS entropy source. Satisfies UniformRandomBitGenerator, but use
/// uniform_below() and shuffle() rather than <random> distributions when
/// reproducibility across standard libraries matters.
class Rng {
 public:
  using result_type = std::uint64_t;

  /// Seeds from the system entropy source.
  Rng();
  explicit Rng(std::uint64_t seed);
  static Rng from_optional_seed(std::optional<std::uint64_t> seed);

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  bool coin() { return ((*this)() & 1U) != 0; }
  void fill(std::span<std::uint8_t> out);

  /// Unbiased Fisher-Yates shuffle.
  template <typename It>
  void shuffle(It first, It last) {
    const auto count = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = count; i > 1; --i) {
      const auto j = uniform_below(i);
      using std::swap;
      swap(first[static_cast<std::ptrdiff_t>(i - 1)], first[static_cast<std::ptrdiff_t>(j)]);
    }
  }

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint32_t block_counter_ = 0;
  std::uint32_t nonce_high_ = 0;
  std::array<std::uint8_t, 1024> buffer_{};
  std::size_t used_ = sizeof(buffer_);
};

}  // namespace hlcode
