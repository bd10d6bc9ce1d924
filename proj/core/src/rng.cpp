#include "hlcode/rng.hpp"

#include <sodium.h>

#include <cstring>
#include <string_view>

#include "hlcode/errors.hpp"

namespace hlcode {

namespace {

void ensure_sodium() {
  if (sodium_init() < 0) throw Error("libsodium initialisation failed");
}

constexpr std::string_view kDomain = "hlcode-rng-v1";
constexpr std::size_t kChaChaBlockBytes = 64;

}  // namespace

Rng::Rng() {
  ensure_sodium();
  randombytes_buf(key_.data(), key_.size());
}

Rng::Rng(std::uint64_t seed) {
  ensure_sodium();
  std::array<std::uint8_t, 8> seed_bytes{};
  for (int i = 0; i < 8; ++i) seed_bytes[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, key_.size());
  crypto_generichash_update(&st, reinterpret_cast<const unsigned char*>(kDomain.data()), kDomain.size());
  crypto_generichash_update(&st, seed_bytes.data(), seed_bytes.size());
  crypto_generichash_final(&st, key_.data(), key_.size());
}

Rng Rng::from_optional_seed(std::optional<std::uint64_t> seed) { return seed ? Rng(*seed) : Rng(); }

void Rng::refill() {
  static_assert(sizeof(buffer_) % kChaChaBlockBytes == 0);
  constexpr auto blocks = static_cast<std::uint32_t>(sizeof(buffer_) / kChaChaBlockBytes);
  std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  for (int i = 0; i < 4; ++i) nonce[i] = static_cast<std::uint8_t>(nonce_high_ >> (8 * i));
  buffer_.fill(0);
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), nonce.data(), block_counter_,
                                     key_.data());
  if (block_counter_ > UINT32_MAX - blocks) {
    block_counter_ = 0;
    ++nonce_high_;
  } else {
    block_counter_ += blocks;
  }
  used_ = 0;
}

Rng::result_type Rng::operator()() {
  if (used_ + 8 > buffer_.size()) refill();
  result_type v = 0;
  for (int i = 0; i < 8; ++i) v |= result_type{buffer_[used_ + i]} << (8 * i);
  used_ += 8;
  return v;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: bound must be positive");
  // reject the top partial interval so every residue is equally likely
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  for (;;) {
    const auto v = (*this)();
    if (v <= limit) return v % bound;
  }
}

void Rng::fill(std::span<std::uint8_t> out) {
  for (auto& b : out) {
    if (used_ >= buffer_.size()) refill();
    b = buffer_[used_++];
  }
}

}  // namespace hlcode
