#include "hlcode/bitword.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hlcode/byte_io.hpp"
#include "hlcode/errors.hpp"

namespace hlcode {

namespace {

std::size_t word_count(std::size_t len) { return (len + BitWord::kWordBits - 1) / BitWord::kWordBits; }

void check_same(const BitWord& a, const BitWord& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
}

}  // namespace

BitWord::BitWord(std::size_t len) : len_(len), words_(word_count(len), 0) {}

BitWord BitWord::ones(std::size_t len) {
  BitWord w(len);
  std::fill(w.words_.begin(), w.words_.end(), ~Word{0});
  if (const auto tail = len % kWordBits; tail != 0) w.words_.back() = (Word{1} << tail) - 1;
  return w;
}

BitWord BitWord::from_positions(std::size_t len, std::span<const std::size_t> positions) {
  BitWord w(len);
  for (auto p : positions) w.set(p);
  return w;
}

BitWord BitWord::from_positions(std::size_t len, std::initializer_list<std::size_t> positions) {
  return from_positions(len, std::span<const std::size_t>(positions.begin(), positions.size()));
}

BitWord BitWord::from_bits(std::span<const std::uint8_t> bits) {
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] != 0) w.set(i);
  return w;
}

void BitWord::check_index(std::size_t pos) const {
  if (pos >= len_)
    throw InvalidArgument("bit position " + std::to_string(pos) + " out of range for length " +
                          std::to_string(len_));
}

bool BitWord::test(std::size_t pos) const {
  check_index(pos);
  return ((words_[pos / kWordBits] >> (pos % kWordBits)) & 1U) != 0;
}

void BitWord::set(std::size_t pos, bool value) {
  check_index(pos);
  const Word bit = Word{1} << (pos % kWordBits);
  if (value)
    words_[pos / kWordBits] |= bit;
  else
    words_[pos / kWordBits] &= ~bit;
}

void BitWord::flip(std::size_t pos) {
  check_index(pos);
  words_[pos / kWordBits] ^= Word{1} << (pos % kWordBits);
}

void BitWord::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t BitWord::weight() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitWord::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> BitWord::positions() const {
  std::vector<std::size_t> out;
  out.reserve(weight());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (Word w = words_[wi]; w != 0; w &= w - 1)
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

std::size_t BitWord::lowest_set() const noexcept {
  for (std::size_t wi = 0; wi < words_.size(); ++wi)
    if (words_[wi] != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
  return len_;
}

BitWord& BitWord::operator^=(const BitWord& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitWord& BitWord::operator|=(const BitWord& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<std::uint8_t> BitWord::to_bytes() const {
  std::vector<std::uint8_t> out((len_ + 7) / 8);
  for (std::size_t b = 0; b < out.size(); ++b)
    out[b] = static_cast<std::uint8_t>(words_[b / 8] >> (8 * (b % 8)));
  return out;
}

BitWord BitWord::from_bytes(std::size_t len, std::span<const std::uint8_t> bytes) {
  if (bytes.size() != (len + 7) / 8)
    throw FormatError("bit vector body has " + std::to_string(bytes.size()) + " bytes, expected " +
                      std::to_string((len + 7) / 8));
  BitWord w(len);
  for (std::size_t b = 0; b < bytes.size(); ++b) w.words_[b / 8] |= Word{bytes[b]} << (8 * (b % 8));
  if (const auto tail = len % kWordBits; tail != 0 && (w.words_.back() >> tail) != 0)
    throw FormatError("bit vector has set bits past its length");
  return w;
}

void BitWord::serialize(ByteWriter& out) const {
  out.u64(len_);
  out.bytes(to_bytes());
}

BitWord BitWord::deserialize(ByteReader& in) {
  const auto len = in.u64();
  if (len > (std::uint64_t{1} << 40)) throw FormatError("implausible bit vector length");
  return from_bytes(static_cast<std::size_t>(len), in.bytes(static_cast<std::size_t>((len + 7) / 8)));
}

BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
BitWord operator|(BitWord a, const BitWord& b) { return a |= b; }
BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

BitWord xor_words(const BitWord& a, const BitWord& b) { return a ^ b; }

std::size_t and_popcount(const BitWord& a, const BitWord& b) {
  check_same(a, b);
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return total;
}

std::size_t weight(const BitWord& a) noexcept { return a.weight(); }

bool parity_under_mask(const BitWord& x, const BitWord& mask) {
  check_same(x, mask);
  const auto wx = x.words();
  const auto wm = mask.words();
  // popcount parity of the AND equals the parity of the XOR-folded AND
  BitWord::Word acc = 0;
  for (std::size_t i = 0; i < wx.size(); ++i) acc ^= wx[i] & wm[i];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace hlcode
