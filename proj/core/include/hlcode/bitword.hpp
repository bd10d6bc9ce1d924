#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hlcode {

class ByteReader;
class ByteWriter;

/// Packed binary vector of fixed length.
///
/// Position i lives in bit (i % 64) of word (i / 64). Storage bits past
/// position size()-1 are always zero, so word-wise popcounts and equality
/// need no masking.
///
/// Codewords, error vectors and redundancy-relation masks all use this type;
/// a relation mask has bit p set iff component x_p takes part in the relation.
class BitWord {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitWord() = default;
  explicit BitWord(std::size_t len);

  static BitWord ones(std::size_t len);
  static BitWord from_positions(std::size_t len, std::span<const std::size_t> positions);
  static BitWord from_positions(std::size_t len, std::initializer_list<std::size_t> positions);
  /// `bits[i] != 0` sets position i.
  static BitWord from_bits(std::span<const std::uint8_t> bits);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  void flip(std::size_t pos);
  void clear() noexcept;

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  /// Positions of the set bits in increasing order.
  std::vector<std::size_t> positions() const;
  /// Lowest set position, or size() if none.
  std::size_t lowest_set() const noexcept;

  BitWord& operator^=(const BitWord& other);
  BitWord& operator|=(const BitWord& other);
  BitWord& operator&=(const BitWord& other);

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> mutable_words() noexcept { return words_; }

  /// Packed little-endian body of ceil(size/8) bytes (no length prefix).
  std::vector<std::uint8_t> to_bytes() const;
  static BitWord from_bytes(std::size_t len, std::span<const std::uint8_t> bytes);

  /// 8-byte LE bit length followed by the packed body.
  void serialize(ByteWriter& out) const;
  static BitWord deserialize(ByteReader& in);

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  void check_index(std::size_t pos) const;

  std::size_t len_ = 0;
  std::vector<Word> words_;
};

BitWord operator^(BitWord a, const BitWord& b);
BitWord operator|(BitWord a, const BitWord& b);
BitWord operator&(BitWord a, const BitWord& b);

/// Componentwise sum mod 2. Throws LengthMismatch.
BitWord xor_words(const BitWord& a, const BitWord& b);

/// Number of positions set in both words. Throws LengthMismatch.
std::size_t and_popcount(const BitWord& a, const BitWord& b);

std::size_t weight(const BitWord& a) noexcept;

/// Sum mod 2 of the components of x selected by mask: the value of the
/// redundancy relation `mask` evaluated on x. Throws LengthMismatch.
bool parity_under_mask(const BitWord& x, const BitWord& mask);

}  // namespace hlcode
