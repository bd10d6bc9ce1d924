#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlcode/bitword.hpp"

namespace hlcode {

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length.
  explicit BitMatrix(std::vector<BitWord> rows);

  static BitMatrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const BitWord& row(std::size_t i) const { return rows_.at(i); }
  BitWord& row(std::size_t i) { return rows_.at(i); }
  const std::vector<BitWord>& row_words() const noexcept { return rows_; }
  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }

  std::size_t rank() const;
  /// nullopt when singular. Throws InvalidArgument if not square.
  std::optional<BitMatrix> inverse() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitWord> rows_;
};

/// XOR of the rows selected by the set bits of `selector`.
/// selector.size() must equal rows.size().
BitWord combine_rows(const BitWord& selector, const std::vector<BitWord>& rows);

/// v * M.
BitWord multiply(const BitWord& v, const BitMatrix& m);
/// A * B.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

}  // namespace hlcode
