#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlcode/params.hpp"

namespace hlcode {

/// Codeword position in {0 .. n-1}.
using Position = std::uint32_t;

/// Strictly increasing tuple of indices from {1..m}. Index j refers to the
/// vector v_j, whose entry at position p is bit (j-1) of p.
class IndexTuple {
 public:
  IndexTuple() = default;
  /// Throws InvalidArgument unless `indices` is strictly increasing and >= 1.
  explicit IndexTuple(std::vector<unsigned> indices);
  IndexTuple(std::initializer_list<unsigned> indices);

  std::size_t degree() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::span<const unsigned> indices() const noexcept { return indices_; }
  unsigned operator[](std::size_t i) const { return indices_.at(i); }
  unsigned back() const { return indices_.back(); }

  /// Bit (j-1) set for each index j.
  std::uint32_t bit_mask() const noexcept;
  static IndexTuple from_bit_mask(std::uint32_t mask);
  /// Complement within {1..m}.
  IndexTuple complement(unsigned m) const;
  /// Throws InvalidArgument if an index exceeds m.
  void check_range(unsigned m) const;

  std::string to_string() const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<unsigned> indices_;
};

/// Ordered maximal complement-free set of (m/2)-tuples. Order is insertion
/// order; element i labels generator row fixed_rows() + i.
class ComplementFreeSet {
 public:
  /// Throws InvalidArgument unless the tuples have degree m/2, are pairwise
  /// distinct, contain no complementary pair and number (1/2) C(m, m/2).
  ComplementFreeSet(unsigned m, std::vector<IndexTuple> elements);

  unsigned m() const noexcept { return m_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const IndexTuple& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<IndexTuple>& elements() const noexcept { return elements_; }

  friend bool operator==(const ComplementFreeSet&, const ComplementFreeSet&) = default;

 private:
  unsigned m_;
  std::vector<IndexTuple> elements_;
};

/// phi(i, k): flip the k-th least significant bit of i (k is 1-based).
/// Throws InvalidArgument unless 1 <= k <= m and i < 2^m.
Position change_bit(Position i, unsigned k, unsigned m);

/// Phi(i, ks): flip every bit (k-1) for k in ks.
Position change_bits(Position i, const IndexTuple& ks, unsigned m);

struct CombIndex {
  std::size_t lambda;  ///< 0-based rank inside the degree block
  unsigned nu;         ///< degree block, the tuple has degree nu + 1

  friend bool operator==(const CombIndex&, const CombIndex&) = default;
};

/// nu(i) and lambda(i) for generator row i >= 1. Throws for row 0.
CombIndex row_to_comb_index(std::size_t row, unsigned m);

/// The index-th (0-based) tuple of {1..m} choose degree in lexicographic order.
IndexTuple combination_at(unsigned m, unsigned degree, std::uint64_t index);

/// Every tuple of {1..m} choose degree, lexicographic.
std::vector<IndexTuple> all_combinations(unsigned m, unsigned degree);

/// f(i): the indices j whose product of v_j forms row i. Rows in the
/// complement-free region need `yset`; throws InvalidArgument when it is
/// absent there, or when row is 0 or >= k.
IndexTuple row_to_comb(std::size_t row, unsigned m, const ComplementFreeSet* yset);

enum class RowSource { constant, single, combination, y_set };

struct RowMeta {
  std::size_t row;
  std::optional<IndexTuple> tuple;
  RowSource source;
};

RowMeta row_meta(std::size_t row, unsigned m, const ComplementFreeSet* yset);

}  // namespace hlcode
