#include "hlcode/gf2_matrix.hpp"

#include <utility>

#include "hlcode/errors.hpp"

namespace hlcode {

namespace {

inline bool bit_at(const BitWord& w, std::size_t pos) {
  return ((w.words()[pos / BitWord::kWordBits] >> (pos % BitWord::kWordBits)) & 1U) != 0;
}

/// Forward elimination in place; returns the rank. When `companion` is
/// non-null, every row operation is mirrored on it (Gauss-Jordan).
std::size_t eliminate(std::vector<BitWord>& rows, std::size_t cols, std::vector<BitWord>* companion, bool reduce) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !bit_at(rows[pivot], col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    if (companion) std::swap((*companion)[rank], (*companion)[pivot]);
    for (std::size_t r = reduce ? 0 : rank + 1; r < rows.size(); ++r) {
      if (r == rank || !bit_at(rows[r], col)) continue;
      rows[r] ^= rows[rank];
      if (companion) (*companion)[r] ^= (*companion)[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitWord(cols)) {}

BitMatrix::BitMatrix(std::vector<BitWord> rows) : cols_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw LengthMismatch(r.size(), cols_);
}

BitMatrix BitMatrix::identity(std::size_t size) {
  BitMatrix id(size, size);
  for (std::size_t i = 0; i < size; ++i) id.rows_[i].set(i);
  return id;
}

std::size_t BitMatrix::rank() const {
  auto work = rows_;
  return eliminate(work, cols_, nullptr, false);
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows() != cols_) throw InvalidArgument("inverse of a non-square matrix");
  auto work = rows_;
  auto inv = identity(cols_).rows_;
  if (eliminate(work, cols_, &inv, true) != cols_) return std::nullopt;
  return BitMatrix(std::move(inv));
}

BitWord combine_rows(const BitWord& selector, const std::vector<BitWord>& rows) {
  if (selector.size() != rows.size()) throw LengthMismatch(selector.size(), rows.size());
  if (rows.empty()) return BitWord();
  BitWord acc(rows.front().size());
  for (auto i : selector.positions()) acc ^= rows[i];
  return acc;
}

BitWord multiply(const BitWord& v, const BitMatrix& m) {
  if (v.size() != m.rows()) throw LengthMismatch(v.size(), m.rows());
  if (m.rows() == 0) return BitWord(m.cols());
  return combine_rows(v, m.row_words());
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw LengthMismatch(a.cols(), b.rows());
  std::vector<BitWord> out;
  out.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(multiply(a.row(r), b));
  if (out.empty()) return BitMatrix(0, b.cols());
  return BitMatrix(std::move(out));
}

}  // namespace hlcode
