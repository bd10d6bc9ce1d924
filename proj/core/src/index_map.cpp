#include "hlcode/index_map.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hlcode/errors.hpp"

namespace hlcode {

IndexTuple::IndexTuple(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] == 0 || indices_[i] > 32) throw InvalidArgument("tuple index must be in 1..32");
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw InvalidArgument("tuple indices must be strictly increasing");
  }
}

IndexTuple::IndexTuple(std::initializer_list<unsigned> indices) : IndexTuple(std::vector<unsigned>(indices)) {}

std::uint32_t IndexTuple::bit_mask() const noexcept {
  std::uint32_t mask = 0;
  for (auto j : indices_) mask |= std::uint32_t{1} << (j - 1);
  return mask;
}

IndexTuple IndexTuple::from_bit_mask(std::uint32_t mask) {
  std::vector<unsigned> out;
  for (unsigned b = 0; b < 32; ++b)
    if ((mask >> b) & 1U) out.push_back(b + 1);
  return IndexTuple(std::move(out));
}

IndexTuple IndexTuple::complement(unsigned m) const {
  check_range(m);
  const std::uint32_t all = m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  return from_bit_mask(all & ~bit_mask());
}

void IndexTuple::check_range(unsigned m) const {
  if (!indices_.empty() && indices_.back() > m)
    throw InvalidArgument("tuple " + to_string() + " has an index above m = " + std::to_string(m));
}

std::string IndexTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(indices_[i]);
  }
  return s + ")";
}

ComplementFreeSet::ComplementFreeSet(unsigned m, std::vector<IndexTuple> elements)
    : m_(m), elements_(std::move(elements)) {
  const CodeParams params(m);
  if (elements_.size() != params.yset_size())
    throw InvalidArgument("complement-free set for m = " + std::to_string(m) + " must have " +
                          std::to_string(params.yset_size()) + " elements, got " + std::to_string(elements_.size()));
  std::set<std::uint32_t> seen;
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;
  for (const auto& e : elements_) {
    e.check_range(m);
    if (e.degree() != m / 2) throw InvalidArgument("complement-free set element " + e.to_string() + " has wrong degree");
    if (!seen.insert(e.bit_mask()).second) throw InvalidArgument("duplicate element " + e.to_string());
    if (seen.contains(all & ~e.bit_mask()))
      throw InvalidArgument("element " + e.to_string() + " and its complement are both present");
  }
}

Position change_bit(Position i, unsigned k, unsigned m) {
  if (k == 0 || k > m) throw InvalidArgument("change_bit: bit index " + std::to_string(k) + " outside 1.." + std::to_string(m));
  if (m < 32 && i >= (Position{1} << m)) throw InvalidArgument("change_bit: position out of range");
  const Position bit = Position{1} << (k - 1);
  return (i & bit) != 0 ? i - bit : i + bit;
}

Position change_bits(Position i, const IndexTuple& ks, unsigned m) {
  for (auto k : ks.indices()) i = change_bit(i, k, m);
  return i;
}

CombIndex row_to_comb_index(std::size_t row, unsigned m) {
  if (row == 0) throw InvalidArgument("row 0 is the constant row and has no index tuple");
  if (row >= (std::size_t{1} << (m - 1))) throw InvalidArgument("row " + std::to_string(row) + " is past k");
  // largest t with row >= sum_{j=0}^{t} C(m, j)
  int t = -1;
  std::uint64_t s = 0;
  std::uint64_t s_prev = 0;
  while (row >= s) {
    s_prev = s;
    ++t;
    s += binomial(m, static_cast<unsigned>(t));
  }
  return CombIndex{static_cast<std::size_t>(row - s_prev), static_cast<unsigned>(t - 1)};
}

IndexTuple combination_at(unsigned m, unsigned degree, std::uint64_t index) {
  if (degree > m) throw InvalidArgument("combination degree exceeds m");
  if (index >= binomial(m, degree))
    throw InvalidArgument("combination index " + std::to_string(index) + " out of range for C(" + std::to_string(m) +
                          ", " + std::to_string(degree) + ")");
  std::vector<unsigned> out;
  out.reserve(degree);
  unsigned next = 1;
  for (unsigned slot = 0; slot < degree; ++slot) {
    for (;; ++next) {
      // tuples that put `next` in this slot
      const auto block = binomial(m - next, degree - slot - 1);
      if (index < block) break;
      index -= block;
    }
    out.push_back(next++);
  }
  return IndexTuple(std::move(out));
}

std::vector<IndexTuple> all_combinations(unsigned m, unsigned degree) {
  std::vector<IndexTuple> out;
  const auto count = binomial(m, degree);
  out.reserve(count);
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(degree);
  for (unsigned i = 0; i < degree; ++i) cur[i] = i + 1;
  for (;;) {
    out.emplace_back(cur);
    int slot = static_cast<int>(degree) - 1;
    while (slot >= 0 && cur[slot] == m - degree + 1 + static_cast<unsigned>(slot)) --slot;
    if (slot < 0) break;
    ++cur[slot];
    for (auto s = static_cast<unsigned>(slot) + 1; s < degree; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

IndexTuple row_to_comb(std::size_t row, unsigned m, const ComplementFreeSet* yset) {
  const CodeParams params(m);
  if (row == 0 || row >= params.k())
    throw InvalidArgument("row_to_comb: row " + std::to_string(row) + " outside 1.." + std::to_string(params.k() - 1));
  if (row <= m) return IndexTuple{static_cast<unsigned>(row)};
  const auto idx = row_to_comb_index(row, m);
  if (!params.is_yset_row(row)) return combination_at(m, idx.nu + 1, idx.lambda);
  if (yset == nullptr) throw InvalidArgument("row " + std::to_string(row) + " needs a complement-free set");
  if (yset->m() != m) throw InvalidArgument("complement-free set was built for a different m");
  return (*yset)[idx.lambda];
}

RowMeta row_meta(std::size_t row, unsigned m, const ComplementFreeSet* yset) {
  const CodeParams params(m);
  if (row == 0) return RowMeta{0, std::nullopt, RowSource::constant};
  auto tuple = row_to_comb(row, m, yset);
  RowSource source = RowSource::combination;
  if (row <= m)
    source = RowSource::single;
  else if (params.is_yset_row(row))
    source = RowSource::y_set;
  return RowMeta{row, std::move(tuple), source};
}

}  // namespace hlcode
