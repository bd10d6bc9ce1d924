#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "hlcode/bitword.hpp"
#include "hlcode/index_map.hpp"
#include "hlcode/params.hpp"
#include "hlcode/rng.hpp"

namespace hlcode {

class ByteReader;
class ByteWriter;

/// Generator matrix of an HL-code, one BitWord of length n per row.
///
/// A partial matrix holds only the fixed rows (everything below degree m/2)
/// and has no complement-free set; a complete one has all k rows.
class GeneratorMatrix {
 public:
  GeneratorMatrix(CodeParams params, std::vector<BitWord> rows,
                  std::optional<ComplementFreeSet> yset = std::nullopt);

  const CodeParams& params() const noexcept { return params_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const BitWord& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitWord>& rows() const noexcept { return rows_; }
  const std::optional<ComplementFreeSet>& yset() const noexcept { return yset_; }
  bool complete() const noexcept { return rows_.size() == params_.k(); }

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  CodeParams params_;
  std::vector<BitWord> rows_;
  std::optional<ComplementFreeSet> yset_;
};

/// (0^(2^i) 1^(2^i)) repeated n / 2^(i+1) times, i.e. v_(i+1).
/// Throws InvalidArgument unless n is a power of two divisible by 2^(i+1).
BitWord build_v_vector(unsigned i, std::size_t n);

/// Random maximal complement-free set: the lexicographic (m/2)-tuples are
/// split into A (first half) and B (second half reversed, so that B_j is the
/// complement of A_j), both are shuffled by one shared permutation, and a
/// fair coin picks A_j or B_j for each j.
ComplementFreeSet complement_free_set(unsigned m, Rng& rng);

/// Rows 0 .. fixed_rows()-1: v_0, v_1..v_m, then products of v's for each
/// degree 2 .. m/2-1 in lexicographic tuple order.
GeneratorMatrix build_partial_generator_matrix(unsigned m);

/// Appends the product rows for `yset` in insertion order.
GeneratorMatrix build_generator_matrix(const GeneratorMatrix& partial, const ComplementFreeSet& yset);

/// message * G over GF(2). message has one bit per row of G.
BitWord encode(const BitWord& message, const GeneratorMatrix& g);

/// Product of v_j for j in `tuple`; the all-ones word for the empty tuple.
BitWord monomial_row(const IndexTuple& tuple, std::size_t n);

// Persistence. Matrix: "HLG1", m u32, row count u32, rows as BitWord
// serializations. Y-set: "HLY1", m u32, count u32, each tuple as degree u8
// followed by 1-based indices u8.

void write_matrix(ByteWriter& out, const GeneratorMatrix& g);
/// Reads a partial or complete matrix. The Y-set is not part of this format,
/// so the result never carries one.
GeneratorMatrix read_matrix(ByteReader& in);

void write_yset_body(ByteWriter& out, const ComplementFreeSet& yset);
ComplementFreeSet read_yset_body(ByteReader& in);
void write_yset(ByteWriter& out, const ComplementFreeSet& yset);
ComplementFreeSet read_yset(ByteReader& in);

void save_matrix(const std::filesystem::path& path, const GeneratorMatrix& g);
GeneratorMatrix load_matrix(const std::filesystem::path& path);
void save_yset(const std::filesystem::path& path, const ComplementFreeSet& yset);
ComplementFreeSet load_yset(const std::filesystem::path& path);

}  // namespace hlcode
