#include "hlcode/hl_code.hpp"

#include <bit>
#include <string>

#include "hlcode/byte_io.hpp"
#include "hlcode/errors.hpp"
#include "hlcode/gf2_matrix.hpp"

namespace hlcode {

GeneratorMatrix::GeneratorMatrix(CodeParams params, std::vector<BitWord> rows, std::optional<ComplementFreeSet> yset)
    : params_(params), rows_(std::move(rows)), yset_(std::move(yset)) {
  if (rows_.size() > params_.k()) throw InvalidArgument("generator matrix has more than k rows");
  for (const auto& r : rows_)
    if (r.size() != params_.n()) throw LengthMismatch(r.size(), params_.n());
  if (yset_ && yset_->m() != params_.m()) throw InvalidArgument("complement-free set built for a different m");
}

BitWord build_v_vector(unsigned i, std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) throw InvalidArgument("v-vector length must be a power of two");
  if (i >= 63 || (n % (std::size_t{1} << (i + 1))) != 0)
    throw InvalidArgument("v-vector: 2^(i+1) must divide n (i = " + std::to_string(i) + ", n = " + std::to_string(n) + ")");
  BitWord v(n);
  auto words = v.mutable_words();
  constexpr std::size_t W = BitWord::kWordBits;
  if (std::size_t{1} << i < W) {
    // a word holds whole periods of 0^(2^i) 1^(2^i)
    BitWord::Word pattern = 0;
    for (std::size_t b = 0; b < W; ++b)
      if ((b >> i) & 1U) pattern |= BitWord::Word{1} << b;
    if (n < W) pattern &= (BitWord::Word{1} << n) - 1;
    for (auto& w : words) w = pattern;
  } else {
    const std::size_t run = (std::size_t{1} << i) / W;
    for (std::size_t wi = 0; wi < words.size(); ++wi) words[wi] = ((wi / run) & 1U) ? ~BitWord::Word{0} : 0;
  }
  return v;
}

ComplementFreeSet complement_free_set(unsigned m, Rng& rng) {
  const CodeParams params(m);
  const auto x = all_combinations(m, m / 2);
  const std::size_t half = params.yset_size();
  std::vector<IndexTuple> a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<IndexTuple> b(x.rbegin(), x.rbegin() + static_cast<std::ptrdiff_t>(half));

  std::vector<std::size_t> order(half);
  for (std::size_t j = 0; j < half; ++j) order[j] = j;
  rng.shuffle(order.begin(), order.end());

  std::vector<IndexTuple> out;
  out.reserve(half);
  for (auto j : order) out.push_back(rng.coin() ? b[j] : a[j]);
  return ComplementFreeSet(m, std::move(out));
}

BitWord monomial_row(const IndexTuple& tuple, std::size_t n) {
  auto row = BitWord::ones(n);
  for (auto j : tuple.indices()) row &= build_v_vector(j - 1, n);
  return row;
}

GeneratorMatrix build_partial_generator_matrix(unsigned m) {
  const CodeParams params(m);
  const auto n = params.n();
  std::vector<BitWord> rows;
  rows.reserve(params.fixed_rows());
  rows.push_back(BitWord::ones(n));
  for (unsigned i = 1; i <= m; ++i) rows.push_back(build_v_vector(i - 1, n));
  for (unsigned degree = 2; degree + 1 <= m / 2; ++degree) {
    for (const auto& e : all_combinations(m, degree)) {
      auto row = rows[e[0]];
      for (std::size_t s = 1; s < e.degree(); ++s) row &= rows[e[s]];
      rows.push_back(std::move(row));
    }
  }
  return GeneratorMatrix(params, std::move(rows));
}

GeneratorMatrix build_generator_matrix(const GeneratorMatrix& partial, const ComplementFreeSet& yset) {
  const auto& params = partial.params();
  if (yset.m() != params.m()) throw InvalidArgument("complement-free set and matrix disagree on m");
  if (partial.row_count() < params.fixed_rows())
    throw InvalidArgument("partial matrix has " + std::to_string(partial.row_count()) + " rows, expected " +
                          std::to_string(params.fixed_rows()));
  std::vector<BitWord> rows(partial.rows().begin(), partial.rows().begin() + static_cast<std::ptrdiff_t>(params.fixed_rows()));
  rows.reserve(params.k());
  for (const auto& e : yset.elements()) {
    auto row = rows[e[0]];
    for (std::size_t s = 1; s < e.degree(); ++s) row &= rows[e[s]];
    rows.push_back(std::move(row));
  }
  return GeneratorMatrix(params, std::move(rows), yset);
}

BitWord encode(const BitWord& message, const GeneratorMatrix& g) {
  if (!g.complete()) throw InvalidArgument("encode needs a complete generator matrix");
  if (message.size() != g.row_count()) throw LengthMismatch(message.size(), g.row_count());
  return combine_rows(message, g.rows());
}

void write_matrix(ByteWriter& out, const GeneratorMatrix& g) {
  out.magic("HLG1");
  out.u32(g.params().m());
  out.u32(static_cast<std::uint32_t>(g.row_count()));
  for (const auto& r : g.rows()) r.serialize(out);
}

GeneratorMatrix read_matrix(ByteReader& in) {
  in.expect_magic("HLG1", "generator matrix file");
  const auto m = in.u32();
  CodeParams params = [&] {
    try {
      return CodeParams(m);
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("generator matrix file: ") + e.what());
    }
  }();
  const auto count = in.u32();
  if (count > params.k()) throw FormatError("generator matrix file: row count exceeds k");
  std::vector<BitWord> rows;
  rows.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    auto r = BitWord::deserialize(in);
    if (r.size() != params.n()) throw FormatError("generator matrix file: row length does not match m");
    rows.push_back(std::move(r));
  }
  return GeneratorMatrix(params, std::move(rows));
}

void write_yset_body(ByteWriter& out, const ComplementFreeSet& yset) {
  out.u32(yset.m());
  out.u32(static_cast<std::uint32_t>(yset.size()));
  for (const auto& e : yset.elements()) {
    out.u8(static_cast<std::uint8_t>(e.degree()));
    for (auto j : e.indices()) out.u8(static_cast<std::uint8_t>(j));
  }
}

ComplementFreeSet read_yset_body(ByteReader& in) {
  const auto m = in.u32();
  const auto count = in.u32();
  if (m > CodeParams::kMaxM || count > (1U << CodeParams::kMaxM)) throw FormatError("Y-set: implausible header");
  std::vector<IndexTuple> elements;
  elements.reserve(count);
  try {
    for (std::uint32_t i = 0; i < count; ++i) {
      const auto degree = in.u8();
      std::vector<unsigned> idx(degree);
      for (auto& j : idx) j = in.u8();
      elements.emplace_back(std::move(idx));
    }
    return ComplementFreeSet(m, std::move(elements));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("Y-set: ") + e.what());
  }
}

void write_yset(ByteWriter& out, const ComplementFreeSet& yset) {
  out.magic("HLY1");
  write_yset_body(out, yset);
}

ComplementFreeSet read_yset(ByteReader& in) {
  in.expect_magic("HLY1", "Y-set file");
  return read_yset_body(in);
}

void save_matrix(const std::filesystem::path& path, const GeneratorMatrix& g) {
  ByteWriter out;
  write_matrix(out, g);
  write_file_atomic(path, out.buffer());
}

GeneratorMatrix load_matrix(const std::filesystem::path& path) {
  const auto data = read_file(path);
  ByteReader in(data);
  auto g = read_matrix(in);
  in.expect_end("generator matrix file");
  return g;
}

void save_yset(const std::filesystem::path& path, const ComplementFreeSet& yset) {
  ByteWriter out;
  write_yset(out, yset);
  write_file_atomic(path, out.buffer());
}

ComplementFreeSet load_yset(const std::filesystem::path& path) {
  const auto data = read_file(path);
  ByteReader in(data);
  auto y = read_yset(in);
  in.expect_end("Y-set file");
  return y;
}

}  // namespace hlcode
