#include "hlcode/relations.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hlcode/byte_io.hpp"
#include "hlcode/errors.hpp"

namespace hlcode {

const BitWord* DeltaCache::find(std::uint32_t tuple_mask, Position start) const {
  const auto it = entries_.find(key(tuple_mask, start));
  if (it != entries_.end()) return &it->second;
  return parent_ ? parent_->find(tuple_mask, start) : nullptr;
}

void DeltaCache::insert(std::uint32_t tuple_mask, Position start, const BitWord& mask) {
  entries_.insert_or_assign(key(tuple_mask, start), mask);
}

std::vector<DeltaCache::Entry> DeltaCache::sorted_entries() const {
  std::vector<std::pair<std::uint64_t, const BitWord*>> keyed;
  keyed.reserve(entries_.size());
  for (const auto& [k, v] : entries_) keyed.emplace_back(k, &v);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Entry> out;
  out.reserve(keyed.size());
  for (const auto& [k, v] : keyed)
    out.push_back(Entry{static_cast<std::uint32_t>(k >> 32), static_cast<Position>(k & 0xffffffffU), v});
  return out;
}

namespace {

BitWord delta_rec(std::span<const unsigned> indices, std::uint32_t set_mask, Position start, unsigned m,
                  DeltaCache& cache) {
  const std::size_t n = std::size_t{1} << m;
  if (indices.empty()) return BitWord(n);
  if (const auto* hit = cache.find(set_mask, start)) return *hit;

  BitWord result(n);
  const unsigned last = indices.back();
  if (indices.size() == 1) {
    result.set(start);
    result.set(change_bit(start, last, m));
  } else {
    const auto prefix = indices.first(indices.size() - 1);
    const auto prefix_mask = set_mask & ~(std::uint32_t{1} << (last - 1));
    result = delta_rec(prefix, prefix_mask, start, m, cache);
    result |= delta_rec(prefix, prefix_mask, change_bit(start, last, m), m, cache);
  }
  cache.insert(set_mask, start, result);
  return result;
}

}  // namespace

BitWord delta(std::span<const unsigned> indices, Position start, unsigned m, DeltaCache& cache) {
  if (m == 0 || m > CodeParams::kMaxM) throw InvalidArgument("delta: unsupported m");
  if (start >= (Position{1} << m)) throw InvalidArgument("delta: start position out of range");
  std::uint32_t set_mask = 0;
  for (auto j : indices) {
    if (j == 0 || j > m) throw InvalidArgument("delta: index " + std::to_string(j) + " outside 1.." + std::to_string(m));
    const auto bit = std::uint32_t{1} << (j - 1);
    if (set_mask & bit) throw InvalidArgument("delta: repeated index " + std::to_string(j));
    set_mask |= bit;
  }
  return delta_rec(indices, set_mask, start, m, cache);
}

BitWord delta(const IndexTuple& e, Position start, unsigned m, DeltaCache& cache) {
  return delta(e.indices(), start, m, cache);
}

RelationSet redundancy_relations(std::size_t row, const CodeParams& params, const ComplementFreeSet* yset,
                                 DeltaCache& cache) {
  RelationSet out;
  out.row = row;
  out.tuple = row_to_comb(row, params.m(), yset);
  out.masks.reserve(params.n() >> out.tuple.degree());

  auto uncovered = BitWord::ones(params.n());
  while (!uncovered.none()) {
    const auto start = static_cast<Position>(uncovered.lowest_set());
    auto mask = delta(out.tuple, start, params.m(), cache);
    if (and_popcount(mask, uncovered) != mask.weight())
      throw Error("internal: relation for row " + std::to_string(row) + " overlaps an earlier one");
    uncovered ^= mask;
    out.masks.push_back(std::move(mask));
  }
  return out;
}

void RelationDictionary::insert(Entry entry) {
  if (!entry) throw InvalidArgument("null relation set");
  if (find_row(entry->row) != nullptr) throw InvalidArgument("row " + std::to_string(entry->row) + " already present");
  auto& list = by_degree_[entry->degree()];
  const auto pos = std::upper_bound(list.begin(), list.end(), entry->row,
                                    [](std::size_t row, const Entry& e) { return row < e->row; });
  list.insert(pos, std::move(entry));
}

void RelationDictionary::merge(const RelationDictionary& other) {
  if (other.m_ != m_ && !other.by_degree_.empty() && !by_degree_.empty())
    throw InvalidArgument("cannot merge relation dictionaries for different m");
  if (by_degree_.empty()) m_ = other.m_;
  for (const auto& [degree, list] : other.by_degree_)
    for (const auto& e : list) insert(e);
}

std::span<const RelationDictionary::Entry> RelationDictionary::degree(unsigned u) const {
  const auto it = by_degree_.find(u);
  if (it == by_degree_.end()) return {};
  return it->second;
}

std::size_t RelationDictionary::row_count() const noexcept {
  std::size_t total = 0;
  for (const auto& [degree, list] : by_degree_) total += list.size();
  return total;
}

const RelationSet* RelationDictionary::find_row(std::size_t row) const {
  for (const auto& [degree, list] : by_degree_) {
    const auto it = std::lower_bound(list.begin(), list.end(), row,
                                     [](const Entry& e, std::size_t r) { return e->row < r; });
    if (it != list.end() && (*it)->row == row) return it->get();
  }
  return nullptr;
}

std::vector<std::size_t> RelationDictionary::rows() const {
  std::vector<std::size_t> out;
  for (const auto& [degree, list] : by_degree_)
    for (const auto& e : list) out.push_back(e->row);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const RelationDictionary& a, const RelationDictionary& b) {
  if (a.m_ != b.m_ || a.by_degree_.size() != b.by_degree_.size()) return false;
  for (auto ia = a.by_degree_.begin(), ib = b.by_degree_.begin(); ia != a.by_degree_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    for (std::size_t i = 0; i < ia->second.size(); ++i)
      if (*ia->second[i] != *ib->second[i]) return false;
  }
  return true;
}

RelationDictionary redundancy_relations_set(const CodeParams& params, const ComplementFreeSet* yset, DeltaCache& cache,
                                            std::size_t j_start, std::size_t j_end) {
  if (j_start == 0 || j_start > j_end || j_end >= params.k())
    throw InvalidArgument("relation row range [" + std::to_string(j_start) + ", " + std::to_string(j_end) +
                          "] must satisfy 0 < start <= end < " + std::to_string(params.k()));
  RelationDictionary dict(params.m());
  for (std::size_t j = j_start; j <= j_end; ++j)
    dict.insert(std::make_shared<const RelationSet>(redundancy_relations(j, params, yset, cache)));
  return dict;
}

RelationDictionary fixed_relations(const CodeParams& params, DeltaCache& cache) {
  return redundancy_relations_set(params, nullptr, cache, 1, params.fixed_rows() - 1);
}

void write_relations(ByteWriter& out, const RelationDictionary& dict) {
  const auto rows = dict.rows();
  if (rows.empty()) throw InvalidArgument("cannot write an empty relation dictionary");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i] != rows[i - 1] + 1) throw InvalidArgument("relation rows must form a contiguous range");
  out.magic("HLR1");
  out.u32(dict.m());
  out.u32(static_cast<std::uint32_t>(rows.front()));
  out.u32(static_cast<std::uint32_t>(rows.back()));
  for (auto row : rows) {
    const auto* set = dict.find_row(row);
    out.u32(static_cast<std::uint32_t>(row));
    out.u8(static_cast<std::uint8_t>(set->degree()));
    out.u32(static_cast<std::uint32_t>(set->masks.size()));
    for (const auto& mask : set->masks) mask.serialize(out);
  }
}

namespace {

/// Index set spanned by a coset mask: the bits in which its members differ
/// from the lowest member.
std::uint32_t spanned_bits(const BitWord& mask) {
  const auto low = mask.lowest_set();
  std::uint32_t bits = 0;
  for (auto p : mask.positions()) bits |= static_cast<std::uint32_t>(p ^ low);
  return bits;
}

}  // namespace

RelationDictionary read_relations(ByteReader& in, RelationsHeader* header) {
  in.expect_magic("HLR1", "relations file");
  const auto m = in.u32();
  const auto j_start = in.u32();
  const auto j_end = in.u32();
  CodeParams params = [&] {
    try {
      return CodeParams(m);
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("relations file: ") + e.what());
    }
  }();
  if (j_start == 0 || j_start > j_end || j_end >= params.k()) throw FormatError("relations file: invalid row range");
  if (header) *header = RelationsHeader{m, j_start, j_end};

  RelationDictionary dict(m);
  for (std::size_t row = j_start; row <= j_end; ++row) {
    if (in.u32() != row) throw FormatError("relations file: rows out of order");
    const unsigned degree = in.u8();
    const auto count = in.u32();
    if (degree == 0 || degree > params.max_degree() || count != (params.n() >> degree))
      throw FormatError("relations file: row " + std::to_string(row) + " has an inconsistent degree or mask count");
    auto set = std::make_shared<RelationSet>();
    set->row = row;
    set->masks.reserve(count);
    BitWord covered(params.n());
    for (std::uint32_t i = 0; i < count; ++i) {
      auto mask = BitWord::deserialize(in);
      if (mask.size() != params.n() || mask.weight() != (std::size_t{1} << degree) || and_popcount(mask, covered) != 0)
        throw FormatError("relations file: row " + std::to_string(row) + " masks do not partition the positions");
      covered |= mask;
      set->masks.push_back(std::move(mask));
    }
    const auto bits = spanned_bits(set->masks.front());
    if (static_cast<unsigned>(std::popcount(bits)) != degree)
      throw FormatError("relations file: row " + std::to_string(row) + " mask is not a coset of its degree");
    set->tuple = IndexTuple::from_bit_mask(bits);
    dict.insert(std::move(set));
  }
  return dict;
}

void save_relations(const std::filesystem::path& path, const RelationDictionary& dict) {
  ByteWriter out;
  write_relations(out, dict);
  write_file_atomic(path, out.buffer());
}

RelationDictionary load_relations(const std::filesystem::path& path, RelationsHeader* header) {
  const auto data = read_file(path);
  ByteReader in(data);
  auto dict = read_relations(in, header);
  in.expect_end("relations file");
  return dict;
}

void save_cache(const std::filesystem::path& path, unsigned m, const DeltaCache& cache) {
  ByteWriter out;
  out.magic("HLX1");
  out.u32(m);
  const auto entries = cache.sorted_entries();
  out.u64(entries.size());
  for (const auto& e : entries) {
    out.u32(e.tuple_mask);
    out.u32(e.start);
    e.mask->serialize(out);
  }
  write_file_atomic(path, out.buffer());
}

DeltaCache load_cache(const std::filesystem::path& path, unsigned m) {
  const auto data = read_file(path);
  ByteReader in(data);
  in.expect_magic("HLX1", "delta cache file");
  if (in.u32() != m) throw FormatError("delta cache file was written for a different m");
  const auto count = in.u64();
  const std::size_t n = std::size_t{1} << m;
  DeltaCache cache;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto tuple_mask = in.u32();
    const auto start = in.u32();
    auto mask = BitWord::deserialize(in);
    if (mask.size() != n || start >= n) throw FormatError("delta cache file: entry does not match m");
    cache.insert(tuple_mask, start, mask);
  }
  in.expect_end("delta cache file");
  return cache;
}

}  // namespace hlcode
