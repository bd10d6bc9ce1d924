#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "hlcode/bitword.hpp"
#include "hlcode/index_map.hpp"
#include "hlcode/params.hpp"

namespace hlcode {

class ByteReader;
class ByteWriter;

/// Memo of already expanded Delta operators, keyed by (index set, start
/// position). The index set is stored as a bit mask, so the key does not
/// depend on tuple order.
///
/// An optional read-only parent is consulted on misses; inserts always go
/// to this cache. The parent must outlive the child.
class DeltaCache {
 public:
  DeltaCache() = default;
  explicit DeltaCache(const DeltaCache* parent) : parent_(parent) {}

  const BitWord* find(std::uint32_t tuple_mask, Position start) const;
  void insert(std::uint32_t tuple_mask, Position start, const BitWord& mask);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  void clear() noexcept { entries_.clear(); }

  struct Entry {
    std::uint32_t tuple_mask;
    Position start;
    const BitWord* mask;
  };
  /// Own entries (not the parent's) sorted by key, for deterministic
  /// persistence.
  std::vector<Entry> sorted_entries() const;

 private:
  static std::uint64_t key(std::uint32_t tuple_mask, Position start) noexcept {
    return (std::uint64_t{tuple_mask} << 32) | start;
  }
  std::unordered_map<std::uint64_t, BitWord> entries_;
  const DeltaCache* parent_ = nullptr;
};

/// Delta_e x_i as a position mask over n = 2^m positions:
/// {Phi(i, s) : s subset of e}. Expanded recursively on the last index,
///   Delta_(j1..jt) x_i = Delta_(j1..jt-1) x_i  +  Delta_(j1..jt-1) x_phi(i, jt),
/// memoizing every intermediate result in `cache`. The empty tuple yields the
/// empty mask. `indices` may be in any order.
BitWord delta(std::span<const unsigned> indices, Position start, unsigned m, DeltaCache& cache);
BitWord delta(const IndexTuple& e, Position start, unsigned m, DeltaCache& cache);

/// The redundancy relations of one coefficient a_row: masks partitioning
/// {0..n-1}, ordered by their lowest position.
struct RelationSet {
  std::size_t row = 0;
  IndexTuple tuple;
  std::vector<BitWord> masks;

  unsigned degree() const noexcept { return static_cast<unsigned>(tuple.degree()); }
  friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

/// Covers each position with Delta_f(row) starting at the lowest position
/// not yet covered, until every position is used.
RelationSet redundancy_relations(std::size_t row, const CodeParams& params,
                                 const ComplementFreeSet* yset, DeltaCache& cache);

/// Relation sets grouped by coefficient degree. Entries are shared and
/// immutable, so merging dictionaries (fixed rows + Y-set rows) is cheap.
class RelationDictionary {
 public:
  using Entry = std::shared_ptr<const RelationSet>;

  RelationDictionary() = default;
  explicit RelationDictionary(unsigned m) : m_(m) {}

  unsigned m() const noexcept { return m_; }
  void insert(Entry entry);
  void merge(const RelationDictionary& other);

  const std::map<unsigned, std::vector<Entry>>& by_degree() const noexcept { return by_degree_; }
  /// Empty span when the degree is absent.
  std::span<const Entry> degree(unsigned u) const;
  bool has_degree(unsigned u) const { return by_degree_.contains(u); }
  std::size_t row_count() const noexcept;
  /// nullptr if the row is absent.
  const RelationSet* find_row(std::size_t row) const;
  /// Sorted list of the rows present.
  std::vector<std::size_t> rows() const;

  /// Equal contents (not pointer identity).
  friend bool operator==(const RelationDictionary& a, const RelationDictionary& b);

 private:
  unsigned m_ = 0;
  std::map<unsigned, std::vector<Entry>> by_degree_;
};

/// Relation sets for rows j_start..j_end inclusive, keyed by degree.
/// Throws InvalidArgument unless 0 < j_start <= j_end < k.
RelationDictionary redundancy_relations_set(const CodeParams& params, const ComplementFreeSet* yset,
                                            DeltaCache& cache, std::size_t j_start, std::size_t j_end);

/// Rows 1 .. fixed_rows()-1, the part that does not depend on the Y-set.
RelationDictionary fixed_relations(const CodeParams& params, DeltaCache& cache);

/// Header of a relations file: the m and row range it was written for.
struct RelationsHeader {
  unsigned m;
  std::size_t j_start;
  std::size_t j_end;
};

// Relations file: "HLR1", m u32, j_start u32, j_end u32, then per row in
// increasing row order: row u32, degree u8, mask count u32, masks as BitWord
// serializations.
void write_relations(ByteWriter& out, const RelationDictionary& dict);
RelationDictionary read_relations(ByteReader& in, RelationsHeader* header = nullptr);
void save_relations(const std::filesystem::path& path, const RelationDictionary& dict);
RelationDictionary load_relations(const std::filesystem::path& path, RelationsHeader* header = nullptr);

// Cache file: "HLX1", m u32, entry count u64, then per entry: index-set
// mask u32, start position u32, mask as BitWord serialization.
void save_cache(const std::filesystem::path& path, unsigned m, const DeltaCache& cache);
DeltaCache load_cache(const std::filesystem::path& path, unsigned m);

}  // namespace hlcode
