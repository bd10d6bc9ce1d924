#include <gtest/gtest.h>

#include <set>

#include "golden.hpp"
#include "hlcode/errors.hpp"
#include "hlcode/hl_code.hpp"
#include "hlcode/relations.hpp"
#include "hlcode/rng.hpp"
#include "oracles.hpp"

using namespace hlcode;

namespace {

std::set<std::size_t> as_set(const BitWord& w) {
  const auto p = w.positions();
  return {p.begin(), p.end()};
}

void expect_partition(const RelationSet& rel, const CodeParams& p) {
  const auto u = rel.degree();
  ASSERT_EQ(rel.masks.size(), std::size_t{1} << (p.m() - u)) << "row " << rel.row;
  BitWord seen(p.n());
  for (const auto& mask : rel.masks) {
    ASSERT_EQ(mask.weight(), std::size_t{1} << u);
    ASSERT_EQ(and_popcount(seen, mask), 0U) << "row " << rel.row << " overlaps";
    seen |= mask;
  }
  ASSERT_EQ(seen.weight(), p.n());
}

}  // namespace

TEST(Delta, SinglePositionAndPairs) {
  DeltaCache cache;
  EXPECT_EQ(delta(IndexTuple{1}, 0, 4, cache).positions(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(delta(IndexTuple{1, 4}, 0, 4, cache).positions(), (std::vector<std::size_t>{0, 1, 8, 9}));
  EXPECT_EQ(delta(IndexTuple{}, 5, 4, cache).weight(), 0U);
  const std::vector<unsigned> repeated{1, 1};
  EXPECT_THROW((void)delta(repeated, 0, 4, cache), InvalidArgument);
  const std::vector<unsigned> out_of_range{5};
  EXPECT_THROW((void)delta(out_of_range, 0, 4, cache), InvalidArgument);
}

TEST(Delta, ClosedFormForSmallM) {
  for (unsigned m = 4; m <= 6; m += 2) {
    DeltaCache cache;
    const std::size_t n = std::size_t{1} << m;
    for (unsigned r = 1; r <= m; ++r)
      for (const auto& tuple : oracle::combinations(m, r))
        for (std::size_t i = 0; i < n; ++i)
          ASSERT_EQ(as_set(delta(IndexTuple(tuple), static_cast<Position>(i), m, cache)), oracle::coset(i, tuple));
  }
}

TEST(Delta, IndexOrderDoesNotMatter) {
  DeltaCache cache;
  const std::vector<unsigned> a{1, 3, 5};
  const std::vector<unsigned> b{5, 1, 3};
  for (Position i = 0; i < 64; ++i) EXPECT_EQ(delta(a, i, 6, cache), delta(b, i, 6, cache));
}

TEST(Delta, ChildCacheDoesNotWriteParent) {
  DeltaCache parent;
  (void)delta(IndexTuple{1, 2}, 0, 4, parent);
  const auto before = parent.size();
  DeltaCache child(&parent);
  (void)delta(IndexTuple{1, 2, 3}, 0, 4, child);
  EXPECT_EQ(parent.size(), before);
  EXPECT_GT(child.size(), 0U);
  EXPECT_NE(child.find(IndexTuple{1, 2}.bit_mask(), 0), nullptr);
}

TEST(Relations, GoldenM4) {
  const CodeParams p(4);
  const auto y = golden::m4_yset();
  DeltaCache cache;
  const auto dict = redundancy_relations_set(p, &y, cache, 1, 7);
  EXPECT_EQ(dict.row_count(), 7U);
  for (std::size_t row = 1; row <= 7; ++row) {
    const auto* rel = dict.find_row(row);
    ASSERT_NE(rel, nullptr);
    const auto& expected = golden::m4_relations()[row];
    ASSERT_EQ(rel->masks.size(), expected.size()) << "row " << row;
    for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_EQ(rel->masks[j].positions(), expected[j]) << row;
  }
  EXPECT_EQ(dict.degree(2).size(), 3U);
  EXPECT_EQ(dict.degree(1).size(), 4U);
}

TEST(Relations, PartitionInvariant) {
  for (unsigned m = 4; m <= 8; m += 2) {
    const CodeParams p(m);
    Rng rng(m);
    const auto y = complement_free_set(m, rng);
    DeltaCache cache;
    const auto dict = redundancy_relations_set(p, &y, cache, 1, p.k() - 1);
    ASSERT_EQ(dict.row_count(), p.k() - 1);
    for (const auto& [u, entries] : dict.by_degree())
      for (const auto& e : entries) expect_partition(*e, p);
  }
}

TEST(Relations, FixedAndYPartsMergeToFull) {
  const CodeParams p(6);
  Rng rng(1);
  const auto y = complement_free_set(6, rng);
  DeltaCache cache;
  auto merged = fixed_relations(p, cache);
  EXPECT_EQ(merged.row_count(), p.fixed_rows() - 1);
  merged.merge(redundancy_relations_set(p, &y, cache, p.fixed_rows(), p.k() - 1));
  DeltaCache fresh;
  EXPECT_EQ(merged, redundancy_relations_set(p, &y, fresh, 1, p.k() - 1));
}

TEST(Relations, RangeChecks) {
  const CodeParams p(4);
  const auto y = golden::m4_yset();
  DeltaCache cache;
  EXPECT_THROW((void)redundancy_relations_set(p, &y, cache, 0, 3), InvalidArgument);
  EXPECT_THROW((void)redundancy_relations_set(p, &y, cache, 3, 2), InvalidArgument);
  EXPECT_THROW((void)redundancy_relations_set(p, &y, cache, 1, 8), InvalidArgument);
  EXPECT_THROW((void)redundancy_relations(6, p, nullptr, cache), InvalidArgument);
}

TEST(Relations, DuplicateRowRejected) {
  const CodeParams p(4);
  DeltaCache cache;
  auto dict = fixed_relations(p, cache);
  EXPECT_THROW(dict.merge(fixed_relations(p, cache)), InvalidArgument);
}
