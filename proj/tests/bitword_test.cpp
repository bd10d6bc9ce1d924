#include <gtest/gtest.h>

#include <random>

#include "hlcode/bitword.hpp"
#include "hlcode/byte_io.hpp"
#include "hlcode/errors.hpp"
#include "test_support.hpp"

using hlcode::BitWord;

TEST(BitWord, SetTestFlipAcrossWordBoundary) {
  BitWord w(130);
  w.set(0);
  w.set(63);
  w.set(64);
  w.set(129);
  EXPECT_EQ(w.weight(), 4U);
  EXPECT_TRUE(w.test(64));
  w.flip(64);
  EXPECT_FALSE(w.test(64));
  EXPECT_EQ(w.positions(), (std::vector<std::size_t>{0, 63, 129}));
  EXPECT_EQ(w.lowest_set(), 0U);
  EXPECT_THROW(w.set(130), hlcode::InvalidArgument);
  EXPECT_THROW((void)w.test(200), hlcode::InvalidArgument);
}

TEST(BitWord, OnesKeepsTailClear) {
  const auto w = BitWord::ones(70);
  EXPECT_EQ(w.weight(), 70U);
  EXPECT_EQ(w.words()[1], (std::uint64_t{1} << 6) - 1);
}

TEST(BitWord, LengthMismatchThrows) {
  BitWord a(16);
  BitWord b(32);
  EXPECT_THROW(a ^= b, hlcode::LengthMismatch);
  EXPECT_THROW((void)hlcode::and_popcount(a, b), hlcode::LengthMismatch);
  EXPECT_THROW((void)hlcode::parity_under_mask(a, b), hlcode::LengthMismatch);
}

TEST(BitWord, ParityUnderMaskMatchesBitLoop) {
  std::mt19937_64 gen(7);
  for (std::size_t len : {16U, 64U, 100U, 1024U, 4096U}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = testing_support::random_word(len, gen);
      const auto mask = testing_support::random_word(len, gen);
      std::size_t ones = 0;
      for (std::size_t i = 0; i < len; ++i) ones += (x.test(i) && mask.test(i)) ? 1 : 0;
      ASSERT_EQ(hlcode::and_popcount(x, mask), ones);
      ASSERT_EQ(hlcode::parity_under_mask(x, mask), (ones & 1U) == 1U);
    }
  }
}

TEST(BitWord, SampleMaskFromWorkedExample) {
  // The relation {0,1,4,5} printed MSB-first is 52224; in this layout it is
  // a position set.
  const auto mask = BitWord::from_positions(16, {0, 1, 4, 5});
  EXPECT_EQ(mask.words()[0], 0b110011U);
  const auto x = BitWord::from_positions(16, {0, 1, 2});
  EXPECT_FALSE(hlcode::parity_under_mask(x, mask));
  const auto y = BitWord::from_positions(16, {0, 2, 4});
  EXPECT_FALSE(hlcode::parity_under_mask(y, mask));
  const auto z = BitWord::from_positions(16, {5, 9});
  EXPECT_TRUE(hlcode::parity_under_mask(z, mask));
}

TEST(BitWord, XorAndOr) {
  const auto a = BitWord::from_positions(16, {1, 2, 3});
  const auto b = BitWord::from_positions(16, {3, 4});
  EXPECT_EQ((a ^ b).positions(), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ((a & b).positions(), (std::vector<std::size_t>{3}));
  EXPECT_EQ((a | b).positions(), (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(hlcode::xor_words(a, b), a ^ b);
}

TEST(BitWord, BytesRoundtripAndValidation) {
  std::mt19937_64 gen(3);
  const auto w = testing_support::random_word(512, gen);
  const auto bytes = w.to_bytes();
  ASSERT_EQ(bytes.size(), 64U);
  EXPECT_EQ(BitWord::from_bytes(512, bytes), w);
  EXPECT_THROW((void)BitWord::from_bytes(520, bytes), hlcode::FormatError);

  const std::vector<std::uint8_t> one{0x80};
  EXPECT_THROW((void)BitWord::from_bytes(7, one), hlcode::FormatError);
  EXPECT_TRUE(BitWord::from_bytes(8, one).test(7));
}

TEST(BitWord, SerializeRoundtrip) {
  std::mt19937_64 gen(11);
  for (std::size_t len : {8U, 16U, 100U, 4096U}) {
    const auto w = testing_support::random_word(len, gen);
    hlcode::ByteWriter out;
    w.serialize(out);
    const auto buf = std::move(out).take();
    hlcode::ByteReader in(buf);
    EXPECT_EQ(BitWord::deserialize(in), w);
    EXPECT_TRUE(in.at_end());
  }
}

TEST(BitWord, TruncatedSerializationThrows) {
  hlcode::ByteWriter out;
  BitWord::ones(128).serialize(out);
  auto buf = std::move(out).take();
  buf.resize(buf.size() - 1);
  hlcode::ByteReader in(buf);
  EXPECT_THROW((void)BitWord::deserialize(in), hlcode::FormatError);
}
