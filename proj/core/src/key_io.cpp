#include <sodium.h>

#include <array>
#include <string>

#include "hlcode/byte_io.hpp"
#include "hlcode/dhh.hpp"
#include "hlcode/errors.hpp"

namespace hlcode {

namespace {

constexpr std::size_t kHashBytes = 32;

std::array<std::uint8_t, kHashBytes> content_hash(std::span<const std::uint8_t> data) {
  if (sodium_init() < 0) throw Error("libsodium initialisation failed");
  std::array<std::uint8_t, kHashBytes> out{};
  crypto_generichash(out.data(), out.size(), data.data(), data.size(), nullptr, 0);
  return out;
}

CodeParams params_from_file(std::uint32_t m, const char* what) {
  try {
    return CodeParams(m);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

void write_rows(ByteWriter& out, const BitMatrix& m) {
  for (const auto& r : m.row_words()) out.bytes(r.to_bytes());
}

BitMatrix read_rows(ByteReader& in, std::size_t rows, std::size_t cols) {
  std::vector<BitWord> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) out.push_back(BitWord::from_bytes(cols, in.bytes((cols + 7) / 8)));
  return BitMatrix(std::move(out));
}

std::vector<std::uint32_t> read_u32_array(ByteReader& in, std::size_t count) {
  std::vector<std::uint32_t> out(count);
  for (auto& v : out) v = in.u32();
  return out;
}

}  // namespace

std::vector<std::uint8_t> serialize_public_key(const PublicKey& pk) {
  ByteWriter out;
  out.magic("HLP1");
  out.u32(pk.params.m());
  write_rows(out, pk.g_prime);
  return std::move(out).take();
}

PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  in.expect_magic("HLP1", "public key file");
  const auto params = params_from_file(in.u32(), "public key file");
  auto g_prime = read_rows(in, params.k(), params.n());
  in.expect_end("public key file");
  return PublicKey{params, std::move(g_prime)};
}

std::vector<std::uint8_t> serialize_private_key(const PrivateKey& sk, bool embed) {
  ByteWriter out;
  out.magic("HLK1");
  out.u32(sk.params.m());
  write_rows(out, sk.s_inv);
  for (auto v : sk.perm.inverse()) out.u32(v);
  for (auto v : sk.perm.forward()) out.u32(v);
  write_yset_body(out, sk.yset());
  out.u8(embed ? 1 : 0);
  if (embed) {
    write_matrix(out, sk.g);
    write_relations(out, sk.relations);
  }
  const auto hash = content_hash(out.buffer());
  out.bytes(hash);
  return std::move(out).take();
}

bool private_key_embeds(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  in.expect_magic("HLK1", "private key file");
  const auto params = params_from_file(in.u32(), "private key file");
  in.bytes(params.k() * ((params.k() + 7) / 8));
  in.bytes(params.n() * 8);
  read_yset_body(in);
  return in.u8() == 1;
}

PrivateKey deserialize_private_key(std::span<const std::uint8_t> bytes, const Precomputed* pre) {
  if (bytes.size() < 4 + kHashBytes) throw FormatError("private key file is truncated");
  const auto body = bytes.first(bytes.size() - kHashBytes);
  const auto stored = bytes.last(kHashBytes);
  ByteReader in(body);
  in.expect_magic("HLK1", "private key file");
  const auto expected = content_hash(body);
  if (!std::equal(expected.begin(), expected.end(), stored.begin()))
    throw FormatError("private key file: content hash mismatch (corrupt or truncated)");

  const auto params = params_from_file(in.u32(), "private key file");
  auto s_inv = read_rows(in, params.k(), params.k());
  auto inverse = read_u32_array(in, params.n());
  auto forward = read_u32_array(in, params.n());
  Permutation perm = [&] {
    try {
      return Permutation(std::move(forward));
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("private key file: ") + e.what());
    }
  }();
  if (perm.inverse() != inverse) throw FormatError("private key file: stored inverse permutation is inconsistent");
  auto yset = read_yset_body(in);
  if (yset.m() != params.m()) throw FormatError("private key file: Y-set m does not match");
  const auto embed = in.u8();
  if (embed > 1) throw FormatError("private key file: bad embed flag");

  if (embed == 1) {
    auto g_rows = read_matrix(in);
    RelationsHeader header{};
    auto relations = read_relations(in, &header);
    in.expect_end("private key file");
    if (!g_rows.complete() || g_rows.params() != params)
      throw FormatError("private key file: embedded generator matrix is incomplete");
    if (header.j_start != 1 || header.j_end + 1 != params.k())
      throw FormatError("private key file: embedded relations do not cover rows 1..k-1");
    GeneratorMatrix g(params, g_rows.rows(), std::move(yset));
    return PrivateKey{params, std::move(s_inv), std::move(perm), std::move(g), std::move(relations)};
  }

  in.expect_end("private key file");
  if (pre == nullptr) throw InvalidArgument("private key does not embed G; precomputed data required");
  if (pre->params != params) throw InvalidArgument("precomputed data is for a different m than the private key");
  return assemble_private_key(*pre, std::move(yset), std::move(s_inv), std::move(perm));
}

std::vector<std::uint8_t> serialize_ciphertext(const CodeParams& params, const BitWord& c) {
  if (c.size() != params.n()) throw LengthMismatch(c.size(), params.n());
  ByteWriter out;
  out.magic("HLC1");
  out.u32(params.m());
  c.serialize(out);
  return std::move(out).take();
}

BitWord deserialize_ciphertext(std::span<const std::uint8_t> bytes, CodeParams* params_out) {
  ByteReader in(bytes);
  in.expect_magic("HLC1", "ciphertext file");
  const auto params = params_from_file(in.u32(), "ciphertext file");
  auto c = BitWord::deserialize(in);
  in.expect_end("ciphertext file");
  if (c.size() != params.n()) throw FormatError("ciphertext length does not match m");
  if (params_out) *params_out = params;
  return c;
}

unsigned peek_m(std::span<const std::uint8_t> bytes, const char* magic) {
  ByteReader in(bytes);
  in.expect_magic(magic, std::string("file with magic ") + magic);
  return params_from_file(in.u32(), magic).m();
}

}  // namespace hlcode
