#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "hlcode/bitword.hpp"
#include "hlcode/decoder.hpp"
#include "hlcode/gf2_matrix.hpp"
#include "hlcode/hl_code.hpp"
#include "hlcode/params.hpp"
#include "hlcode/relations.hpp"
#include "hlcode/rng.hpp"

namespace hlcode {

/// Column permutation rho of {0..n-1}: rho(x) moves component i to
/// position forward[i]; inverse[forward[i]] == i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `forward` is a permutation.
  explicit Permutation(std::vector<std::uint32_t> forward);

  static Permutation random(std::size_t n, Rng& rng);

  std::size_t size() const noexcept { return forward_.size(); }
  const std::vector<std::uint32_t>& forward() const noexcept { return forward_; }
  const std::vector<std::uint32_t>& inverse() const noexcept { return inverse_; }

  BitWord apply(const BitWord& x) const;
  BitWord apply_inverse(const BitWord& y) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

/// Everything about an HL-code that every key of a given m shares: the
/// partial generator matrix and the relations of the fixed rows, plus an
/// optional warm Delta cache.
struct Precomputed {
  CodeParams params;
  GeneratorMatrix partial;
  RelationDictionary fixed_relations;
  DeltaCache cache;

  /// Builds both parts in memory. keep_cache retains the Delta cache.
  static Precomputed compute(unsigned m, bool keep_cache = false);

  static std::filesystem::path matrix_path(const std::filesystem::path& dir, unsigned m);
  static std::filesystem::path relations_path(const std::filesystem::path& dir, unsigned m);
  static std::filesystem::path cache_path(const std::filesystem::path& dir, unsigned m);

  /// Writes the matrix and relations files, and the cache file if non-empty.
  void save(const std::filesystem::path& dir) const;
  /// Loads the files written by save(). Throws IoError if they are missing,
  /// FormatError if they are corrupt or belong to a different m. The cache
  /// file is loaded when present and `load_cache` is set.
  static Precomputed load(const std::filesystem::path& dir, unsigned m, bool load_cache = true);
  static bool available(const std::filesystem::path& dir, unsigned m);
};

struct PublicKey {
  CodeParams params;
  BitMatrix g_prime;  ///< rho(S * G), k x n
};

struct PrivateKey {
  CodeParams params;
  BitMatrix s_inv;  ///< k x k
  Permutation perm;
  GeneratorMatrix g;
  RelationDictionary relations;

  const ComplementFreeSet& yset() const { return *g.yset(); }
};

struct KeyPair {
  PrivateKey priv;
  PublicKey pub;
};

/// Uniform random invertible k x k matrix S (rejection sampling) and S^-1.
std::pair<BitMatrix, BitMatrix> random_invertible_matrix(std::size_t k, Rng& rng);

/// Draws the Y-set, then S, then rho, in that order from `rng`.
KeyPair keygen(const Precomputed& pre, Rng& rng);

/// Weight-t error pattern with uniformly chosen distinct positions.
BitWord random_error(const CodeParams& params, std::size_t weight, Rng& rng);

/// c = msg * G' + e with wt(e) = t exactly.
BitWord encrypt(const PublicKey& pk, const BitWord& msg, Rng& rng);

/// Throws DecryptionError if decoding fails.
BitWord decrypt(const PrivateKey& sk, const BitWord& ciphertext, const DecodeOptions& options = {});

// Key and ciphertext files.
//
// Public:  "HLP1", m u32, G' as k rows of n/8 packed bytes.
// Private: "HLK1", m u32, S^-1 as k rows of k/8 packed bytes, rho^-1 and rho
//          as n u32 each, Y-set body (m, count, tuples), embed flag u8
//          (1 = complete G and relations follow as HLG1 and HLR1 blocks),
//          then the 32-byte BLAKE2b hash of every preceding byte.
// Ciphertext: "HLC1", m u32, BitWord serialization.

std::vector<std::uint8_t> serialize_public_key(const PublicKey& pk);
PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> serialize_private_key(const PrivateKey& sk, bool embed = false);
/// `pre` supplies G and the fixed relations when the file does not embed
/// them; throws InvalidArgument if it is needed but null.
PrivateKey deserialize_private_key(std::span<const std::uint8_t> bytes, const Precomputed* pre);
/// True if the private key bytes embed G and relations.
bool private_key_embeds(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> serialize_ciphertext(const CodeParams& params, const BitWord& c);
BitWord deserialize_ciphertext(std::span<const std::uint8_t> bytes, CodeParams* params = nullptr);

/// Reads the m field of a key or ciphertext file after checking its magic.
unsigned peek_m(std::span<const std::uint8_t> bytes, const char* magic);

/// Assembles the private key derived from the key material.
PrivateKey assemble_private_key(const Precomputed& pre, ComplementFreeSet yset, BitMatrix s_inv,
                                Permutation perm);

}  // namespace hlcode
