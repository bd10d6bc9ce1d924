#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "hlcode/errors.hpp"

namespace hlcode::cli {

/// The precomputed files for an m are absent; the message names the
/// `precompute` command that creates them.
class MissingPrecompute : public Error {
 public:
  MissingPrecompute(unsigned m, const std::filesystem::path& dir);
};

/// Default directory for precomputed files: $HLCODE_PRECOMPUTED, else ./precomputed.
std::filesystem::path default_precomputed_dir();

struct PrecomputeOptions {
  unsigned m = 10;
  std::filesystem::path out_dir;
  bool with_cache = false;
};
void cmd_precompute(const PrecomputeOptions& options, std::ostream& log);

struct KeygenOptions {
  unsigned m = 10;
  std::optional<std::uint64_t> seed;
  std::filesystem::path priv;
  std::filesystem::path pub;
  std::filesystem::path precomputed = default_precomputed_dir();
  bool embed = false;
};
void cmd_keygen(const KeygenOptions& options, std::ostream& log);

struct EncryptOptions {
  std::filesystem::path pub;
  std::filesystem::path in;
  std::filesystem::path out;
  std::optional<std::uint64_t> seed;
};
void cmd_encrypt(const EncryptOptions& options, std::ostream& log);

struct DecryptOptions {
  std::filesystem::path priv;
  std::filesystem::path in;
  std::filesystem::path out;
  std::filesystem::path precomputed = default_precomputed_dir();
  unsigned threads = 1;
};
void cmd_decrypt(const DecryptOptions& options, std::ostream& log);

struct SelftestOptions {
  std::optional<unsigned> m;
  std::size_t trials = 100;
};
/// Prints one PASS/FAIL line per check; true iff all pass.
bool cmd_selftest(const SelftestOptions& options, std::ostream& out);

/// Parses argv and dispatches. Returns the process exit code: 0 on success,
/// 1 when the operation failed, 2 on a usage error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hlcode::cli
