#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hlcode::cli {

enum class Operation { keygen, encrypt, decrypt };

const char* to_string(Operation op) noexcept;

struct BenchRecord {
  Operation operation;
  unsigned m;
  std::size_t trial;
  double wall_seconds;
};

struct BenchSummary {
  Operation operation;
  unsigned m;
  std::size_t trials;
  double mean_seconds;
  double median_seconds;
};

struct BenchOptions {
  unsigned m = 10;
  std::size_t trials = 10;
  /// Directory holding the precomputed files. Filled on demand (untimed)
  /// when they are missing.
  std::filesystem::path precomputed = "precomputed";
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

/// Runs `trials` rounds of keygen (including loading the precomputed files
/// from disk), encrypt of a random message and decrypt, timing each with a
/// monotonic wall clock. Throws if any roundtrip does not return the message.
std::vector<BenchRecord> run_bench(const BenchOptions& options, std::ostream* log = nullptr);

/// One summary per (operation, m), in keygen/encrypt/decrypt order.
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

/// Header `operation,m,trial,wall_seconds`, one row per record.
void write_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records);
std::string to_csv(const std::vector<BenchRecord>& records);

/// Published reference means (seconds) for m = 10 and m = 12, from an
/// interpreted implementation on a 2.2 GHz laptop.
struct ReferenceTiming {
  unsigned m;
  double keygen;
  double encrypt;
  double decrypt;
};
std::optional<ReferenceTiming> reference_timing(unsigned m);

/// Table of mean/median per operation, with the reference means alongside.
void print_summary(std::ostream& out, const std::vector<BenchSummary>& summaries);

}  // namespace hlcode::cli
