#include "hlcode/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "hlcode/byte_io.hpp"
#include "hlcode/dhh.hpp"
#include "hlcode/errors.hpp"

namespace hlcode::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  const std::chrono::duration<double> d = Clock::now() - start;
  return std::max(d.count(), 1e-9);
}

BitWord random_message(std::size_t k, Rng& rng) {
  BitWord msg(k);
  for (std::size_t i = 0; i < k; ++i)
    if (rng.coin()) msg.set(i);
  return msg;
}

}  // namespace

const char* to_string(Operation op) noexcept {
  switch (op) {
    case Operation::keygen:
      return "keygen";
    case Operation::encrypt:
      return "encrypt";
    case Operation::decrypt:
      return "decrypt";
  }
  return "?";
}

std::vector<BenchRecord> run_bench(const BenchOptions& options, std::ostream* log) {
  if (options.trials == 0) throw InvalidArgument("bench needs at least one trial");
  const CodeParams params(options.m);
  if (!Precomputed::available(options.precomputed, options.m)) {
    if (log) *log << "precomputing m=" << options.m << " into " << options.precomputed.string() << " (untimed)\n";
    Precomputed::compute(options.m).save(options.precomputed);
  }

  auto rng = Rng::from_optional_seed(options.seed);
  const DecodeOptions decode_options{options.threads};
  std::vector<BenchRecord> records;
  records.reserve(3 * options.trials);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    auto start = Clock::now();
    const auto pre = Precomputed::load(options.precomputed, options.m);
    const auto keys = keygen(pre, rng);
    records.push_back({Operation::keygen, options.m, trial, seconds_since(start)});

    const auto msg = random_message(params.k(), rng);
    start = Clock::now();
    const auto c = encrypt(keys.pub, msg, rng);
    records.push_back({Operation::encrypt, options.m, trial, seconds_since(start)});

    start = Clock::now();
    const auto recovered = decrypt(keys.priv, c, decode_options);
    records.push_back({Operation::decrypt, options.m, trial, seconds_since(start)});

    if (recovered != msg) throw Error("bench: decrypt did not return the encrypted message");
    if (log && (trial + 1) % 10 == 0) *log << "  m=" << options.m << " trial " << trial + 1 << "/" << options.trials << "\n";
  }
  return records;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<BenchSummary> out;
  std::vector<unsigned> ms;
  for (const auto& r : records)
    if (std::find(ms.begin(), ms.end(), r.m) == ms.end()) ms.push_back(r.m);
  for (auto m : ms) {
    for (auto op : {Operation::keygen, Operation::encrypt, Operation::decrypt}) {
      std::vector<double> times;
      for (const auto& r : records)
        if (r.m == m && r.operation == op) times.push_back(r.wall_seconds);
      if (times.empty()) continue;
      std::sort(times.begin(), times.end());
      double sum = 0;
      for (auto t : times) sum += t;
      const auto mid = times.size() / 2;
      const double median = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
      out.push_back({op, m, times.size(), sum / static_cast<double>(times.size()), median});
    }
  }
  return out;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "operation,m,trial,wall_seconds\n";
  char buf[64];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%.9f", r.wall_seconds);
    out << to_string(r.operation) << ',' << r.m << ',' << r.trial << ',' << buf << '\n';
  }
  return out.str();
}

void write_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
  const auto text = to_csv(records);
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::optional<ReferenceTiming> reference_timing(unsigned m) {
  if (m == 10) return ReferenceTiming{10, 0.3297, 0.0023, 0.1758};
  if (m == 12) return ReferenceTiming{12, 6.5884, 0.0094, 3.5341};
  return std::nullopt;
}

void print_summary(std::ostream& out, const std::vector<BenchSummary>& summaries) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %3s %7s %12s %12s %14s\n", "op", "m", "trials", "mean_s", "median_s",
                "reference_s");
  out << line;
  for (const auto& s : summaries) {
    const auto ref = reference_timing(s.m);
    double ref_value = -1;
    if (ref) {
      ref_value = s.operation == Operation::keygen    ? ref->keygen
                  : s.operation == Operation::encrypt ? ref->encrypt
                                                      : ref->decrypt;
    }
    if (ref_value >= 0)
      std::snprintf(line, sizeof(line), "%-8s %3u %7zu %12.6f %12.6f %14.4f\n", to_string(s.operation), s.m, s.trials,
                    s.mean_seconds, s.median_seconds, ref_value);
    else
      std::snprintf(line, sizeof(line), "%-8s %3u %7zu %12.6f %12.6f %14s\n", to_string(s.operation), s.m, s.trials,
                    s.mean_seconds, s.median_seconds, "-");
    out << line;
  }
}

}  // namespace hlcode::cli
