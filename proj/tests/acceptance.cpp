// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "hlcode/byte_io.hpp"
#include "hlcode/cli/bench.hpp"
#include "hlcode/cli/commands.hpp"
#include "hlcode/decoder.hpp"
#include "hlcode/dhh.hpp"
#include "hlcode/errors.hpp"
#include "hlcode/hl_code.hpp"
#include "hlcode/relations.hpp"
#include "hlcode/rng.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hlcode;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BitWord message_from_index(std::uint64_t a, std::size_t k) {
  BitWord msg(k);
  for (std::size_t b = 0; b < k; ++b)
    if ((a >> b) & 1U) msg.set(b);
  return msg;
}

BitWord random_message(std::size_t k, Rng& rng) {
  BitWord msg(k);
  for (std::size_t b = 0; b < k; ++b)
    if (rng.coin()) msg.set(b);
  return msg;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

GeneratorMatrix golden_matrix() { return build_generator_matrix(build_partial_generator_matrix(4), golden::m4_yset()); }

RelationDictionary golden_relations() {
  const CodeParams p(4);
  const auto y = golden::m4_yset();
  DeltaCache cache;
  return redundancy_relations_set(p, &y, cache, 1, 7);
}

Outcome golden_relations_check() {
  constexpr double kBudget = 1.0;
  const auto start = Clock::now();
  const auto dict = golden_relations();
  std::size_t mismatches = 0;
  for (std::size_t row = 1; row <= 7; ++row) {
    const auto* rel = dict.find_row(row);
    const auto& expected = golden::m4_relations()[row];
    if (rel == nullptr || rel->masks.size() != expected.size()) {
      ++mismatches;
      continue;
    }
    for (std::size_t j = 0; j < expected.size(); ++j)
      if (rel->masks[j].positions() != expected[j]) ++mismatches;
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && dict.row_count() == 7 && t < kBudget,
          std::to_string(mismatches) + " mismatched relations, " + fmt("%.4f s", t)};
}

Outcome golden_matrix_check() {
  constexpr double kBudget = 1.0;
  const auto start = Clock::now();
  const auto g = golden_matrix();
  std::size_t bad_bits = 0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      if (g.row(r).test(c) != (golden::kM4Matrix[r][c] == '1')) ++bad_bits;
  const double t = seconds_since(start);
  return {g.row_count() == 8 && bad_bits == 0 && t < kBudget,
          std::to_string(bad_bits) + " differing bits, " + fmt("%.4f s", t)};
}

Outcome exhaustive_decode_check() {
  constexpr double kBudget = 10.0;
  const auto start = Clock::now();
  const auto g = golden_matrix();
  const auto rel = golden_relations();
  std::vector<oracle::Bits> rows;
  for (const auto& r : g.rows()) rows.push_back(testing_support::to_bits(r));
  std::size_t ok = 0;
  std::size_t total = 0;
  for (std::uint64_t a = 0; a < 256; ++a) {
    const auto msg = message_from_index(a, 8);
    const auto x = encode(msg, g);
    for (std::size_t e = 0; e <= 16; ++e) {
      auto y = x;
      if (e < 16) y.flip(e);
      ++total;
      const auto nearest = oracle::nearest_codeword(rows, testing_support::to_bits(y));
      if (!nearest.unique || nearest.message != a) continue;
      try {
        const auto out = decode(y, g, rel);
        if (out.message == msg && out.codeword == x) ++ok;
      } catch (const DecodeFailure&) {
      }
    }
  }
  const double t = seconds_since(start);
  return {ok == 4352 && total == 4352 && t < kBudget,
          std::to_string(ok) + "/" + std::to_string(total) + " decoded, " + fmt("%.3f s", t)};
}

Outcome minimum_distance_check() {
  std::size_t violations = 0;
  const auto g4 = golden_matrix();
  std::size_t min4 = 16;
  for (std::uint64_t a = 1; a < 256; ++a) {
    const auto w = encode(message_from_index(a, 8), g4).weight();
    min4 = std::min(min4, w);
    if (w < 4) ++violations;
  }

  constexpr std::size_t kSamples = 100000;
  Rng rng(0x6d696e64);
  const auto y6 = complement_free_set(6, rng);
  const auto g6 = build_generator_matrix(build_partial_generator_matrix(6), y6);
  std::size_t min6 = 64;
  std::size_t sampled = 0;
  while (sampled < kSamples) {
    const auto msg = random_message(32, rng);
    if (msg.none()) continue;
    ++sampled;
    const auto w = encode(msg, g6).weight();
    min6 = std::min(min6, w);
    if (w < 8) ++violations;
  }
  return {violations == 0, "m=4 min weight " + std::to_string(min4) + " over 255, m=6 min weight " +
                               std::to_string(min6) + " over " + std::to_string(sampled) + " samples"};
}

Outcome partition_check() {
  constexpr double kBudget = 60.0;
  const auto start = Clock::now();
  std::size_t violations = 0;
  std::size_t rows_checked = 0;
  for (unsigned m : {4U, 6U, 8U, 10U}) {
    const CodeParams p(m);
    Rng rng(1000 + m);
    const auto y = complement_free_set(m, rng);
    DeltaCache cache;
    const auto dict = redundancy_relations_set(p, &y, cache, 1, p.k() - 1);
    if (dict.row_count() != p.k() - 1) ++violations;
    for (const auto& [u, entries] : dict.by_degree()) {
      for (const auto& rel : entries) {
        ++rows_checked;
        bool row_ok = rel->masks.size() == (std::size_t{1} << (m - u));
        BitWord seen(p.n());
        for (const auto& mask : rel->masks) {
          row_ok = row_ok && mask.weight() == (std::size_t{1} << u) && and_popcount(seen, mask) == 0;
          seen |= mask;
        }
        row_ok = row_ok && seen.weight() == p.n();
        if (!row_ok) ++violations;
      }
    }
  }
  const double t = seconds_since(start);
  return {violations == 0 && t < kBudget, std::to_string(violations) + " violations over " +
                                              std::to_string(rows_checked) + " rows, " + fmt("%.2f s", t)};
}

Outcome delta_check() {
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  for (unsigned m : {4U, 6U}) {
    DeltaCache cache;
    const std::size_t n = std::size_t{1} << m;
    for (unsigned r = 1; r <= m; ++r) {
      for (const auto& tuple : oracle::combinations(m, r)) {
        for (std::size_t i = 0; i < n; ++i) {
          ++checked;
          const auto got = delta(IndexTuple(tuple), static_cast<Position>(i), m, cache).positions();
          const auto want = oracle::coset(i, tuple);
          if (std::set<std::size_t>(got.begin(), got.end()) != want) ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over " + std::to_string(checked) + " pairs"};
}

Outcome roundtrip_check() {
  constexpr double kBudget = 600.0;
  constexpr std::size_t kTrials = 1000;
  constexpr std::size_t kKeyEvery = 50;
  const auto start = Clock::now();
  std::string detail;
  bool all = true;
  for (unsigned m : {6U, 8U, 10U}) {
    const auto pre = Precomputed::compute(m);
    Rng rng(0x7274 + m);
    std::optional<KeyPair> keys;
    std::size_t ok = 0;
    for (std::size_t trial = 0; trial < kTrials; ++trial) {
      if (trial % kKeyEvery == 0) keys = keygen(pre, rng);
      const auto msg = random_message(keys->pub.params.k(), rng);
      const auto c = encrypt(keys->pub, msg, rng);
      try {
        if (decrypt(keys->priv, c) == msg) ++ok;
      } catch (const DecryptionError&) {
      }
    }
    all = all && ok == kTrials;
    detail += "m=" + std::to_string(m) + " " + std::to_string(ok) + "/" + std::to_string(kTrials) + ", ";
  }
  const double t = seconds_since(start);
  return {all && t < kBudget, detail + fmt("%.1f s", t)};
}

Outcome margin_check() {
  constexpr unsigned kM = 8;
  constexpr std::size_t kTrials = 100;
  const auto pre = Precomputed::compute(kM);
  Rng rng(0x746831);
  const auto keys = keygen(pre, rng);
  const auto& g = keys.priv.g;
  const auto& rel = keys.priv.relations;
  const CodeParams& p = g.params();
  std::size_t violations = 0;
  std::size_t coefficients = 0;
  std::size_t min_slack = p.n();
  for (std::size_t trial = 0; trial < kTrials; ++trial) {
    const auto a = random_message(p.k(), rng);
    const auto e = random_error(p, p.t(), rng);
    DecodeTrace trace;
    DecodeOutcome out;
    try {
      out = decode(encode(a, g) ^ e, g, rel, {}, &trace);
    } catch (const DecodeFailure&) {
      ++violations;
      continue;
    }
    if (out.message != a || out.error != e) ++violations;
    for (const auto& level : trace.levels) {
      const std::size_t l = std::size_t{1} << (kM - level.degree);
      for (const auto& r : rel.degree(level.degree)) {
        ++coefficients;
        const auto v = count_votes(*r, level.input);
        const std::size_t agreeing = a.test(r->row) ? v.ones : v.zeros;
        if (agreeing + p.t() < l) {
          ++violations;
        } else {
          min_slack = std::min(min_slack, agreeing + p.t() - l);
        }
      }
    }
  }
  return {violations == 0 && coefficients == kTrials * (p.k() - 1),
          std::to_string(violations) + " violations over " + std::to_string(coefficients) +
              " coefficient votes, min slack " + std::to_string(min_slack)};
}

Outcome bench_check() {
  struct Target {
    unsigned m;
    std::size_t trials;
    double decrypt_reference;
  };
  const std::vector<Target> targets{{10, 20, 0.1758}, {12, 5, 3.5341}};
  testing_support::TempDir dir;
  bool all = true;
  std::string detail;
  for (const auto& target : targets) {
    cli::BenchOptions opts;
    opts.m = target.m;
    opts.trials = target.trials;
    opts.precomputed = dir.path();
    opts.seed = 0x62656e63 + target.m;
    const auto summary = cli::summarize(cli::run_bench(opts, nullptr));
    double enc = -1;
    double dec = -1;
    for (const auto& s : summary) {
      if (s.operation == cli::Operation::encrypt) enc = s.mean_seconds;
      if (s.operation == cli::Operation::decrypt) dec = s.mean_seconds;
    }
    const bool ok = dec > 0 && dec < target.decrypt_reference && enc > 0 && enc < dec;
    all = all && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "m=%u encrypt %.6f s < decrypt %.6f s < %.4f s", target.m, enc, dec,
                  target.decrypt_reference);
    if (!detail.empty()) detail += "; ";
    detail += buf;
  }
  return {all, detail};
}

Outcome determinism_check() {
  testing_support::TempDir dir;
  const auto pre_dir = dir.path() / "pre";
  cli::PrecomputeOptions po;
  po.m = 6;
  po.out_dir = pre_dir;
  std::ostringstream log;
  cli::cmd_precompute(po, log);

  bool ok = true;
  std::string detail;
  for (bool embed : {false, true}) {
    std::vector<std::vector<std::uint8_t>> privs;
    std::vector<std::vector<std::uint8_t>> pubs;
    for (int run = 0; run < 2; ++run) {
      cli::KeygenOptions ko;
      ko.m = 6;
      ko.seed = 0x64657465;
      ko.priv = dir.path() / ("k" + std::to_string(run) + ".priv");
      ko.pub = dir.path() / ("k" + std::to_string(run) + ".pub");
      ko.precomputed = pre_dir;
      ko.embed = embed;
      cli::cmd_keygen(ko, log);
      privs.push_back(read_file(ko.priv));
      pubs.push_back(read_file(ko.pub));
    }
    const bool same = privs[0] == privs[1] && pubs[0] == pubs[1];
    ok = ok && same;
    detail += std::string(embed ? "embedded" : "plain") + " keys " + (same ? "identical" : "differ") + ", ";
  }

  // Persisted artefacts reload bit-exactly.
  const auto pre = Precomputed::compute(8, true);
  pre.save(dir.path() / "pre8");
  const auto back = Precomputed::load(dir.path() / "pre8", 8);
  bool reload = back.partial.rows() == pre.partial.rows() && back.fixed_relations == pre.fixed_relations &&
                back.cache.size() == pre.cache.size();
  Rng rng(0x72656c);
  const auto keys = keygen(pre, rng);
  save_matrix(dir.path() / "g.hlg", keys.priv.g);
  save_relations(dir.path() / "r.hlr", keys.priv.relations);
  reload = reload && load_matrix(dir.path() / "g.hlg").rows() == keys.priv.g.rows();
  // The relations file covers the whole dictionary of the key.
  reload = reload && load_relations(dir.path() / "r.hlr") == keys.priv.relations;
  const auto priv_bytes = serialize_private_key(keys.priv, true);
  reload = reload && serialize_private_key(deserialize_private_key(priv_bytes, nullptr), true) == priv_bytes;
  ok = ok && reload;
  detail += std::string("reload ") + (reload ? "bit-exact" : "differs");
  return {ok, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden m=4 relations", golden_relations_check},
      {2, "golden m=4 generator matrix", golden_matrix_check},
      {3, "exhaustive m=4 decode vs nearest codeword", exhaustive_decode_check},
      {4, "minimum distance", minimum_distance_check},
      {5, "relation partition and counts", partition_check},
      {6, "delta closed form", delta_check},
      {7, "randomized encrypt/decrypt roundtrip", roundtrip_check},
      {8, "majority margin under t errors", margin_check},
      {9, "decryption timing vs reference", bench_check},
      {10, "determinism and bit-exact reload", determinism_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
