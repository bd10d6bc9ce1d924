#include "hlcode/cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <string>

#include "hlcode/byte_io.hpp"
#include "hlcode/cli/bench.hpp"
#include "hlcode/decoder.hpp"
#include "hlcode/dhh.hpp"

namespace hlcode::cli {

namespace {

std::span<const std::uint8_t> as_bytes(const std::vector<std::uint8_t>& v) { return v; }

BitWord read_message(const std::filesystem::path& path, std::size_t k) {
  const auto data = read_file(path);
  if (data.size() * 8 != k)
    throw InvalidArgument("message file " + path.string() + " has " + std::to_string(data.size()) +
                          " bytes; this key needs exactly " + std::to_string(k / 8));
  return BitWord::from_bytes(k, data);
}

}  // namespace

MissingPrecompute::MissingPrecompute(unsigned m, const std::filesystem::path& dir)
    : Error("precomputed files for m=" + std::to_string(m) + " not found in " + dir.string() +
            "; run `hlcode precompute --m " + std::to_string(m) + " --out " + dir.string() + "` first") {}

std::filesystem::path default_precomputed_dir() {
  if (const char* env = std::getenv("HLCODE_PRECOMPUTED"); env != nullptr && *env != '\0') return env;
  return "precomputed";
}

void cmd_precompute(const PrecomputeOptions& options, std::ostream& log) {
  const CodeParams params(options.m);
  const auto pre = Precomputed::compute(options.m, options.with_cache);
  pre.save(options.out_dir);
  log << "m=" << params.m() << ": " << pre.partial.row_count() << " fixed rows, relations for rows 1.."
      << params.fixed_rows() - 1 << " written to " << options.out_dir.string() << "\n";
}

void cmd_keygen(const KeygenOptions& options, std::ostream& log) {
  const CodeParams params(options.m);
  if (!Precomputed::available(options.precomputed, options.m)) throw MissingPrecompute(options.m, options.precomputed);
  const auto pre = Precomputed::load(options.precomputed, options.m);
  auto rng = Rng::from_optional_seed(options.seed);
  const auto keys = keygen(pre, rng);

  const auto priv_bytes = serialize_private_key(keys.priv, options.embed);
  const auto pub_bytes = serialize_public_key(keys.pub);
  write_file_atomic(options.priv, priv_bytes);
  try {
    write_file_atomic(options.pub, pub_bytes);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(options.priv, ec);
    throw;
  }
  log << "m=" << params.m() << ": wrote private key " << options.priv.string() << " (" << priv_bytes.size()
      << " bytes) and public key " << options.pub.string() << " (" << pub_bytes.size() << " bytes)\n";
}

void cmd_encrypt(const EncryptOptions& options, std::ostream& log) {
  const auto pk = deserialize_public_key(as_bytes(read_file(options.pub)));
  const auto msg = read_message(options.in, pk.params.k());
  auto rng = Rng::from_optional_seed(options.seed);
  const auto c = encrypt(pk, msg, rng);
  write_file_atomic(options.out, serialize_ciphertext(pk.params, c));
  log << "encrypted " << pk.params.k() << " bits into " << options.out.string() << "\n";
}

void cmd_decrypt(const DecryptOptions& options, std::ostream& log) {
  const auto key_bytes = read_file(options.priv);
  const auto m = peek_m(key_bytes, "HLK1");
  std::optional<Precomputed> pre;
  if (!private_key_embeds(key_bytes)) {
    if (!Precomputed::available(options.precomputed, m)) throw MissingPrecompute(m, options.precomputed);
    pre = Precomputed::load(options.precomputed, m);
  }
  const auto sk = deserialize_private_key(key_bytes, pre ? &*pre : nullptr);

  CodeParams c_params(m);
  const auto c = deserialize_ciphertext(read_file(options.in), &c_params);
  if (c_params != sk.params) throw InvalidArgument("ciphertext was produced for m=" + std::to_string(c_params.m()));
  const auto msg = decrypt(sk, c, DecodeOptions{options.threads});
  write_file_atomic(options.out, msg.to_bytes());
  log << "decrypted " << sk.params.k() << " bits into " << options.out.string() << "\n";
}

bool cmd_selftest(const SelftestOptions& options, std::ostream& out) {
  bool all = true;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << "\n";
    all = all && ok;
  };

  // m = 4: every message, every error of weight <= t
  {
    const CodeParams p(4);
    const auto pre = Precomputed::compute(4);
    Rng rng(1);
    const auto keys = keygen(pre, rng);
    std::size_t ok = 0;
    std::size_t total = 0;
    for (std::size_t a = 0; a < (std::size_t{1} << p.k()); ++a) {
      BitWord msg(p.k());
      for (std::size_t b = 0; b < p.k(); ++b)
        if ((a >> b) & 1U) msg.set(b);
      const auto x = encode(msg, keys.priv.g);
      for (std::size_t e = 0; e <= p.n(); ++e) {
        auto word = x;
        if (e < p.n()) word.flip(e);
        ++total;
        try {
          const auto outcome = decode(word, keys.priv.g, keys.priv.relations);
          if (outcome.message == msg && outcome.codeword == x) ++ok;
        } catch (const DecodeFailure&) {
        }
      }
    }
    report(ok == total, "m=4 exhaustive decode " + std::to_string(ok) + "/" + std::to_string(total));
  }

  const unsigned m = options.m.value_or(6);
  try {
    const CodeParams p(m);
    const auto pre = Precomputed::compute(m);
    Rng rng(2);
    std::size_t ok = 0;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
      static thread_local std::optional<KeyPair> keys;
      if (trial % 50 == 0) keys = keygen(pre, rng);
      BitWord msg(p.k());
      for (std::size_t b = 0; b < p.k(); ++b)
        if (rng.coin()) msg.set(b);
      const auto c = encrypt(keys->pub, msg, rng);
      try {
        if (decrypt(keys->priv, c) == msg) ++ok;
      } catch (const DecryptionError&) {
      }
    }
    report(ok == options.trials,
           "m=" + std::to_string(m) + " roundtrips " + std::to_string(ok) + "/" + std::to_string(options.trials));
  } catch (const Error& e) {
    report(false, std::string("m=") + std::to_string(m) + ": " + e.what());
  }
  return all;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"HL-code majority-logic decoder and McEliece-type cryptosystem"};
  app.require_subcommand(1);

  auto even_m = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          CodeParams(static_cast<unsigned>(std::stoul(s)));
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "EVEN_M");

  PrecomputeOptions pre_opts;
  auto* precompute = app.add_subcommand("precompute", "write the partial generator matrix and fixed-row relations");
  precompute->add_option("--m", pre_opts.m, "even code parameter")->required()->check(even_m);
  precompute->add_option("--out", pre_opts.out_dir, "output directory")->required();
  precompute->add_flag("--with-cache", pre_opts.with_cache, "also persist the Delta cache");

  KeygenOptions key_opts;
  std::uint64_t key_seed = 0;
  auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  keygen_cmd->add_option("--m", key_opts.m, "even code parameter")->required()->check(even_m);
  auto* key_seed_opt = keygen_cmd->add_option("--seed", key_seed, "deterministic seed");
  keygen_cmd->add_option("--priv", key_opts.priv, "private key output")->required();
  keygen_cmd->add_option("--pub", key_opts.pub, "public key output")->required();
  keygen_cmd->add_option("--precomputed", key_opts.precomputed, "directory with precomputed files");
  keygen_cmd->add_flag("--embed", key_opts.embed, "embed G and all relations in the private key");

  EncryptOptions enc_opts;
  std::uint64_t enc_seed = 0;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a k/8-byte message file");
  encrypt_cmd->add_option("--pub", enc_opts.pub, "public key")->required();
  encrypt_cmd->add_option("--in", enc_opts.in, "message file")->required();
  encrypt_cmd->add_option("--out", enc_opts.out, "ciphertext output")->required();
  auto* enc_seed_opt = encrypt_cmd->add_option("--seed", enc_seed, "deterministic seed for the error vector");

  DecryptOptions dec_opts;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext file");
  decrypt_cmd->add_option("--priv", dec_opts.priv, "private key")->required();
  decrypt_cmd->add_option("--in", dec_opts.in, "ciphertext file")->required();
  decrypt_cmd->add_option("--out", dec_opts.out, "message output")->required();
  decrypt_cmd->add_option("--precomputed", dec_opts.precomputed, "directory with precomputed files");
  decrypt_cmd->add_option("--threads", dec_opts.threads, "threads per decoding level");

  BenchOptions bench_opts;
  bench_opts.precomputed = default_precomputed_dir();
  std::filesystem::path csv_path;
  std::uint64_t bench_seed = 0;
  auto* bench_cmd = app.add_subcommand("bench", "time keygen/encrypt/decrypt and write per-trial CSV");
  bench_cmd->add_option("--m", bench_opts.m, "even code parameter")->required()->check(even_m);
  bench_cmd->add_option("--trials", bench_opts.trials, "number of trials")->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", csv_path, "CSV output")->required();
  bench_cmd->add_option("--precomputed", bench_opts.precomputed, "directory with precomputed files");
  auto* bench_seed_opt = bench_cmd->add_option("--seed", bench_seed, "deterministic seed");
  bench_cmd->add_option("--threads", bench_opts.threads, "threads per decoding level");

  SelftestOptions self_opts;
  unsigned self_m = 6;
  auto* selftest = app.add_subcommand("selftest", "run built-in consistency checks");
  auto* self_m_opt = selftest->add_option("--m", self_m, "even code parameter for the roundtrip check")->check(even_m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (precompute->parsed()) {
      cmd_precompute(pre_opts, out);
    } else if (keygen_cmd->parsed()) {
      if (*key_seed_opt) key_opts.seed = key_seed;
      cmd_keygen(key_opts, out);
    } else if (encrypt_cmd->parsed()) {
      if (*enc_seed_opt) enc_opts.seed = enc_seed;
      cmd_encrypt(enc_opts, out);
    } else if (decrypt_cmd->parsed()) {
      cmd_decrypt(dec_opts, out);
    } else if (bench_cmd->parsed()) {
      if (*bench_seed_opt) bench_opts.seed = bench_seed;
      const auto records = run_bench(bench_opts, &err);
      write_csv(csv_path, records);
      print_summary(out, summarize(records));
    } else if (selftest->parsed()) {
      if (*self_m_opt) self_opts.m = self_m;
      return cmd_selftest(self_opts, out) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hlcode::cli
