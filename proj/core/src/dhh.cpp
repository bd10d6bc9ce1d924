#include "hlcode/dhh.hpp"

#include <numeric>
#include <string>

#include "hlcode/errors.hpp"

namespace hlcode {

namespace {

BitWord random_word(std::size_t len, Rng& rng) {
  BitWord w(len);
  auto words = w.mutable_words();
  for (auto& x : words) x = rng();
  if (const auto tail = len % BitWord::kWordBits; tail != 0) words.back() &= (BitWord::Word{1} << tail) - 1;
  return w;
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> forward) : forward_(std::move(forward)), inverse_(forward_.size()) {
  std::vector<bool> seen(forward_.size(), false);
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    const auto p = forward_[i];
    if (p >= forward_.size() || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
    inverse_[p] = static_cast<std::uint32_t>(i);
  }
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> forward(n);
  std::iota(forward.begin(), forward.end(), 0U);
  rng.shuffle(forward.begin(), forward.end());
  return Permutation(std::move(forward));
}

BitWord Permutation::apply(const BitWord& x) const {
  if (x.size() != size()) throw LengthMismatch(x.size(), size());
  BitWord y(size());
  for (auto i : x.positions()) y.set(forward_[i]);
  return y;
}

BitWord Permutation::apply_inverse(const BitWord& y) const {
  if (y.size() != size()) throw LengthMismatch(y.size(), size());
  BitWord x(size());
  for (auto p : y.positions()) x.set(inverse_[p]);
  return x;
}

Precomputed Precomputed::compute(unsigned m, bool keep_cache) {
  const CodeParams params(m);
  DeltaCache cache;
  auto partial = build_partial_generator_matrix(m);
  auto fixed = hlcode::fixed_relations(params, cache);
  if (!keep_cache) cache.clear();
  return Precomputed{params, std::move(partial), std::move(fixed), std::move(cache)};
}

std::filesystem::path Precomputed::matrix_path(const std::filesystem::path& dir, unsigned m) {
  return dir / ("hl_m" + std::to_string(m) + "_partial.hlg");
}

std::filesystem::path Precomputed::relations_path(const std::filesystem::path& dir, unsigned m) {
  return dir / ("hl_m" + std::to_string(m) + "_fixed.hlr");
}

std::filesystem::path Precomputed::cache_path(const std::filesystem::path& dir, unsigned m) {
  return dir / ("hl_m" + std::to_string(m) + "_cache.hlx");
}

void Precomputed::save(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
  save_matrix(matrix_path(dir, params.m()), partial);
  save_relations(relations_path(dir, params.m()), fixed_relations);
  if (!cache.empty()) save_cache(cache_path(dir, params.m()), params.m(), cache);
}

bool Precomputed::available(const std::filesystem::path& dir, unsigned m) {
  return std::filesystem::is_regular_file(matrix_path(dir, m)) && std::filesystem::is_regular_file(relations_path(dir, m));
}

Precomputed Precomputed::load(const std::filesystem::path& dir, unsigned m, bool load_cache_file) {
  const CodeParams params(m);
  for (const auto& p : {matrix_path(dir, m), relations_path(dir, m)})
    if (!std::filesystem::is_regular_file(p)) throw IoError("missing precomputed file " + p.string());

  auto partial = load_matrix(matrix_path(dir, m));
  if (partial.params() != params || partial.row_count() != params.fixed_rows() ||
      partial != build_partial_generator_matrix(m))
    throw FormatError("precomputed matrix " + matrix_path(dir, m).string() + " is not the partial matrix for m = " +
                      std::to_string(m));

  RelationsHeader header{};
  auto fixed = load_relations(relations_path(dir, m), &header);
  if (header.m != m || header.j_start != 1 || header.j_end + 1 != params.fixed_rows())
    throw FormatError("precomputed relations " + relations_path(dir, m).string() + " do not cover the fixed rows for m = " +
                      std::to_string(m));
  for (const auto& [degree, list] : fixed.by_degree())
    for (const auto& set : list)
      if (set->tuple != row_to_comb(set->row, m, nullptr))
        throw FormatError("precomputed relations: row " + std::to_string(set->row) + " has the wrong index tuple");

  DeltaCache cache;
  if (load_cache_file && std::filesystem::is_regular_file(cache_path(dir, m))) cache = load_cache(cache_path(dir, m), m);
  return Precomputed{params, std::move(partial), std::move(fixed), std::move(cache)};
}

std::pair<BitMatrix, BitMatrix> random_invertible_matrix(std::size_t k, Rng& rng) {
  if (k == 0) throw InvalidArgument("random_invertible_matrix: k must be positive");
  for (;;) {
    std::vector<BitWord> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_word(k, rng));
    BitMatrix s(std::move(rows));
    if (auto inv = s.inverse()) return {std::move(s), std::move(*inv)};
  }
}

PrivateKey assemble_private_key(const Precomputed& pre, ComplementFreeSet yset, BitMatrix s_inv, Permutation perm) {
  const auto& params = pre.params;
  if (yset.m() != params.m()) throw InvalidArgument("Y-set does not match the precomputed m");
  if (s_inv.rows() != params.k() || s_inv.cols() != params.k()) throw InvalidArgument("S^-1 must be k x k");
  if (perm.size() != params.n()) throw InvalidArgument("permutation must act on n positions");

  auto g = build_generator_matrix(pre.partial, yset);
  DeltaCache cache(&pre.cache);
  RelationDictionary relations = pre.fixed_relations;
  relations.merge(redundancy_relations_set(params, &yset, cache, params.fixed_rows(), params.k() - 1));
  return PrivateKey{params, std::move(s_inv), std::move(perm), std::move(g), std::move(relations)};
}

KeyPair keygen(const Precomputed& pre, Rng& rng) {
  const auto& params = pre.params;
  auto yset = complement_free_set(params.m(), rng);
  auto [s, s_inv] = random_invertible_matrix(params.k(), rng);
  auto perm = Permutation::random(params.n(), rng);

  auto priv = assemble_private_key(pre, std::move(yset), std::move(s_inv), std::move(perm));
  auto sg = multiply(s, BitMatrix(priv.g.rows()));
  std::vector<BitWord> public_rows;
  public_rows.reserve(sg.rows());
  for (std::size_t r = 0; r < sg.rows(); ++r) public_rows.push_back(priv.perm.apply(sg.row(r)));
  PublicKey pub{params, BitMatrix(std::move(public_rows))};
  return KeyPair{std::move(priv), std::move(pub)};
}

BitWord random_error(const CodeParams& params, std::size_t weight, Rng& rng) {
  const auto n = params.n();
  if (weight > n) throw InvalidArgument("error weight exceeds n");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  BitWord e(n);
  for (std::size_t i = 0; i < weight; ++i) {
    const auto j = i + rng.uniform_below(n - i);
    std::swap(pool[i], pool[j]);
    e.set(pool[i]);
  }
  return e;
}

BitWord encrypt(const PublicKey& pk, const BitWord& msg, Rng& rng) {
  if (msg.size() != pk.params.k()) throw LengthMismatch(msg.size(), pk.params.k());
  return multiply(msg, pk.g_prime) ^ random_error(pk.params, pk.params.t(), rng);
}

BitWord decrypt(const PrivateKey& sk, const BitWord& ciphertext, const DecodeOptions& options) {
  if (ciphertext.size() != sk.params.n()) throw LengthMismatch(ciphertext.size(), sk.params.n());
  const auto word = sk.perm.apply_inverse(ciphertext);
  try {
    const auto outcome = decode(word, sk.g, sk.relations, options);
    return multiply(outcome.message, sk.s_inv);
  } catch (const DecodeFailure& e) {
    throw DecryptionError(std::string("decryption failed: ") + e.what());
  }
}

}  // namespace hlcode
