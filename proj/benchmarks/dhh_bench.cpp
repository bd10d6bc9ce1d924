#include <benchmark/benchmark.h>

#include <map>

#include "hlcode/decoder.hpp"
#include "hlcode/dhh.hpp"
#include "hlcode/rng.hpp"

namespace {

struct Fixture {
  hlcode::Precomputed pre;
  hlcode::KeyPair keys;
};

const Fixture& fixture(unsigned m) {
  static std::map<unsigned, Fixture> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    auto pre = hlcode::Precomputed::compute(m);
    hlcode::Rng rng(m);
    auto keys = hlcode::keygen(pre, rng);
    it = cache.emplace(m, Fixture{std::move(pre), std::move(keys)}).first;
  }
  return it->second;
}

hlcode::BitWord random_message(std::size_t k, hlcode::Rng& rng) {
  hlcode::BitWord msg(k);
  for (std::size_t i = 0; i < k; ++i)
    if (rng.coin()) msg.set(i);
  return msg;
}

void BM_Keygen(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  hlcode::Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(hlcode::keygen(f.pre, rng));
  state.SetLabel("in-memory precomputed data");
}
BENCHMARK(BM_Keygen)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Encrypt(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  hlcode::Rng rng(8);
  const auto msg = random_message(f.keys.pub.params.k(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hlcode::encrypt(f.keys.pub, msg, rng));
}
BENCHMARK(BM_Encrypt)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_Decrypt(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  hlcode::Rng rng(9);
  const auto c = hlcode::encrypt(f.keys.pub, random_message(f.keys.pub.params.k(), rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hlcode::decrypt(f.keys.priv, c));
}
BENCHMARK(BM_Decrypt)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_DecodeThreaded(benchmark::State& state) {
  const auto& f = fixture(10);
  hlcode::Rng rng(10);
  const auto& g = f.keys.priv.g;
  const auto y = hlcode::encode(random_message(g.params().k(), rng), g) ^
                 hlcode::random_error(g.params(), g.params().t(), rng);
  const hlcode::DecodeOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hlcode::decode(y, g, f.keys.priv.relations, opts));
}
BENCHMARK(BM_DecodeThreaded)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
