#include "hlcode/decoder.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "hlcode/errors.hpp"

namespace hlcode {

Votes count_votes(const RelationSet& relations, const BitWord& x) {
  Votes v;
  for (const auto& mask : relations.masks) {
    if (parity_under_mask(x, mask))
      ++v.ones;
    else
      ++v.zeros;
  }
  return v;
}

bool majority_coefficient(const RelationSet& relations, const BitWord& x, unsigned level) {
  const std::size_t s = relations.masks.size();
  std::size_t ones = 0;
  std::size_t zeros = 0;
  std::size_t next = 0;
  // 2*count > s  <=>  count > s/2
  while (2 * ones <= s && 2 * zeros <= s && next < s) {
    if (parity_under_mask(x, relations.masks[next++]))
      ++ones;
    else
      ++zeros;
  }
  if (ones == zeros) throw DecodeFailure(level, relations.row);
  return ones > zeros;
}

namespace {

void decode_rows(std::span<const RelationDictionary::Entry> entries, unsigned degree, const BitWord& x,
                 const GeneratorMatrix& g, LevelResult& out) {
  for (const auto& entry : entries) {
    if (majority_coefficient(*entry, x, degree)) {
      out.partial_codeword ^= g.row(entry->row);
      out.partial_message.set(entry->row);
    }
  }
}

}  // namespace

LevelResult decode_level(const RelationDictionary& relations, unsigned degree, const BitWord& x,
                         const GeneratorMatrix& g, const DecodeOptions& options) {
  const auto& params = g.params();
  if (x.size() != params.n()) throw LengthMismatch(x.size(), params.n());
  if (!relations.has_degree(degree))
    throw InvalidArgument("relation dictionary has no coefficients of degree " + std::to_string(degree));
  const auto entries = relations.degree(degree);

  LevelResult result{BitWord(params.n()), BitWord(params.k())};
  const unsigned threads = std::min<std::size_t>(std::max(1U, options.threads), entries.size());
  if (threads <= 1) {
    decode_rows(entries, degree, x, g, result);
    return result;
  }

  // coefficients of one level read the same word and touch disjoint rows
  std::vector<LevelResult> partials(threads, result);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (entries.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const auto begin = std::min(entries.size(), t * chunk);
      const auto end = std::min(entries.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          decode_rows(entries.subspan(begin, end - begin), degree, x, g, partials[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& p : partials) {
    result.partial_codeword ^= p.partial_codeword;
    result.partial_message ^= p.partial_message;
  }
  return result;
}

DecodeOutcome decode(const BitWord& x, const GeneratorMatrix& g, const RelationDictionary& relations,
                     const DecodeOptions& options, DecodeTrace* trace) {
  const auto& params = g.params();
  if (!g.complete()) throw InvalidArgument("decode needs a complete generator matrix");
  if (x.size() != params.n()) throw LengthMismatch(x.size(), params.n());
  if (relations.row_count() != params.k() - 1)
    throw InvalidArgument("relation dictionary must cover rows 1.." + std::to_string(params.k() - 1));
  if (trace) trace->levels.clear();

  BitWord residual = x;
  BitWord message(params.k());
  const auto& levels = relations.by_degree();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    auto level = decode_level(relations, it->first, residual, g, options);
    if (trace) trace->levels.push_back({it->first, residual, level.partial_message});
    residual ^= level.partial_codeword;
    message ^= level.partial_message;
  }
  if (trace) trace->final_residual = residual;

  // residual is now a_0 v_0 + e
  const auto ones = residual.weight();
  if (2 * ones == params.n()) throw DecodeFailure(0, 0);
  if (2 * ones > params.n()) {
    residual ^= g.row(0);
    message.set(0);
  }
  return DecodeOutcome{x ^ residual, std::move(message), std::move(residual)};
}

}  // namespace hlcode
