#include "hlcode/params.hpp"

#include <string>

#include "hlcode/errors.hpp"

namespace hlcode {

std::uint64_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

CodeParams::CodeParams(unsigned m) : m_(m), fixed_rows_(0) {
  if (m % 2 != 0) throw InvalidArgument("m must be even, got " + std::to_string(m));
  if (m < kMinM || m > kMaxM)
    throw InvalidArgument("m must be in [" + std::to_string(kMinM) + ", " + std::to_string(kMaxM) + "], got " +
                          std::to_string(m));
  for (unsigned j = 0; j < m / 2; ++j) fixed_rows_ += binomial(m, j);
}

}  // namespace hlcode
