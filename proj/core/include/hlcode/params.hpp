#pragma once

#include <cstddef>
#include <cstdint>

namespace hlcode {

/// C(n, r) for the small arguments used by the code layout. 0 when r > n.
std::uint64_t binomial(unsigned n, unsigned r);

/// Parameters of the HL-code of length 2^m (m = 2l even):
/// an (n, k, d) = (2^m, 2^(m-1), 2^(m/2)) binary linear code correcting
/// t = 2^(m/2-1) - 1 errors.
class CodeParams {
 public:
  static constexpr unsigned kMinM = 4;
  static constexpr unsigned kMaxM = 16;

  /// Throws InvalidArgument unless m is even and within [kMinM, kMaxM].
  explicit CodeParams(unsigned m);

  unsigned m() const noexcept { return m_; }
  std::size_t n() const noexcept { return std::size_t{1} << m_; }
  std::size_t k() const noexcept { return std::size_t{1} << (m_ - 1); }
  std::size_t d() const noexcept { return std::size_t{1} << (m_ / 2); }
  std::size_t t() const noexcept { return (d() - 1) / 2; }
  unsigned max_degree() const noexcept { return m_ / 2; }

  /// Rows 0 .. fixed_rows()-1 are identical for every HL-code of this m:
  /// sum_{j=0}^{m/2-1} C(m, j).
  std::size_t fixed_rows() const noexcept { return fixed_rows_; }
  /// (1/2) C(m, m/2): size of a maximal complement-free set.
  std::size_t yset_size() const noexcept { return k() - fixed_rows_; }
  bool is_yset_row(std::size_t row) const noexcept { return row >= fixed_rows_ && row < k(); }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;

 private:
  unsigned m_;
  std::size_t fixed_rows_;
};

}  // namespace hlcode
