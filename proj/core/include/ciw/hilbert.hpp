#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ciw {

/// Largest degree accepted by the closed-form routines. Keeps every
/// intermediate binomial well inside 64 bits.
inline constexpr std::int64_t kMaxDegree = 1'000'000;

/// Generator degrees of a complete-intersection quotient of k[x0..x3],
/// kept sorted ascending. Holds 1 to 6 entries, each in [1, kMaxDegree].
class DegreeTuple {
 public:
  DegreeTuple(std::initializer_list<std::int64_t> degrees);
  explicit DegreeTuple(std::vector<std::int64_t> degrees);

  /// Parses "5,12,13,28".
  static DegreeTuple parse(std::string_view text);

  std::size_t size() const noexcept { return degrees_.size(); }
  std::int64_t operator[](std::size_t i) const { return degrees_.at(i); }
  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }
  std::int64_t sum() const noexcept;
  const std::vector<std::int64_t>& values() const noexcept { return degrees_; }
  std::string to_string() const;

  friend bool operator==(const DegreeTuple&, const DegreeTuple&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

/// Sparse expansion of prod (1 - t^a_i): (exponent, coefficient) pairs,
/// exponents ascending, zero coefficients dropped.
std::vector<std::pair<std::int64_t, std::int64_t>> hilbert_numerator(const DegreeTuple& degrees);

/// Hilbert function of k[x0..x3] modulo a regular sequence of forms of the
/// given degrees, evaluated at d: the t^d coefficient of
/// prod (1 - t^a_i) / (1 - t)^4. Zero for d < 0. At most four degrees;
/// five or more generic forms are not a regular sequence in four variables
/// and throw DomainError.
std::int64_t hf_ci(const DegreeTuple& degrees, std::int64_t d);

/// Sum of the degrees minus 4: the top nonzero degree of an Artinian
/// complete intersection. Requires exactly four degrees.
std::int64_t socle_degree(const DegreeTuple& degrees);

/// Values of hf_ci for degrees 0..socle+1 of a four-generator tuple.
struct HilbertTable {
  DegreeTuple degrees;
  std::vector<std::int64_t> values;
};
HilbertTable hilbert_table(const DegreeTuple& degrees);

/// The cubic-binomial approximation h(W,d) of H(W,d) for W = R/(a,b,c,d-c),
/// obtained by summing the Koszul shifts with binom(x,3) read as the
/// polynomial x(x-1)(x-2)/6 (so negative arguments contribute). Simplifies to
/// a^2 b/2 + a b^2/2 - 2ab + 1.
std::int64_t h_poly(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// max(H(W,d) - H(W,d-e), 0): the Hilbert function at d of W modulo one more
/// generic form of degree e, assuming multiplication by that form has maximal
/// rank. Requires exactly four degrees and e >= 1.
std::int64_t slp_quotient_hf(const DegreeTuple& degrees, std::int64_t e, std::int64_t d);

/// H(W,a) + H(W,b) - H(W,d) for W = R/(a,b,c,d-c). A negative value proves the
/// generic degree-d surface contains no CI(a,b,c). Requires a <= b <= c < d.
std::int64_t nonexistence_margin(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

}  // namespace ciw
