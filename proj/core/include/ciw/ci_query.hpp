#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ciw {

/// Does the generic degree-d surface in P^3 contain a CI(a,b,c)?
/// a <= b <= c always holds; c < d is not enforced here because the
/// d <= c cases have direct answers (see classify).
struct CIQuery {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t c = 1;
  std::int64_t d = 2;

  /// Sorts the three CI degrees. Throws DomainError on entries < 1 or above kMaxDegree.
  static CIQuery make(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t d);

  bool proper() const noexcept { return c < d; }
  std::string to_string() const;

  friend auto operator<=>(const CIQuery&, const CIQuery&) = default;
};

}  // namespace ciw
