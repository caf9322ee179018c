#include "ciw/ci_query.hpp"

#include <algorithm>
#include <array>

#include "ciw/errors.hpp"
#include "ciw/hilbert.hpp"

namespace ciw {

CIQuery CIQuery::make(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t d) {
  std::array<std::int64_t, 3> v{x, y, z};
  for (auto t : {x, y, z, d}) {
    if (t < 1 || t > kMaxDegree) {
      throw DomainError("query entries must lie in [1, " + std::to_string(kMaxDegree) +
                        "], got " + std::to_string(t));
    }
  }
  std::sort(v.begin(), v.end());
  return CIQuery{v[0], v[1], v[2], d};
}

std::string CIQuery::to_string() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d);
}

}  // namespace ciw
