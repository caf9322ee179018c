#include "ciw/hilbert.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "ciw/errors.hpp"

namespace ciw {

namespace {

using i128 = __int128;

// Evaluation degrees may reach the socle of four maximal generators.
constexpr std::int64_t kMaxEvalDegree = 6 * kMaxDegree;

void check_degree_range(std::int64_t x, const char* what) {
  if (x < -kMaxEvalDegree || x > kMaxEvalDegree) {
    throw DomainError(std::string(what) + " " + std::to_string(x) + " outside [-" +
                      std::to_string(kMaxEvalDegree) + ", " + std::to_string(kMaxEvalDegree) + "]");
  }
}

// binom(n, 3), zero for n < 3.
i128 truncated_binom3(i128 n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// x(x-1)(x-2)/6 for every integer x; the product of three consecutive
// integers is divisible by 6, so this is exact.
i128 poly_binom3(i128 x) { return x * (x - 1) * (x - 2) / 6; }

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("Hilbert value overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

void require_four(const DegreeTuple& t, const char* op) {
  if (t.size() != 4) {
    throw DomainError(std::string(op) + " needs exactly 4 degrees, got " + t.to_string());
  }
}

}  // namespace

DegreeTuple::DegreeTuple(std::initializer_list<std::int64_t> degrees)
    : DegreeTuple(std::vector<std::int64_t>(degrees)) {}

DegreeTuple::DegreeTuple(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty() || degrees_.size() > 6) {
    throw DomainError("degree tuple needs 1 to 6 entries, got " + std::to_string(degrees_.size()));
  }
  for (auto x : degrees_) {
    if (x < 1 || x > kMaxDegree) {
      throw DomainError("generator degree " + std::to_string(x) + " outside [1, " +
                        std::to_string(kMaxDegree) + "]");
    }
  }
  std::sort(degrees_.begin(), degrees_.end());
}

DegreeTuple DegreeTuple::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto field = text.substr(pos, comma - pos);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw DomainError("cannot parse degree list '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return DegreeTuple(std::move(out));
}

std::int64_t DegreeTuple::sum() const noexcept {
  std::int64_t s = 0;
  for (auto x : degrees_) s += x;
  return s;
}

std::string DegreeTuple::to_string() const {
  std::string s;
  for (auto x : degrees_) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

std::vector<std::pair<std::int64_t, std::int64_t>> hilbert_numerator(const DegreeTuple& degrees) {
  std::map<std::int64_t, std::int64_t> poly{{0, 1}};
  for (auto a : degrees) {
    std::map<std::int64_t, std::int64_t> next = poly;
    for (const auto& [e, c] : poly) next[e + a] -= c;
    poly.swap(next);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [e, c] : poly) {
    if (c != 0) out.emplace_back(e, c);
  }
  return out;
}

std::int64_t hf_ci(const DegreeTuple& degrees, std::int64_t d) {
  if (degrees.size() > 4) {
    throw DomainError("hf_ci: " + std::to_string(degrees.size()) +
                      " generic forms in 4 variables are not a regular sequence; "
                      "use the witness oracle instead");
  }
  check_degree_range(d, "degree");
  if (d < 0) return 0;
  i128 acc = 0;
  for (const auto& [e, c] : hilbert_numerator(degrees)) {
    if (e > d) break;
    acc += static_cast<i128>(c) * truncated_binom3(d - e + 3);
  }
  return narrow(acc);
}

std::int64_t socle_degree(const DegreeTuple& degrees) {
  require_four(degrees, "socle_degree");
  return degrees.sum() - 4;
}

HilbertTable hilbert_table(const DegreeTuple& degrees) {
  const auto s = socle_degree(degrees);
  HilbertTable t{degrees, {}};
  t.values.reserve(static_cast<std::size_t>(s) + 2);
  for (std::int64_t x = 0; x <= s + 1; ++x) t.values.push_back(hf_ci(degrees, x));
  return t;
}

std::int64_t h_poly(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  for (auto x : {a, b, c, d}) check_degree_range(x, "h_poly argument");
  const auto B = [](i128 shift) { return poly_binom3(shift + 3); };
  const i128 v = B(d) - (B(d - a) + B(d - b) + B(d - c) + B(c)) +
                 (B(d - a - b) + B(d - a - c) + B(c - a) + B(d - b - c) + B(c - b) + 1) -
                 (B(d - a - b - c) + B(c - a - b));
  return narrow(v);
}

std::int64_t slp_quotient_hf(const DegreeTuple& degrees, std::int64_t e, std::int64_t d) {
  require_four(degrees, "slp_quotient_hf");
  if (e < 1) throw DomainError("extra form degree must be >= 1, got " + std::to_string(e));
  check_degree_range(e, "extra form degree");
  return std::max<std::int64_t>(hf_ci(degrees, d) - hf_ci(degrees, d - e), 0);
}

std::int64_t nonexistence_margin(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (!(1 <= a && a <= b && b <= c && c < d)) {
    throw DomainError("nonexistence_margin needs 1 <= a <= b <= c < d, got (" +
                      std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      "," + std::to_string(d) + ")");
  }
  const DegreeTuple w{a, b, c, d - c};
  return hf_ci(w, a) + hf_ci(w, b) - hf_ci(w, d);
}

}  // namespace ciw
