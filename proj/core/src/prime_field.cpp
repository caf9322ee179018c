#include "ciw/prime_field.hpp"

#include <ostream>
#include <string>

#include "ciw/errors.hpp"

namespace ciw {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > kMaxModulus) {
    throw ConfigError("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
  }
  if (!is_prime(p)) {
    throw ConfigError("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw DomainError("zero has no inverse in GF(" + std::to_string(p_) + ")");
  std::int64_t r0 = p_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<Residue>(t0);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  return static_cast<Residue>(powmod64(a, e, p_));
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) {
    throw DomainError("field elements with moduli " + std::to_string(modulus()) + " and " +
                      std::to_string(o.modulus()));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return {field_.add(value_, o.value_), field_, Raw{}};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return {field_.sub(value_, o.value_), field_, Raw{}};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return {field_.mul(value_, o.value_), field_, Raw{}};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.value_ << " (mod " << x.modulus() << ")";
}

}  // namespace ciw
