#pragma once

#include <cstdint>
#include <iosfwd>

namespace ciw {

using Residue = std::uint32_t;

/// Default working prime, just below 2^31. Residues fit in 32 bits and the Shoup
/// multiplier in the rank kernel needs 2p < 2^32.
inline constexpr std::uint32_t kDefaultPrime = 2147483629u;
/// Fallback prime for re-running an oracle under a second characteristic.
inline constexpr std::uint32_t kSecondPrime = 2147483587u;
inline constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

bool is_prime(std::uint64_t n);

/// GF(p) for a prime 2 <= p < 2^31.
class PrimeField {
 public:
  /// Throws ConfigError unless `p` is a prime in [2, 2^31).
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::uint64_t x) const noexcept { return static_cast<Residue>(x % p_); }
  Residue add(Residue a, Residue b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Inverse by the extended Euclidean algorithm. Throws DomainError on zero.
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// An element of GF(p) that carries its modulus.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, const PrimeField& field)
      : value_(field.reduce(value)), field_(field) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }
  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return FieldElement(field_.neg(value_), field_, Raw{}); }
  FieldElement inverse() const { return FieldElement(field_.inv(value_), field_, Raw{}); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

 private:
  struct Raw {};
  FieldElement(Residue v, const PrimeField& f, Raw) : value_(v), field_(f) {}
  void check_same_field(const FieldElement& o) const;

  Residue value_;
  PrimeField field_;
};

}  // namespace ciw
