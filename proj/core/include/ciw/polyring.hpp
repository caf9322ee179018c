#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ciw/prime_field.hpp"

namespace ciw {

/// Number of variables of the ambient ring; the quotients live in P^3.
inline constexpr int kNumVars = 4;

/// x0^e0 x1^e1 x2^e2 x3^e3.
///
/// Ordered degree-lexicographically: first by total degree, then by the
/// exponent vector compared lexicographically. `monomial_basis` lists a graded
/// piece in increasing order under this ordering.
class Monomial {
 public:
  using Exponents = std::array<std::uint32_t, kNumVars>;

  Monomial() = default;
  explicit Monomial(const Exponents& e) : exps_(e) {}
  static Monomial variable(int i);

  std::uint32_t exponent(int i) const { return exps_.at(static_cast<std::size_t>(i)); }
  const Exponents& exponents() const noexcept { return exps_; }
  std::uint32_t degree() const noexcept { return exps_[0] + exps_[1] + exps_[2] + exps_[3]; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

  std::string to_string() const;

 private:
  Exponents exps_{};
};

/// binom(d+3, 3): dimension of the degree-d piece of the ring; 0 for d < 0.
std::uint64_t graded_dimension(std::int64_t d);

/// All monomials of degree d in increasing order.
std::vector<Monomial> monomial_basis(int d);

/// Position of `m` inside monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m);

/// A form of fixed degree over GF(p), stored densely in basis order.
class HomogeneousForm {
 public:
  /// The zero form of the given degree.
  HomogeneousForm(int degree, const PrimeField& field);

  static HomogeneousForm from_terms(int degree, const PrimeField& field,
                                    const std::vector<std::pair<Monomial, std::uint64_t>>& terms);

  int degree() const noexcept { return degree_; }
  const PrimeField& field() const noexcept { return field_; }
  std::span<const Residue> coefficients() const noexcept { return coeffs_; }

  FieldElement coefficient(const Monomial& m) const;
  /// Adds `value` to the coefficient of `m`.
  void add_term(const Monomial& m, std::uint64_t value);

  HomogeneousForm operator+(const HomogeneousForm& o) const;

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  int degree_;
  PrimeField field_;
  std::vector<Residue> coeffs_;
};

HomogeneousForm multiply_by_monomial(const Monomial& m, const HomogeneousForm& f);

/// Dense form with coefficients uniform on [0, p), drawn in basis order.
/// Throws DomainError for degree < 1.
HomogeneousForm random_homogeneous_form(int degree, const PrimeField& field, std::mt19937_64& rng);

}  // namespace ciw
