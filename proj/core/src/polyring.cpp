#include "ciw/polyring.hpp"

#include <string>

#include "ciw/errors.hpp"

namespace ciw {

namespace {

std::uint64_t choose2(std::int64_t n) { return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2; }

void check_degree(int d) {
  if (d < 0) throw DomainError("negative degree " + std::to_string(d));
}

void check_field(const PrimeField& a, const PrimeField& b) {
  if (a != b) {
    throw DomainError("forms over GF(" + std::to_string(a.modulus()) + ") and GF(" +
                      std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

Monomial Monomial::variable(int i) {
  if (i < 0 || i >= kNumVars) throw DomainError("variable index " + std::to_string(i));
  Exponents e{};
  e[static_cast<std::size_t>(i)] = 1;
  return Monomial(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Exponents e;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return Monomial(e);
}

std::string Monomial::to_string() const {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    const auto e = exps_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::uint64_t graded_dimension(std::int64_t d) {
  if (d < 0) return 0;
  const auto n = static_cast<unsigned __int128>(d);
  return static_cast<std::uint64_t>((n + 3) * (n + 2) * (n + 1) / 6);
}

std::vector<Monomial> monomial_basis(int d) {
  check_degree(d);
  std::vector<Monomial> out;
  out.reserve(graded_dimension(d));
  const auto ud = static_cast<std::uint32_t>(d);
  for (std::uint32_t e0 = 0; e0 <= ud; ++e0) {
    for (std::uint32_t e1 = 0; e0 + e1 <= ud; ++e1) {
      for (std::uint32_t e2 = 0; e0 + e1 + e2 <= ud; ++e2) {
        out.emplace_back(Monomial::Exponents{e0, e1, e2, ud - e0 - e1 - e2});
      }
    }
  }
  return out;
}

// Lexicographic rank among monomials of the same degree, counted coordinate by
// coordinate: fixing a prefix leaves a graded piece in fewer variables.
std::size_t monomial_index(const Monomial& m) {
  const std::int64_t d = m.degree();
  const std::int64_t e0 = m.exponent(0), e1 = m.exponent(1), e2 = m.exponent(2);
  const std::int64_t r0 = d - e0;
  std::uint64_t idx = graded_dimension(d) - graded_dimension(r0);
  idx += choose2(r0 + 2) - choose2(r0 - e1 + 2);
  idx += static_cast<std::uint64_t>(e2);
  return static_cast<std::size_t>(idx);
}

HomogeneousForm::HomogeneousForm(int degree, const PrimeField& field)
    : degree_(degree), field_(field) {
  check_degree(degree);
  coeffs_.assign(graded_dimension(degree), 0);
}

HomogeneousForm HomogeneousForm::from_terms(
    int degree, const PrimeField& field,
    const std::vector<std::pair<Monomial, std::uint64_t>>& terms) {
  HomogeneousForm f(degree, field);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

FieldElement HomogeneousForm::coefficient(const Monomial& m) const {
  if (static_cast<int>(m.degree()) != degree_) return {0, field_};
  return {coeffs_[monomial_index(m)], field_};
}

void HomogeneousForm::add_term(const Monomial& m, std::uint64_t value) {
  if (static_cast<int>(m.degree()) != degree_) {
    throw DomainError("monomial " + m.to_string() + " in a form of degree " +
                      std::to_string(degree_));
  }
  auto& c = coeffs_[monomial_index(m)];
  c = field_.add(c, field_.reduce(value));
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
  check_field(field_, o.field_);
  if (degree_ != o.degree_) throw DomainError("sum of forms of different degrees");
  HomogeneousForm r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return r;
}

HomogeneousForm multiply_by_monomial(const Monomial& m, const HomogeneousForm& f) {
  HomogeneousForm r(static_cast<int>(m.degree()) + f.degree(), f.field());
  const auto basis = monomial_basis(f.degree());
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i] != 0) r.add_term(m * basis[i], c[i]);
  }
  return r;
}

HomogeneousForm random_homogeneous_form(int degree, const PrimeField& field,
                                        std::mt19937_64& rng) {
  if (degree < 1) {
    throw DomainError("random forms need degree >= 1, got " + std::to_string(degree));
  }
  HomogeneousForm f(degree, field);
  // Rejection sampling on raw engine output keeps the stream identical across
  // standard library implementations.
  const std::uint64_t p = field.modulus();
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % p);
  const auto basis = monomial_basis(degree);
  for (const auto& m : basis) {
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    f.add_term(m, x % p);
  }
  return f;
}

}  // namespace ciw
