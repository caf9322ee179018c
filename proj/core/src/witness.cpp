#include "ciw/witness.hpp"

#include <string>

#include "ciw/dense_matrix.hpp"
#include "ciw/errors.hpp"

namespace ciw {

std::string_view to_string(WitnessVerdict v) {
  return v == WitnessVerdict::CertifiedYes ? "CertifiedYes" : "NoWitnessFound";
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t assembly_entries(std::span<const std::int64_t> form_degrees, std::int64_t d) {
  if (d < 0) return 0;
  unsigned __int128 rows = 0;
  for (auto g : form_degrees) rows += graded_dimension(d - g);
  const unsigned __int128 n = rows * graded_dimension(d);
  return n > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(n);
}

std::int64_t graded_ideal_dim(std::span<const HomogeneousForm> forms, std::int64_t d,
                              std::uint64_t cap) {
  if (forms.empty() || d < 0) return 0;
  const PrimeField& field = forms.front().field();
  std::vector<std::int64_t> degs;
  for (const auto& f : forms) {
    if (f.field() != field) throw DomainError("forms do not share a modulus");
    degs.push_back(f.degree());
  }
  const std::uint64_t entries = assembly_entries(degs, d);
  if (entries > cap) {
    throw ResourceError("degree-" + std::to_string(d) + " assembly needs " +
                            std::to_string(entries) + " matrix entries, above the cap of " +
                            std::to_string(cap),
                        cap);
  }

  std::size_t rows = 0;
  for (auto g : degs) rows += graded_dimension(d - g);
  const std::size_t cols = graded_dimension(d);
  // One row per product m*F; rank does not depend on orientation and rows
  // keep each product contiguous.
  DenseMatrix m(rows, cols, field, cap);
  std::size_t r = 0;
  for (const auto& f : forms) {
    if (f.degree() > d) continue;
    const auto fbasis = monomial_basis(f.degree());
    const auto coeffs = f.coefficients();
    for (const auto& mult : monomial_basis(static_cast<int>(d) - f.degree())) {
      auto out = m.row(r++);
      for (std::size_t j = 0; j < fbasis.size(); ++j) out[monomial_index(mult * fbasis[j])] = coeffs[j];
    }
  }
  return static_cast<std::int64_t>(rank_mod_p(std::move(m)));
}

std::int64_t quotient_hf_explicit(std::span<const HomogeneousForm> forms, std::int64_t d,
                                  std::uint64_t cap) {
  if (d < 0) return 0;
  return static_cast<std::int64_t>(graded_dimension(d)) - graded_ideal_dim(forms, d, cap);
}

WitnessReport ci_witness(const CIQuery& q, const OracleConfig& cfg) {
  if (!(1 <= q.a && q.a <= q.b && q.b <= q.c && q.c < q.d)) {
    throw DomainError("ci_witness needs 1 <= a <= b <= c < d, got (" + q.to_string() + ")");
  }
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  const PrimeField primary(cfg.prime);
  const std::vector<std::int64_t> degs{q.a, q.b, q.c, q.d - q.c, q.d - q.b, q.d - q.a};
  const std::uint64_t entries = assembly_entries(degs, q.d);
  if (entries > cfg.resource_cap) {
    throw ResourceError("CI(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," +
                            std::to_string(q.c) + ") at d=" + std::to_string(q.d) + " needs " +
                            std::to_string(entries) + " matrix entries, above the cap of " +
                            std::to_string(cfg.resource_cap),
                        cfg.resource_cap);
  }

  WitnessReport report{q, cfg.prime, cfg.seed, cfg.trials, {}, WitnessVerdict::NoWitnessFound,
                       0, graded_dimension(q.d)};
  for (auto g : degs) report.matrix_rows += graded_dimension(q.d - g);

  auto run_over = [&](const PrimeField& field, unsigned first_index) {
    for (unsigned t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = trial_seed(cfg.seed, first_index + t);
      std::mt19937_64 rng(s);
      std::vector<HomogeneousForm> forms;
      forms.reserve(degs.size());
      for (auto g : degs) forms.push_back(random_homogeneous_form(static_cast<int>(g), field, rng));
      const auto h = quotient_hf_explicit(forms, q.d, cfg.resource_cap);
      report.runs.push_back({field.modulus(), s, h});
      if (h == 0) {
        report.verdict = WitnessVerdict::CertifiedYes;
        return true;
      }
    }
    return false;
  };

  if (!run_over(primary, 0) && cfg.second_prime) run_over(PrimeField(*cfg.second_prime), cfg.trials);
  return report;
}

}  // namespace ciw
