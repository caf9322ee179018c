#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ciw/ci_query.hpp"
#include "ciw/polyring.hpp"
#include "ciw/prime_field.hpp"

namespace ciw {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::uint64_t kDefaultResourceCap = 100'000'000;

struct OracleConfig {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 2;
  /// Upper bound on rows*cols of an assembled matrix.
  std::uint64_t resource_cap = kDefaultResourceCap;
  /// If set and no trial vanishes, the trials are repeated over this prime.
  std::optional<std::uint32_t> second_prime;
};

/// CertifiedYes is a proof (a vanishing specialization forces generic
/// vanishing). NoWitnessFound is only evidence; there is deliberately no
/// "does not exist" outcome.
enum class WitnessVerdict { CertifiedYes, NoWitnessFound };
std::string_view to_string(WitnessVerdict v);

struct TrialResult {
  std::uint32_t prime;
  std::uint64_t seed;
  std::int64_t hilbert_value;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct WitnessReport {
  CIQuery query;
  std::uint32_t prime;
  std::uint64_t seed;
  unsigned trials;
  /// Trials actually run, in order; stops at the first vanishing one.
  std::vector<TrialResult> runs;
  WitnessVerdict verdict;
  std::uint64_t matrix_rows;
  std::uint64_t matrix_cols;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// Seed of trial `index` derived from the base seed (splitmix64 step).
std::uint64_t trial_seed(std::uint64_t seed, unsigned index);

/// Number of matrix entries needed to evaluate forms of these degrees at d.
std::uint64_t assembly_entries(std::span<const std::int64_t> form_degrees, std::int64_t d);

/// dim_k (F_1, ..., F_k)_d: the rank of the matrix whose rows are the
/// products m*F_i with deg m = d - deg F_i, written in the degree-d monomial
/// basis. Forms of degree above d contribute nothing. Throws DomainError on
/// mixed moduli and ResourceError if the matrix would exceed `cap` entries.
std::int64_t graded_ideal_dim(std::span<const HomogeneousForm> forms, std::int64_t d,
                              std::uint64_t cap = kDefaultResourceCap);

/// binom(d+3,3) - graded_ideal_dim(forms, d).
std::int64_t quotient_hf_explicit(std::span<const HomogeneousForm> forms, std::int64_t d,
                                  std::uint64_t cap = kDefaultResourceCap);

/// Draws forms of degrees a, b, c, d-c, d-b, d-a per trial and evaluates the
/// quotient in degree d. Requires a proper query and a prime modulus.
WitnessReport ci_witness(const CIQuery& q, const OracleConfig& cfg = {});

}  // namespace ciw
