#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ciw/ci_query.hpp"
#include "ciw/witness.hpp"

namespace ciw {

enum class Verdict { Exists, NotExists, Unknown };
std::string_view to_string(Verdict v);

using NamedValues = std::vector<std::pair<std::string, std::int64_t>>;

/// One link of a justification chain. `rule` names the fact that fired,
/// `anchor` is a compact tag for the underlying statement, `params` are the
/// inputs the rule was applied to and `evidence` the numbers it produced.
/// `replay` recomputes `evidence` from `rule` and `params`.
struct CertificateStep {
  std::string rule;
  std::string anchor;
  NamedValues params;
  NamedValues evidence;
  std::string note;

  std::optional<std::int64_t> param(std::string_view key) const;
  std::optional<std::int64_t> value(std::string_view key) const;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// Verdict plus its certificate. The last step decides: an Exists ends in an
/// existence rule or a vanishing witness, a NotExists in a non-existence rule
/// or a negative margin. Witness reports never end a NotExists chain.
struct Decision {
  CIQuery query;
  Verdict verdict = Verdict::Unknown;
  std::vector<CertificateStep> certificate;
  std::vector<WitnessReport> witnesses;

  const CertificateStep* terminal() const {
    return certificate.empty() ? nullptr : &certificate.back();
  }
};

/// One application of x -> d - x.
struct SwitchStep {
  std::int64_t from;
  std::int64_t to;
};

/// Replaces each of a, b, c by min(x, d - x) and re-sorts. The result is an
/// equivalent question with all three degrees at most d/2.
std::pair<CIQuery, std::vector<SwitchStep>> normalize(const CIQuery& q);

/// Every query obtained by independently switching a, b, c to d - a, d - b,
/// d - c, sorted and deduplicated. All of them have the same answer.
std::vector<CIQuery> switch_variants(const CIQuery& q);

/// Answers that follow from degree considerations alone (d <= c, or d equal
/// to one of a, b, c). nullopt when a proper question remains.
std::optional<Decision> triage(const CIQuery& q);

/// Closed-form classification: triage, then the case table on the
/// normalized query and its switch variants. Never runs the oracle.
Decision classify(const CIQuery& q);

struct DecideOptions {
  /// Apply the case table. Off leaves only triage, margins, oracle and propagation.
  bool classification = true;
  bool oracle = false;
  bool propagation = true;
  OracleConfig oracle_config{};
  /// Largest number of lower degrees searched for a propagating non-existence proof.
  std::int64_t propagation_window = 256;
};

/// classify, then in order: the Hilbert-function margin over all switch
/// variants, the witness oracle at d, and upward propagation from a lower
/// degree. Oracle size limits turn into Unknown with a note, never an error.
Decision decide(const CIQuery& q, const DecideOptions& opts = {});

/// Recomputes the evidence of a certificate step from its rule and params.
NamedValues replay(const CertificateStep& step);

/// One-sentence statement of a rule, for human-readable certificates.
std::string_view rule_statement(std::string_view rule);

}  // namespace ciw
