#include "ciw/decider.hpp"

#include <algorithm>
#include <array>

#include "ciw/errors.hpp"
#include "ciw/hilbert.hpp"

namespace ciw {

namespace {

struct RuleInfo {
  std::string_view name;
  std::string_view anchor;
  std::string_view statement;
};

constexpr std::array kRules = {
    RuleInfo{"triage.d-is-a-degree", "ci-curve-on-surface",
             "d equals one of a, b, c: the surface cuts a complete intersection curve of the "
             "other two degrees in a CI(a,b,c)."},
    RuleInfo{"triage.d-below-a", "degree-below-a",
             "d < a: the ideal of a CI(a,b,c) contains no nonzero form of degree below a."},
    RuleInfo{"triage.d-between-a-b", "irreducible-generic-form",
             "a < d < b: the generic form of degree d is irreducible, so it is not a multiple "
             "of the degree-a generator."},
    RuleInfo{"triage.curve-low-degree", "ci-curves-low-degree",
             "b < d < c with d <= 3: the generic surface of degree d contains complete "
             "intersection curves of every type (a,b) with a, b < d."},
    RuleInfo{"triage.curve-noether-lefschetz", "noether-lefschetz",
             "b < d < c with d >= 4: the generic surface of degree d contains no complete "
             "intersection curve of type (a,b) with a, b < d."},
    RuleInfo{"switch", "residual-switch",
             "Replacing any of a, b, c by d minus itself gives an equivalent question on the "
             "same generic surface."},
    RuleInfo{"class.a-le-4", "lefschetz-existence",
             "If a <= 4, the generic surface of every degree d > c contains a CI(a,b,c)."},
    RuleInfo{"class.a5-b-le-11", "computed-existence",
             "If a = 5 and b <= 11, the generic surface of every degree d > c contains a "
             "CI(a,b,c)."},
    RuleInfo{"class.a5-b12-c12", "computed-existence",
             "The generic surface of every degree d > 12 contains a CI(5,12,12)."},
    RuleInfo{"class.a5-b12-c-ge-13", "computed-margin-propagation",
             "For c >= 13 the generic surface of degree d >= 2c+15 contains no CI(5,12,c)."},
    RuleInfo{"class.a5-b-ge-13", "asymptotic-margin",
             "If a = 5 and b >= 13, the generic surface of degree d >= b+c+2 contains no "
             "CI(a,b,c)."},
    RuleInfo{"class.a6-b-le-7", "computed-existence",
             "If a = 6 and b <= 7, the generic surface of every degree d > c contains a "
             "CI(a,b,c)."},
    RuleInfo{"class.a6-b8-c8-9", "computed-existence",
             "The generic surface of every degree d > c contains a CI(6,8,c) for c = 8, 9."},
    RuleInfo{"class.a6-b8-c-ge-10", "computed-margin-propagation",
             "For c >= 10 the generic surface of degree d >= 2c+12 contains no CI(6,8,c)."},
    RuleInfo{"class.a6-b-ge-9", "asymptotic-margin",
             "If a = 6 and b >= 9, the generic surface of degree d >= b+c+3 contains no "
             "CI(a,b,c)."},
    RuleInfo{"class.a-ge-7", "asymptotic-margin",
             "If a >= 7 and (a,b,c) is not (7,7,7) or (7,7,8), the generic surface of degree d >= a+b+c-3 "
             "contains no CI(a,b,c)."},
    RuleInfo{"class.open", "open-region",
             "No closed-form rule decides this query; see the threshold and note."},
    RuleInfo{"margin", "dimension-count",
             "With W = R/(F,G,H,H') of degrees a, b, c, d-c, the classes of G' and F' span "
             "at most H(W,b) + H(W,a) dimensions of W_d; if H(W,a)+H(W,b)-H(W,d) < 0 the "
             "quotient survives in degree d and no CI(a,b,c) exists."},
    RuleInfo{"oracle", "semicontinuity",
             "Random forms over GF(p) whose quotient vanishes in degree d certify vanishing "
             "for generic forms over C: rank can only drop under specialization."},
    RuleInfo{"oracle.capped", "resource-cap",
             "The oracle matrix for this degree exceeds the configured entry cap; no "
             "computation was attempted."},
    RuleInfo{"propagate.exists-up", "linear-form-injectivity",
             "A CI(a,b,c) on the generic surface of degree d0 >= a+b+c-3 persists on the "
             "generic surface of every degree d > d0."},
    RuleInfo{"propagate.nonexists-up", "stable-graded-pieces",
             "If no CI(a,b,c) lies on the generic surface of degree d0 > 2c+b+a-3, none "
             "lies on the generic surface of any degree d > d0."},
};

const RuleInfo& rule_info(std::string_view name) {
  for (const auto& r : kRules) {
    if (r.name == name) return r;
  }
  throw DomainError("unknown rule '" + std::string(name) + "'");
}

std::int64_t verdict_code(Verdict v) { return static_cast<std::int64_t>(v); }

CertificateStep make_step(std::string_view rule, NamedValues params, NamedValues evidence,
                          std::string note = {}) {
  const auto& info = rule_info(rule);
  return CertificateStep{std::string(info.name), std::string(info.anchor), std::move(params),
                         std::move(evidence), std::move(note)};
}

NamedValues query_params(const CIQuery& q) {
  return {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}

CIQuery query_from(const CertificateStep& s) {
  auto get = [&](const char* k) {
    const auto v = s.param(k);
    if (!v) throw DomainError("step '" + s.rule + "' lacks parameter " + k);
    return *v;
  };
  return CIQuery::make(get("a"), get("b"), get("c"), get("d"));
}

// Bit i of `mask` switches the i-th of (a, b, c) to d minus itself.
CIQuery apply_switch(const CIQuery& q, unsigned mask) {
  const std::array<std::int64_t, 3> v{q.a, q.b, q.c};
  std::array<std::int64_t, 3> w{};
  for (unsigned i = 0; i < 3; ++i) w[i] = (mask >> i & 1u) ? q.d - v[i] : v[i];
  return CIQuery::make(w[0], w[1], w[2], q.d);
}

unsigned normalizing_mask(const CIQuery& q) {
  unsigned mask = 0;
  const std::array<std::int64_t, 3> v{q.a, q.b, q.c};
  for (unsigned i = 0; i < 3; ++i) {
    if (q.d - v[i] < v[i]) mask |= 1u << i;
  }
  return mask;
}

CertificateStep switch_step(const CIQuery& q, unsigned mask) {
  const CIQuery r = apply_switch(q, mask);
  auto params = query_params(q);
  params.emplace_back("mask", mask);
  return make_step("switch", std::move(params), {{"a", r.a}, {"b", r.b}, {"c", r.c}});
}

struct TableHit {
  Verdict verdict;
  std::string_view rule;
  std::int64_t threshold = 0;  // degree from which a non-existence rule applies
  std::string_view governing = {};  // rule whose threshold was not reached
  std::string_view note = {};
};

constexpr std::string_view kSevenSevenNote =
    "a = b = 7, c <= 8: H(W,a)+H(W,b)-H(W,d) is +8 (c = 7) or 0 (c = 8) for every "
    "d >= a+b+c-3, so the asymptotic non-existence argument does not cover these "
    "cases; vanishing specializations exist (CI(7,7,7) at d = 18, CI(7,7,8) at d = 19)";

TableHit nonexistence_from(const CIQuery& q, std::string_view rule, std::int64_t threshold) {
  if (q.d >= threshold) return {Verdict::NotExists, rule, threshold, {}, {}};
  return {Verdict::Unknown, "class.open", threshold, rule, {}};
}

// The case table on a proper query.
TableHit table_rule(const CIQuery& q) {
  const auto [a, b, c, d] = q;
  if (a <= 4) return {Verdict::Exists, "class.a-le-4"};
  if (a == 5) {
    if (b <= 11) return {Verdict::Exists, "class.a5-b-le-11"};
    if (b == 12 && c == 12) return {Verdict::Exists, "class.a5-b12-c12"};
    if (b == 12) return nonexistence_from(q, "class.a5-b12-c-ge-13", 2 * c + 15);
    return nonexistence_from(q, "class.a5-b-ge-13", b + c + 2);
  }
  if (a == 6) {
    if (b <= 7) return {Verdict::Exists, "class.a6-b-le-7"};
    if (b == 8 && c <= 9) return {Verdict::Exists, "class.a6-b8-c8-9"};
    if (b == 8) return nonexistence_from(q, "class.a6-b8-c-ge-10", 2 * c + 12);
    return nonexistence_from(q, "class.a6-b-ge-9", b + c + 3);
  }
  if (a == 7 && b == 7 && c <= 8) return {Verdict::Unknown, "class.open", 0, "class.a-ge-7", kSevenSevenNote};
  return nonexistence_from(q, "class.a-ge-7", a + b + c - 3);
}

CertificateStep table_step(const CIQuery& q, const TableHit& hit) {
  NamedValues ev{{"verdict", verdict_code(hit.verdict)}};
  if (hit.threshold > 0) ev.emplace_back("threshold", hit.threshold);
  std::string note;
  if (!hit.governing.empty()) {
    note = std::string(hit.governing);
    if (hit.threshold > 0) note += " needs d >= " + std::to_string(hit.threshold);
  }
  if (!hit.note.empty()) note += (note.empty() ? "" : "; ") + std::string(hit.note);
  return make_step(hit.rule, query_params(q), std::move(ev), std::move(note));
}

CertificateStep margin_step(const CIQuery& q) {
  const DegreeTuple w{q.a, q.b, q.c, q.d - q.c};
  const auto ha = hf_ci(w, q.a), hb = hf_ci(w, q.b), hd = hf_ci(w, q.d);
  return make_step("margin", query_params(q),
                   {{"margin", ha + hb - hd}, {"h_a", ha}, {"h_b", hb}, {"h_d", hd}});
}

CertificateStep oracle_step(const WitnessReport& r, const OracleConfig& cfg) {
  auto params = query_params(r.query);
  params.emplace_back("prime", cfg.prime);
  params.emplace_back("seed", static_cast<std::int64_t>(cfg.seed));
  params.emplace_back("trials", cfg.trials);
  if (cfg.second_prime) params.emplace_back("second_prime", *cfg.second_prime);
  NamedValues ev{{"verdict", r.verdict == WitnessVerdict::CertifiedYes ? 0 : 1}};
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    ev.emplace_back("hf" + std::to_string(i), r.runs[i].hilbert_value);
  }
  return make_step("oracle", std::move(params), std::move(ev),
                   "computed over GF(p); the zero certifies the characteristic-0 statement");
}

CertificateStep capped_step(const CIQuery& q, const OracleConfig& cfg, const ResourceError& e) {
  auto params = query_params(q);
  params.emplace_back("cap", static_cast<std::int64_t>(cfg.resource_cap));
  const std::vector<std::int64_t> degs{q.a, q.b, q.c, q.d - q.c, q.d - q.b, q.d - q.a};
  return make_step("oracle.capped", std::move(params),
                   {{"entries", static_cast<std::int64_t>(assembly_entries(degs, q.d))}},
                   e.what());
}

NamedValues propagation_params(const CIQuery& base, std::int64_t d0, std::int64_t d) {
  return {{"a", base.a}, {"b", base.b}, {"c", base.c}, {"d0", d0}, {"d", d}};
}

bool exists_propagates(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d0,
                       std::int64_t d) {
  return c < d0 && d0 >= a + b + c - 3 && d0 < d;
}

bool nonexists_propagates(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d0,
                          std::int64_t d) {
  return c < d0 && d0 > 2 * c + b + a - 3 && d0 < d;
}

Decision finish(Decision dec, Verdict v) {
  dec.verdict = v;
  return dec;
}

std::optional<WitnessReport> run_oracle(Decision& dec, const CIQuery& q, const OracleConfig& cfg) {
  try {
    WitnessReport r = ci_witness(q, cfg);
    dec.certificate.push_back(oracle_step(r, cfg));
    dec.witnesses.push_back(r);
    return r;
  } catch (const ResourceError& e) {
    dec.certificate.push_back(capped_step(q, cfg, e));
    return std::nullopt;
  }
}

// Negative margin over any switch variant of q; appends the step when found.
bool margin_proves(Decision& dec, const CIQuery& q) {
  for (const auto& v : switch_variants(q)) {
    if (nonexistence_margin(v.a, v.b, v.c, v.d) < 0) {
      dec.certificate.push_back(margin_step(v));
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists:
      return "Exists";
    case Verdict::NotExists:
      return "NotExists";
    case Verdict::Unknown:
      break;
  }
  return "Unknown";
}

std::optional<std::int64_t> CertificateStep::param(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<std::int64_t> CertificateStep::value(std::string_view key) const {
  for (const auto& [k, v] : evidence) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string_view rule_statement(std::string_view rule) { return rule_info(rule).statement; }

std::pair<CIQuery, std::vector<SwitchStep>> normalize(const CIQuery& q) {
  if (!q.proper()) throw DomainError("normalize needs c < d, got (" + q.to_string() + ")");
  std::vector<SwitchStep> trace;
  for (auto x : {q.a, q.b, q.c}) {
    if (q.d - x < x) trace.push_back({x, q.d - x});
  }
  return {apply_switch(q, normalizing_mask(q)), std::move(trace)};
}

std::vector<CIQuery> switch_variants(const CIQuery& q) {
  if (!q.proper()) throw DomainError("switch_variants needs c < d, got (" + q.to_string() + ")");
  std::vector<CIQuery> out;
  const unsigned first = normalizing_mask(q);
  out.push_back(apply_switch(q, first));
  for (unsigned mask = 0; mask < 8; ++mask) {
    const CIQuery v = apply_switch(q, mask);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::optional<Decision> triage(const CIQuery& q) {
  const auto [a, b, c, d] = q;
  auto decided = [&](std::string_view rule, Verdict v) {
    Decision dec{q, v, {}, {}};
    dec.certificate.push_back(make_step(rule, query_params(q), {{"verdict", verdict_code(v)}}));
    return dec;
  };
  if (d == a || d == b || d == c) return decided("triage.d-is-a-degree", Verdict::Exists);
  if (d < a) return decided("triage.d-below-a", Verdict::NotExists);
  if (a < d && d < b) return decided("triage.d-between-a-b", Verdict::NotExists);
  if (b < d && d < c) {
    return d <= 3 ? decided("triage.curve-low-degree", Verdict::Exists)
                  : decided("triage.curve-noether-lefschetz", Verdict::NotExists);
  }
  return std::nullopt;
}

Decision classify(const CIQuery& q) {
  if (auto t = triage(q)) return *t;
  Decision dec{q, Verdict::Unknown, {}, {}};
  const unsigned first = normalizing_mask(q);
  std::array<unsigned, 8> order{};
  order[0] = first;
  for (unsigned m = 0, k = 1; m < 8; ++m) {
    if (m != first) order[k++] = m;
  }
  std::vector<CIQuery> seen;
  for (unsigned mask : order) {
    const CIQuery v = apply_switch(q, mask);
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
    seen.push_back(v);
    const TableHit hit = table_rule(v);
    if (hit.verdict == Verdict::Unknown) continue;
    if (mask != 0) dec.certificate.push_back(switch_step(q, mask));
    dec.certificate.push_back(table_step(v, hit));
    return finish(std::move(dec), hit.verdict);
  }
  const CIQuery n = apply_switch(q, first);
  if (first != 0) dec.certificate.push_back(switch_step(q, first));
  dec.certificate.push_back(table_step(n, table_rule(n)));
  return dec;
}

Decision decide(const CIQuery& q, const DecideOptions& opts) {
  Decision dec;
  if (opts.classification) {
    dec = classify(q);
    if (dec.verdict != Verdict::Unknown) return dec;
  } else {
    if (auto t = triage(q)) return *t;
    dec = Decision{q, Verdict::Unknown, {}, {}};
    if (const unsigned m = normalizing_mask(q); m != 0) dec.certificate.push_back(switch_step(q, m));
  }
  const CIQuery n = normalize(q).first;

  if (margin_proves(dec, q)) return finish(std::move(dec), Verdict::NotExists);
  dec.certificate.push_back(margin_step(n));

  if (opts.oracle) {
    const auto r = run_oracle(dec, n, opts.oracle_config);
    if (r && r->verdict == WitnessVerdict::CertifiedYes) return finish(std::move(dec), Verdict::Exists);
  }

  if (opts.propagation) {
    for (const auto& v : switch_variants(q)) {
      const std::int64_t lo = std::max(2 * v.c + v.b + v.a - 2, v.c + 1);
      const std::int64_t hi = std::min(q.d - 1, lo + opts.propagation_window - 1);
      for (std::int64_t d0 = lo; d0 <= hi; ++d0) {
        if (margin_proves(dec, CIQuery{v.a, v.b, v.c, d0})) {
          dec.certificate.push_back(
              make_step("propagate.nonexists-up", propagation_params(v, d0, q.d),
                        {{"holds", nonexists_propagates(v.a, v.b, v.c, d0, q.d) ? 1 : 0}}));
          return finish(std::move(dec), Verdict::NotExists);
        }
      }
    }
    if (opts.oracle) {
      const std::int64_t d0 = std::max(n.a + n.b + n.c - 3, n.c + 1);
      if (d0 < q.d) {
        const CIQuery lower{n.a, n.b, n.c, d0};
        const auto r = run_oracle(dec, lower, opts.oracle_config);
        if (r && r->verdict == WitnessVerdict::CertifiedYes) {
          dec.certificate.push_back(
              make_step("propagate.exists-up", propagation_params(n, d0, q.d),
                        {{"holds", exists_propagates(n.a, n.b, n.c, d0, q.d) ? 1 : 0}}));
          return finish(std::move(dec), Verdict::Exists);
        }
      }
    }
  }
  return finish(std::move(dec), Verdict::Unknown);
}

NamedValues replay(const CertificateStep& step) {
  const std::string_view rule = step.rule;
  if (rule.starts_with("triage.")) {
    const auto t = triage(query_from(step));
    if (!t) return {{"verdict", verdict_code(Verdict::Unknown)}};
    NamedValues ev{{"verdict", verdict_code(t->verdict)}};
    if (t->certificate.back().rule != step.rule) ev.emplace_back("rule_mismatch", 1);
    return ev;
  }
  if (rule == "switch") {
    const auto mask = step.param("mask").value_or(0);
    const CIQuery r = apply_switch(query_from(step), static_cast<unsigned>(mask));
    return {{"a", r.a}, {"b", r.b}, {"c", r.c}};
  }
  if (rule.starts_with("class.")) {
    const CIQuery q = query_from(step);
    auto s = table_step(q, table_rule(q));
    if (s.rule != step.rule) s.evidence.emplace_back("rule_mismatch", 1);
    return s.evidence;
  }
  if (rule == "margin") return margin_step(query_from(step)).evidence;
  if (rule == "oracle") {
    OracleConfig cfg;
    cfg.prime = static_cast<std::uint32_t>(step.param("prime").value_or(kDefaultPrime));
    cfg.seed = static_cast<std::uint64_t>(step.param("seed").value_or(kDefaultSeed));
    cfg.trials = static_cast<unsigned>(step.param("trials").value_or(2));
    if (auto sp = step.param("second_prime")) cfg.second_prime = static_cast<std::uint32_t>(*sp);
    cfg.resource_cap = ~std::uint64_t{0};
    return oracle_step(ci_witness(query_from(step), cfg), cfg).evidence;
  }
  if (rule == "oracle.capped") {
    const CIQuery q = query_from(step);
    const std::vector<std::int64_t> degs{q.a, q.b, q.c, q.d - q.c, q.d - q.b, q.d - q.a};
    return {{"entries", static_cast<std::int64_t>(assembly_entries(degs, q.d))}};
  }
  if (rule == "propagate.exists-up" || rule == "propagate.nonexists-up") {
    const auto a = step.param("a").value_or(0), b = step.param("b").value_or(0),
               c = step.param("c").value_or(0), d0 = step.param("d0").value_or(0),
               d = step.param("d").value_or(0);
    const bool ok = rule == "propagate.exists-up" ? exists_propagates(a, b, c, d0, d)
                                                  : nonexists_propagates(a, b, c, d0, d);
    return {{"holds", ok ? 1 : 0}};
  }
  throw DomainError("cannot replay rule '" + step.rule + "'");
}

}  // namespace ciw
