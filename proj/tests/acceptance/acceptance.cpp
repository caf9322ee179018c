// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ciw/decider.hpp"
#include "ciw/hilbert.hpp"
#include "ciw/witness.hpp"
#include "cli.hpp"
#include "support/oracles.hpp"

namespace {

using namespace ciw;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(t0));
  std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " -- " << v.detail << " ("
            << buf << ")" << std::endl;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + err.str();
}

Outcome lemma_numbers() {
  const auto t0 = Clock::now();
  std::vector<std::int64_t> got;
  got.push_back(hf_ci({5, 12, 13, 28}, 5));
  got.push_back(hf_ci({5, 12, 13, 28}, 12));
  for (std::int64_t x = 0; x <= 5; ++x) got.push_back(hf_ci({5, 12, 13 + x, 28 + x}, 14));
  const double ms = seconds_since(t0) * 1e3;
  const std::vector<std::int64_t> want{55, 334, 446, 449, 450, 450, 450, 450};
  std::ostringstream s;
  for (auto v : got) s << v << ' ';
  s << "in " << ms << " ms";
  return {got == want && ms < 1.0, s.str()};
}

Outcome example_grid() {
  const auto t0 = Clock::now();
  int code = 0;
  const std::string out = run_cli({"--records", "reproduce", "example-6-4"}, code);
  const double secs = seconds_since(t0);
  int certified = 0, lines = 0;
  bool trials_ok = true;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    ++lines;
    if (line.find("verdict=CertifiedYes") != std::string::npos) ++certified;
    const auto pos = line.find(" hf=");
    if (pos != std::string::npos) {
      const std::string hf = line.substr(pos + 4, line.find(' ', pos + 4) - pos - 4);
      trials_ok &= std::count(hf.begin(), hf.end(), ',') <= 1;
      trials_ok &= hf.size() >= 1 && hf.back() == '0';
    }
  }
  std::ostringstream s;
  s << certified << "/9 CertifiedYes for CI(6,6,6), d=7..15, " << secs << " s";
  return {code == 0 && certified == 9 && lines == 9 && trials_ok && secs < 5.0, s.str()};
}

Outcome anchors() {
  std::ostringstream s;
  bool ok = true;
  for (const auto& q : {CIQuery::make(6, 8, 8, 19), CIQuery::make(6, 8, 9, 20), CIQuery::make(5, 12, 12, 26)}) {
    const auto t0 = Clock::now();
    const auto r = ci_witness(q);
    const double secs = seconds_since(t0);
    ok &= r.verdict == WitnessVerdict::CertifiedYes && secs < 60.0;
    s << '(' << q.to_string() << ") " << to_string(r.verdict) << ' ' << secs << "s; ";
  }
  return {ok, s.str()};
}

Outcome margins() {
  const auto m777 = nonexistence_margin(7, 7, 7, 18);
  const auto m5 = nonexistence_margin(5, 13, 13, 28);
  const auto m6 = nonexistence_margin(6, 9, 9, 24);
  // Independent evaluation of the same quantity.
  const std::vector<std::int64_t> w{7, 7, 7, 11};
  const auto direct = testing::koszul_alternating_sum(w, 7) * 2 - testing::koszul_alternating_sum(w, 18);
  const std::int64_t a = 7;
  const std::int64_t cubic = (-2 * a * a * a + 12 * a * a + 11 * a - 9) / 3;
  std::ostringstream s;
  s << "margin(7,7,7,18)=" << m777 << " (Koszul sum " << direct << ", expected " << cubic
    << " from the quoted cubic, which margin(7,7,11,22)=" << nonexistence_margin(7, 7, 11, 22)
    << " attains); margin(5,13,13,28)=" << m5 << "; margin(6,9,9,24)=" << m6;
  return {m777 == -10 && m5 < 0 && m6 < 0, s.str()};
}

Outcome soundness_sweep() {
  std::vector<CIQuery> exists, not_exists;
  std::vector<CIQuery> seven_seven;
  int margin_contradictions = 0, cells = 0;
  for (std::int64_t d = 2; d <= 30; ++d)
    for (std::int64_t a = 1; a < d; ++a)
      for (std::int64_t b = a; b < d; ++b)
        for (std::int64_t c = b; c < d; ++c) {
          const CIQuery q{a, b, c, d};
          ++cells;
          const auto v = classify(q).verdict;
          if (v == ciw::Verdict::Exists) {
            if (nonexistence_margin(a, b, c, d) < 0) ++margin_contradictions;
            exists.push_back(q);
          } else if (v == ciw::Verdict::NotExists) {
            not_exists.push_back(q);
          } else if (a == 7 && b == 7 && c <= 8 && d >= a + b + c - 3) {
            seven_seven.push_back(q);
          }
        }

  OracleConfig cfg;
  cfg.resource_cap = 4'000'000;
  auto entries = [](const CIQuery& q) {
    const std::vector<std::int64_t> degs{q.a, q.b, q.c, q.d - q.c, q.d - q.b, q.d - q.a};
    return assembly_entries(degs, q.d);
  };
  std::mt19937_64 rng(20240601);
  auto sample = [&](std::vector<CIQuery> pool, std::size_t want) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<CIQuery> out;
    for (const auto& q : pool) {
      if (out.size() == want) break;
      if (entries(q) <= cfg.resource_cap) out.push_back(q);
    }
    return out;
  };

  int exists_certified = 0, oracle_contradictions = 0;
  const auto exists_sample = sample(exists, 60);
  for (const auto& q : exists_sample) {
    if (ci_witness(normalize(q).first, cfg).verdict == WitnessVerdict::CertifiedYes) ++exists_certified;
  }
  const auto not_sample = sample(not_exists, 25);
  for (const auto& q : not_sample) {
    if (ci_witness(q, cfg).verdict == WitnessVerdict::CertifiedYes) ++oracle_contradictions;
  }
  // CI(7,7,7) and CI(7,7,8) past the a >= 7 threshold, which the case table
  // leaves open; reported, not scored.
  int seven_certified = 0, seven_checked = 0;
  for (const auto& q : seven_seven) {
    if (entries(q) > cfg.resource_cap) continue;
    ++seven_checked;
    if (ci_witness(q, cfg).verdict == WitnessVerdict::CertifiedYes) ++seven_certified;
  }

  std::ostringstream s;
  s << cells << " cells; Exists with negative margin: " << margin_contradictions
    << "; oracle on classify-Exists: " << exists_certified << '/' << exists_sample.size()
    << " CertifiedYes; oracle CertifiedYes on classify-NotExists: " << oracle_contradictions << '/'
    << not_sample.size() << "; open CI(7,7,7|8) cells at d>=c+11 certified: " << seven_certified << '/'
    << seven_checked;
  return {margin_contradictions == 0 && oracle_contradictions == 0 && exists_sample.size() >= 50 &&
              exists_certified == static_cast<int>(exists_sample.size()),
          s.str()};
}

Outcome regular_sequences() {
  const auto t0 = Clock::now();
  const PrimeField f(10007);
  std::mt19937_64 rng(6);
  int instances = 0, checks = 0, mismatches = 0;
  for (; instances < 120; ++instances) {
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<std::int64_t> degs;
    std::vector<HomogeneousForm> forms;
    for (int i = 0; i < k; ++i) {
      degs.push_back(1 + static_cast<std::int64_t>(rng() % 5));
      forms.push_back(random_homogeneous_form(static_cast<int>(degs.back()), f, rng));
    }
    const DegreeTuple w(degs);
    // sum(a_i - 1) is the socle degree when k = 4 and the regularity of the
    // quotient in general; past it the Hilbert function is polynomial.
    std::int64_t top = 2;
    for (auto g : degs) top += g - 1;
    for (std::int64_t d = 0; d <= top; ++d) {
      ++checks;
      if (quotient_hf_explicit(forms, d) != hf_ci(w, d)) ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << instances << " instances, " << checks << " degree checks, " << mismatches << " mismatches, "
    << secs << " s";
  return {mismatches == 0 && secs < 30.0, s.str()};
}

Outcome identities() {
  using testing::binom3;
  long checks = 0, failed = 0;
  for (std::int64_t a = 1; a <= 15; ++a)
    for (std::int64_t b = a; b <= 15; ++b)
      for (std::int64_t c = b; c <= 15; ++c)
        for (std::int64_t e = 1; e <= 15; ++e) {
          const DegreeTuple w{a, b, c, e};
          const auto s = socle_degree(w);
          for (std::int64_t x = 0; x <= s; ++x) {
            ++checks;
            failed += hf_ci(w, x) != hf_ci(w, s - x);
          }
          if (e > b) {
            ++checks;
            failed += hf_ci(w, b) != binom3(b + 3) - binom3(b - a + 3) - (b < c ? 1 : 2);
          }
          const std::int64_t d = c + e;
          if (d >= a + b + c - 3) {
            if (c - a - b >= -3) {
              ++checks;
              failed += hf_ci(w, d) != h_poly(a, b, c, d);
            } else if (a == 4 && b == c) {
              ++checks;
              failed += hf_ci(w, d) != h_poly(a, b, c, d) - 1;
            }
          }
        }
  std::ostringstream s;
  s << checks << " identities over all sorted triples with entries <= 15 and d-c <= 15, " << failed
    << " failures";
  return {failed == 0, s.str()};
}

Outcome lemma_discrepancy() {
  int code = 0;
  const std::string out = run_cli({"reproduce", "lemma-5-4"}, code);
  const bool direct = out.find("PASS  direct margin H(5)+H(12)-H(41): -1") != std::string::npos;
  const bool degree14 = out.find("PASS  margin read at degree 14: H(5)+H(12)-H(14): -57") != std::string::npos;
  const bool h41 = out.find(": 390 ") != std::string::npos;
  const bool note = out.find("note: ") != std::string::npos && out.find("either reading") != std::string::npos;
  std::ostringstream s;
  s << "direct -1: " << (direct ? "yes" : "no") << ", degree-14 reading -57: " << (degree14 ? "yes" : "no")
    << ", H(W,41)=390: " << (h41 ? "yes" : "no") << ", note: " << (note ? "yes" : "no");
  return {code == 0 && direct && degree14 && h41 && note, s.str()};
}

}  // namespace

int main() {
  report(1, "Hilbert values of CI(5,12,13+x) quotients", lemma_numbers);
  report(2, "CI(6,6,6) oracle grid d=7..15", example_grid);
  report(3, "oracle anchors (6,8,8,19), (6,8,9,20), (5,12,12,26)", anchors);
  report(4, "non-existence margins", margins);
  report(5, "classification soundness sweep d<=30", soundness_sweep);
  report(6, "regular-sequence oracle equivalence", regular_sequences);
  report(7, "Gorenstein symmetry and closed-form identities", identities);
  report(8, "margin discrepancy record", lemma_discrepancy);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
