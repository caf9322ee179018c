#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>

#include "ciw/decider.hpp"
#include "ciw/errors.hpp"
#include "ciw/hilbert.hpp"
#include "records.hpp"
#include "suites.hpp"

namespace ciw::cli {

namespace {

std::uint64_t parse_env_u64(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ConfigError(name + "='" + text + "' is not a non-negative integer");
  }
  return v;
}

void print_certificate(std::ostream& out, const Decision& dec) {
  out << "certificate:\n";
  int i = 1;
  for (const auto& s : dec.certificate) {
    out << "  " << i++ << ". " << s.rule << " [" << s.anchor << "]";
    for (const auto& [k, v] : s.params) out << ' ' << k << '=' << v;
    if (!s.evidence.empty()) {
      out << " ->";
      for (const auto& [k, v] : s.evidence) out << ' ' << k << '=' << v;
    }
    out << "\n     " << rule_statement(s.rule) << '\n';
    if (!s.note.empty()) out << "     note: " << s.note << '\n';
  }
}

void print_witness(std::ostream& out, const WitnessReport& r) {
  out << "witness CI(" << r.query.a << ',' << r.query.b << ',' << r.query.c << ") d=" << r.query.d
      << ": " << to_string(r.verdict) << " (" << r.matrix_rows << "x" << r.matrix_cols
      << " matrix, prime " << r.prime << ", seed " << r.seed << ", " << r.trials << " trials)\n";
  for (const auto& t : r.runs) {
    out << "  trial seed=" << t.seed << " prime=" << t.prime << " H(S,d)=" << t.hilbert_value
        << '\n';
  }
  if (r.verdict == WitnessVerdict::CertifiedYes) {
    out << "  a vanishing specialization over GF(p) certifies generic vanishing over C\n";
  } else {
    out << "  no vanishing specialization found; this is evidence, not a proof of non-existence\n";
  }
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Exists:
      return kExists;
    case Verdict::NotExists:
      return kNotExists;
    case Verdict::Unknown:
      break;
  }
  return kUnknown;
}

int print_suite(std::ostream& out, const SuiteResult& res, OutputMode mode) {
  for (const auto& c : res.cells) {
    if (mode == OutputMode::Records) {
      out << c.record << '\n';
    } else {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.label << ": " << c.detail << '\n';
    }
  }
  if (mode == OutputMode::Human) {
    for (const auto& n : res.notes) out << "note: " << n << '\n';
    out << res.name << ": " << (res.all_pass() ? "all cells pass" : "FAILURES") << " ("
        << res.cells.size() << " cells)\n";
  }
  return res.all_pass() ? 0 : 1;
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* v = std::getenv("CIW_PRIME")) env.prime = v;
  if (const char* v = std::getenv("CIW_SEED")) env.seed = v;
  if (const char* v = std::getenv("CIW_CAP")) env.cap = v;
  return env;
}

void RunConfig::validate() const {
  if (prime < 10'000 || !is_prime(prime) || prime > kMaxModulus) {
    throw ConfigError("--prime must be a prime in [10000, 2^31), got " + std::to_string(prime));
  }
  if (second_prime && (*second_prime < 10'000 || !is_prime(*second_prime) || *second_prime > kMaxModulus)) {
    throw ConfigError("--second-prime must be a prime in [10000, 2^31)");
  }
  if (trials < 1) throw ConfigError("--trials must be >= 1");
  if (resource_cap < 1'000'000) throw ConfigError("--cap must be >= 1000000");
}

OracleConfig RunConfig::oracle() const {
  return OracleConfig{prime, seed, trials, resource_cap, second_prime};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  RunConfig cfg;
  try {
    if (env.prime) {
      const auto p = parse_env_u64("CIW_PRIME", *env.prime);
      if (p > kMaxModulus) throw ConfigError("CIW_PRIME exceeds 2^31 - 1");
      cfg.prime = static_cast<std::uint32_t>(p);
    }
    if (env.seed) cfg.seed = parse_env_u64("CIW_SEED", *env.seed);
    if (env.cap) cfg.resource_cap = parse_env_u64("CIW_CAP", *env.cap);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Complete intersection points on generic surfaces in P^3", "ciw"};
  app.require_subcommand(1);
  bool records = false;
  app.add_option("--prime", cfg.prime, "working prime (env CIW_PRIME)");
  app.add_option("--second-prime", cfg.second_prime, "re-run failed oracle trials over this prime");
  app.add_option("--seed", cfg.seed, "base RNG seed (env CIW_SEED)");
  app.add_option("--trials", cfg.trials, "oracle trials per query");
  app.add_flag("--oracle,!--no-oracle", cfg.oracle_enabled, "run the witness oracle when rules are silent");
  app.add_option("--cap", cfg.resource_cap, "largest oracle matrix, in entries (env CIW_CAP)");
  app.add_flag("--records", records, "one key=value record per result");

  std::int64_t a = 0, b = 0, c = 0, d = 0;
  auto* decide_cmd = app.add_subcommand("decide", "decide whether CI(a,b,c) lies on the generic degree-d surface");
  decide_cmd->add_option("a", a)->required();
  decide_cmd->add_option("b", b)->required();
  decide_cmd->add_option("c", c)->required();
  decide_cmd->add_option("d", d)->required();
  bool no_rules = false;
  decide_cmd->add_flag("--no-rules", no_rules, "skip the closed-form case table");

  std::string degrees_text;
  std::int64_t at = 0;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a complete intersection");
  hilbert_cmd->add_option("degrees", degrees_text, "comma-separated generator degrees")->required();
  hilbert_cmd->add_option("--at", at, "degree to evaluate at")->required();

  auto* witness_cmd = app.add_subcommand("witness", "run the random-specialization oracle");
  witness_cmd->add_option("a", a)->required();
  witness_cmd->add_option("b", b)->required();
  witness_cmd->add_option("c", c)->required();
  witness_cmd->add_option("d", d)->required();

  std::string suite;
  std::int64_t bound = 12;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "run a verification battery");
  reproduce_cmd->add_option("suite", suite, "example-6-4 | lemma-5-4 | thm-6-3-a6 | aleq4-spot | sweep")
      ->required();
  reproduce_cmd->add_option("--bound", bound, "largest d for the sweep suite");

  for (auto* sub : {decide_cmd, hilbert_cmd, witness_cmd, reproduce_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }
  cfg.output_mode = records ? OutputMode::Records : OutputMode::Human;

  try {
    cfg.validate();

    if (*decide_cmd) {
      const CIQuery q = CIQuery::make(a, b, c, d);
      DecideOptions opts;
      opts.classification = !no_rules;
      opts.oracle = cfg.oracle_enabled;
      opts.oracle_config = cfg.oracle();
      const auto t0 = std::chrono::steady_clock::now();
      const Decision dec = ciw::decide(q, opts);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (cfg.output_mode == OutputMode::Records) {
        out << decision_record(dec, ms) << '\n';
      } else {
        out << "query: CI(" << q.a << ',' << q.b << ',' << q.c << ") on the generic degree-" << q.d
            << " surface of P^3\n"
            << "verdict: " << to_string(dec.verdict) << '\n';
        print_certificate(out, dec);
        for (const auto& w : dec.witnesses) print_witness(out, w);
        out << "seed: " << cfg.seed << '\n';
      }
      return exit_for(dec.verdict);
    }

    if (*hilbert_cmd) {
      const DegreeTuple t = DegreeTuple::parse(degrees_text);
      const std::int64_t h = hf_ci(t, at);
      if (cfg.output_mode == OutputMode::Records) {
        Record rec;
        rec.set("query", t.to_string() + "@" + std::to_string(at)).set("hf", h);
        out << rec << '\n';
      } else {
        out << "H(R/(" << t.to_string() << "), " << at << ") = " << h << '\n';
        if (t.size() == 4) {
          const auto s = socle_degree(t);
          out << "socle degree: " << s << '\n' << "symmetric partner degree: " << s - at << '\n';
        } else {
          out << "socle degree: none (not Artinian with " << t.size() << " generators)\n";
        }
      }
      return 0;
    }

    if (*witness_cmd) {
      const CIQuery q = CIQuery::make(a, b, c, d);
      const auto t0 = std::chrono::steady_clock::now();
      const WitnessReport r = ci_witness(q, cfg.oracle());
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (cfg.output_mode == OutputMode::Records) {
        Record rec;
        rec.set("query", q.to_string())
            .set("verdict", std::string(to_string(r.verdict)))
            .set("rule", "oracle")
            .set("prime", static_cast<std::int64_t>(r.prime))
            .set("seed", std::to_string(r.seed))
            .set("trials", static_cast<std::int64_t>(r.trials))
            .set("hf", join_hf(r))
            .set("elapsed_ms", static_cast<std::int64_t>(ms));
        out << rec << '\n';
      } else {
        print_witness(out, r);
      }
      return r.verdict == WitnessVerdict::CertifiedYes ? kExists : kUnknown;
    }

    if (*reproduce_cmd) {
      const OracleConfig oc = cfg.oracle();
      if (suite == "lemma-5-4") return print_suite(out, suite_ci5_12_margins(), cfg.output_mode);
      if (suite == "example-6-4") return print_suite(out, suite_ci666_grid(oc), cfg.output_mode);
      if (suite == "thm-6-3-a6") return print_suite(out, suite_a6_existence(oc), cfg.output_mode);
      if (suite == "aleq4-spot") return print_suite(out, suite_a_le_4_spot(oc), cfg.output_mode);
      if (suite == "sweep") {
        if (bound < 2 || bound > kMaxDegree) throw ConfigError("--bound must lie in [2, 1000000]");
        DecideOptions opts;
        opts.oracle = cfg.oracle_enabled;
        opts.oracle_config = oc;
        for (const auto& rec : sweep(bound, opts)) {
          if (cfg.output_mode == OutputMode::Records) {
            out << rec << '\n';
          } else {
            std::string line;
            for (const auto& [k, v] : parse_record(rec.str())) {
              if (k == "elapsed_ms") continue;
              line += (line.empty() ? "" : "  ") + k + " " + v;
            }
            out << line << '\n';
          }
        }
        return 0;
      }
      std::string names;
      for (auto n : kSuiteNames) names += (names.empty() ? "" : ", ") + std::string(n);
      err << "usage error: unknown suite '" << suite << "'; available: " << names << '\n';
      return kUsage;
    }
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ciw::cli
