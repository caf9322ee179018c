#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ciw/witness.hpp"

namespace ciw::cli {

enum ExitCode : int {
  kExists = 0,
  kNotExists = 1,
  kUnknown = 2,
  kUsage = 64,
  kResource = 70,
};

/// Values of CIW_PRIME, CIW_SEED and CIW_CAP, if set.
struct Environment {
  std::optional<std::string> prime;
  std::optional<std::string> seed;
  std::optional<std::string> cap;

  static Environment from_process();
};

enum class OutputMode { Human, Records };

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 2;
  bool oracle_enabled = false;
  std::uint64_t resource_cap = kDefaultResourceCap;
  std::optional<std::uint32_t> second_prime;
  OutputMode output_mode = OutputMode::Human;

  /// Throws ConfigError unless prime >= 10^4 is prime, trials >= 1 and cap >= 10^6.
  void validate() const;
  OracleConfig oracle() const;
};

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace ciw::cli
