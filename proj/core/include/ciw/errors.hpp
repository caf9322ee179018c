#pragma once

#include <stdexcept>
#include <string>

namespace ciw {

/// Inputs outside an operation's mathematical domain (wrong arity, d <= c, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unusable configuration, e.g. a composite modulus.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a size limit. `cap()` is the limit that was hit.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, unsigned long long cap)
      : std::runtime_error(what), cap_(cap) {}
  unsigned long long cap() const noexcept { return cap_; }

 private:
  unsigned long long cap_;
};

}  // namespace ciw
