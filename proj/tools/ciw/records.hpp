#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ciw::cli {

/// Keys a record line may carry, in output order.
inline constexpr std::string_view kRecordKeys[] = {
    "query", "verdict", "status", "rule", "anchor", "margin",
    "prime", "seed",    "trials", "hf",   "elapsed_ms"};

/// One line of `key=value` pairs separated by single spaces. Fields are
/// emitted in kRecordKeys order regardless of insertion order.
class Record {
 public:
  Record& set(std::string_view key, std::string value);
  Record& set(std::string_view key, std::int64_t value) { return set(key, std::to_string(value)); }

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::ostream& operator<<(std::ostream& os, const Record& r);

/// Inverse of Record::str, for tests and downstream scripts.
std::vector<std::pair<std::string, std::string>> parse_record(std::string_view line);

}  // namespace ciw::cli
