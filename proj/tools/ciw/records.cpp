#include "records.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace ciw::cli {

namespace {

std::size_t key_rank(std::string_view key) {
  const auto it = std::find(std::begin(kRecordKeys), std::end(kRecordKeys), key);
  if (it == std::end(kRecordKeys)) throw std::invalid_argument("unknown record key " + std::string(key));
  return static_cast<std::size_t>(it - std::begin(kRecordKeys));
}

}  // namespace

Record& Record::set(std::string_view key, std::string value) {
  key_rank(key);
  if (value.empty() || value.find_first_of(" =\n") != std::string::npos) {
    throw std::invalid_argument("record value for " + std::string(key) + " must be a non-empty token");
  }
  for (auto& [k, v] : fields_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  fields_.emplace_back(std::string(key), std::move(value));
  return *this;
}

std::string Record::str() const {
  auto sorted = fields_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return key_rank(x.first) < key_rank(y.first); });
  std::string s;
  for (const auto& [k, v] : sorted) {
    if (!s.empty()) s += ' ';
    s += k + '=' + v;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Record& r) { return os << r.str(); }

std::vector<std::pair<std::string, std::string>> parse_record(std::string_view line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t sp = std::min(line.find(' ', pos), line.size());
    const auto tok = line.substr(pos, sp - pos);
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed field " + std::string(tok));
    out.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
    pos = sp + 1;
  }
  return out;
}

}  // namespace ciw::cli
