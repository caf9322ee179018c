#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ciw/decider.hpp"
#include "ciw/witness.hpp"
#include "records.hpp"

namespace ciw::cli {

struct CellResult {
  bool pass;
  std::string label;   // human-readable cell description
  std::string detail;  // computed values
  Record record;
};

struct SuiteResult {
  std::string name;
  std::vector<CellResult> cells;
  std::vector<std::string> notes;

  bool all_pass() const;
};

inline constexpr std::string_view kSuiteNames[] = {"example-6-4", "lemma-5-4", "thm-6-3-a6",
                                                   "aleq4-spot", "sweep"};

/// Closed-form Hilbert values for CI(5,12,c) with c = 13 + x, including both
/// readings of the final margin.
SuiteResult suite_ci5_12_margins();

/// Oracle on CI(6,6,6) for every d in 7..15.
SuiteResult suite_ci666_grid(const OracleConfig& cfg);

/// Oracle on every CI(6,6,c) with c <= 9, d <= 9 + c; CI(6,7,c) with c <= 10,
/// d <= 10 + c; and the anchors CI(6,8,8) at 19, CI(6,8,9) at 20.
SuiteResult suite_a6_existence(const OracleConfig& cfg);

/// Oracle spot checks for a <= 4 plus a closed-form margin sweep.
SuiteResult suite_a_le_4_spot(const OracleConfig& cfg);

/// One decide() record per cell a <= b <= c < d <= bound, sorted by query.
/// `on_cell` sees each decision before it is turned into a record.
std::vector<Record> sweep(std::int64_t bound, const DecideOptions& opts,
                          const std::function<void(const Decision&)>& on_cell = {});

/// The record decide() output is built from.
Record decision_record(const Decision& dec, double elapsed_ms);

std::string join_hf(const WitnessReport& r);

}  // namespace ciw::cli
