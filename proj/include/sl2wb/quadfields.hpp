#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sl2wb {

enum class Splitting { Inert, Ramified, Split };

std::string_view to_string(Splitting s);

bool is_square_free(std::int64_t n);

/// Behavior of 2 in the integers of Q(√D).  Throws InvalidArgument for
/// non-square-free D or D ∈ {0, 1}.
Splitting splitting_of_2(std::int64_t d);
Splitting splitting_of_3(std::int64_t d);

struct SplittingReport {
  std::int64_t d = 0;
  Splitting split2 = Splitting::Inert;
  Splitting split3 = Splitting::Inert;
  unsigned r1 = 0, r2 = 0, q = 0;
  /// max(2 r2 + r1, q).
  unsigned v = 0;
  /// r2, the extra amount in the improved bound 2k + r2.
  unsigned improved_offset = 0;
};

/// Real quadratic fields only: D must be square-free and > 1.
SplittingReport v_profile(std::int64_t d);

struct DeltaVerdict {
  std::int64_t d = 0;
  unsigned k = 0;
  /// nullopt means Δ_k = −∞.
  std::optional<unsigned> lower_bound;
  std::optional<unsigned> improved_lower_bound;
};

DeltaVerdict delta_verdict(std::int64_t d, unsigned k);

struct ScanRow {
  std::int64_t d = 0;
  /// Absent for skipped values; `note` says why.
  std::optional<SplittingReport> report;
  std::string note;
};

struct ScanTable {
  std::vector<ScanRow> rows;
  std::map<unsigned, std::size_t> v_histogram;
};

/// One row per D in [lo, hi]; non-square-free values and D <= 1 are skipped
/// with a note.  lo > hi gives an empty table.
ScanTable scan_range(std::int64_t lo, std::int64_t hi);

} // namespace sl2wb
