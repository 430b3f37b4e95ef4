#include "sl2wb/quadfields.hpp"

#include "sl2wb/error.hpp"

#include <algorithm>

namespace sl2wb {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void require_square_free(std::int64_t d) {
  if (d == 0 || d == 1)
    throw Error(ErrorKind::InvalidArgument, "D must not be 0 or 1");
  if (!is_square_free(d))
    throw Error(ErrorKind::InvalidArgument, "D = " + std::to_string(d) + " is not square-free");
}

} // namespace

std::string_view to_string(Splitting s) {
  switch (s) {
  case Splitting::Inert: return "inert";
  case Splitting::Ramified: return "ramified";
  case Splitting::Split: return "split";
  }
  return "?";
}

bool is_square_free(std::int64_t n) {
  std::uint64_t m = n < 0 ? std::uint64_t(-(n + 1)) + 1 : std::uint64_t(n);
  if (m == 0)
    return false;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0)
      return false;
  return true;
}

Splitting splitting_of_2(std::int64_t d) {
  require_square_free(d);
  switch (mod(d, 8)) {
  case 1: return Splitting::Split;
  case 5: return Splitting::Inert;
  default: return Splitting::Ramified;
  }
}

Splitting splitting_of_3(std::int64_t d) {
  require_square_free(d);
  switch (mod(d, 3)) {
  case 0: return Splitting::Ramified;
  case 1: return Splitting::Split;
  default: return Splitting::Inert;
  }
}

SplittingReport v_profile(std::int64_t d) {
  if (d < 0)
    throw Error(ErrorKind::InvalidArgument,
                "D = " + std::to_string(d) +
                    " is negative: imaginary quadratic integers have finitely many units, so the lower bounds do "
                    "not apply");
  if (d <= 1)
    throw Error(ErrorKind::InvalidArgument, "D must be greater than 1");
  SplittingReport rep;
  rep.d = d;
  rep.split2 = splitting_of_2(d);
  rep.split3 = splitting_of_3(d);
  switch (rep.split2) {
  case Splitting::Inert: break;
  case Splitting::Ramified: rep.r2 = 1; break;
  case Splitting::Split: rep.r1 = 2; break;
  }
  switch (rep.split3) {
  case Splitting::Inert: break;
  case Splitting::Ramified: rep.q = 1; break;
  case Splitting::Split: rep.q = 2; break;
  }
  rep.v = std::max(2 * rep.r2 + rep.r1, rep.q);
  rep.improved_offset = rep.r2;
  return rep;
}

DeltaVerdict delta_verdict(std::int64_t d, unsigned k) {
  const SplittingReport rep = v_profile(d);
  DeltaVerdict out;
  out.d = d;
  out.k = k;
  if (k >= rep.v) {
    out.lower_bound = 2 * k;
    out.improved_lower_bound = 2 * k + rep.r2;
  }
  return out;
}

ScanTable scan_range(std::int64_t lo, std::int64_t hi) {
  ScanTable table;
  for (std::int64_t d = lo; d <= hi; ++d) {
    ScanRow row;
    row.d = d;
    if (d <= 1)
      row.note = "skipped: D must be greater than 1";
    else if (!is_square_free(d))
      row.note = "skipped: not square-free";
    else {
      row.report = v_profile(d);
      ++table.v_histogram[row.report->v];
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace sl2wb
