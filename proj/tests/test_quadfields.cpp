#include "sl2wb/error.hpp"
#include "sl2wb/quadfields.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace sl2wb;

TEST_CASE("splitting of 2 and 3") {
  CHECK(splitting_of_2(5) == Splitting::Inert);
  CHECK(splitting_of_2(7) == Splitting::Ramified);
  CHECK(splitting_of_2(17) == Splitting::Split);
  CHECK(splitting_of_3(21) == Splitting::Ramified);
  CHECK(splitting_of_3(13) == Splitting::Split);
  CHECK(splitting_of_3(5) == Splitting::Inert);
  CHECK_THROWS_AS(splitting_of_2(12), Error);
  CHECK_THROWS_AS(splitting_of_3(1), Error);
}

TEST_CASE("v profiles") {
  CHECK(v_profile(5).v == 0);
  CHECK(v_profile(21).v == 1);
  CHECK(v_profile(13).v == 2);
  CHECK(v_profile(2).v == 2);
  const SplittingReport r7 = v_profile(7);
  CHECK(r7.r1 == 0);
  CHECK(r7.r2 == 1);
  CHECK(r7.improved_offset == 1);
  const SplittingReport r17 = v_profile(17);
  CHECK(r17.r1 == 2);
  CHECK(r17.q == 0);
  CHECK_THROWS_AS(v_profile(-5), Error);
  CHECK_THROWS_AS(v_profile(1), Error);
  CHECK_THROWS_AS(v_profile(18), Error);
}

TEST_CASE("v values against the case table") {
  for (std::int64_t d = 2; d <= 500; ++d) {
    if (!is_square_free(d))
      continue;
    const SplittingReport r = v_profile(d);
    const bool two_inert = d % 8 == 5;
    CHECK(r.v == std::max(2 * r.r2 + r.r1, r.q));
    if (r.v <= 1)
      CHECK(two_inert);
    if (two_inert && d % 3 == 2)
      CHECK(r.v == 0);
    if (two_inert && d % 3 == 0)
      CHECK(r.v == 1);
    if (!two_inert || d % 3 == 1)
      CHECK(r.v == 2);
  }
}

TEST_CASE("delta verdicts") {
  const DeltaVerdict a = delta_verdict(5, 1);
  CHECK(a.lower_bound == 2u);
  CHECK_FALSE(delta_verdict(13, 1).lower_bound.has_value());
  const DeltaVerdict b = delta_verdict(7, 2);
  CHECK(b.lower_bound == 4u);
  CHECK(b.improved_lower_bound == 5u);
  for (std::int64_t d : {2, 5, 13, 21, 33, 105})
    for (unsigned k = 0; k < 4; ++k)
      if (delta_verdict(d, k).lower_bound)
        CHECK(delta_verdict(d, k + 1).lower_bound.has_value());
}

TEST_CASE("range scans") {
  const ScanTable t = scan_range(2, 10);
  CHECK(t.rows.size() == 9);
  std::map<std::int64_t, unsigned> v;
  std::size_t skipped = 0;
  for (const auto& row : t.rows) {
    if (row.report)
      v[row.d] = row.report->v;
    else
      ++skipped;
  }
  CHECK(skipped == 3);
  CHECK(v == std::map<std::int64_t, unsigned>{{2, 2}, {3, 2}, {5, 0}, {6, 2}, {7, 2}, {10, 2}});
  CHECK(t.v_histogram.at(2) == 5);
  CHECK(scan_range(21, 21).rows.front().report->v == 1);
  CHECK(scan_range(10, 2).rows.empty());
}
