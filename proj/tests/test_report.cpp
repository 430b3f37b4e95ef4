#include "sl2wb/report.hpp"

#include <doctest.h>

using namespace sl2wb;

TEST_CASE("ring and matrix JSON") {
  const FiniteRing r = parse_ring_spec("F2[T]/(T^2) x F3");
  const Json j = ring_json(r);
  CHECK(j["order"] == 12);
  CHECK(j["factors"].size() == 2);
  CHECK(j["factors"][0]["e"] == 2);
  CHECK(j["factors"][1]["k"] == 1);
  const Json m = matrix_json(r, e12(r, r.parse_element("(T,1)")));
  CHECK(m["b"] == "(T,1)");
  CHECK(m["ring_spec"] == "F2[T]/(T^2) x F3");
}

TEST_CASE("group JSON") {
  const GroupTable g = GroupTable::enumerate(parse_ring_spec("F2[T]/(T^2)"));
  const Json j = group_json(g, conjugacy_classes(g), abelianization(g));
  CHECK(j["group_order"] == 48);
  CHECK(j["abelian_invariants"] == Json::array({2, 2}));
  CHECK(j["perfect"] == false);
}

TEST_CASE("delta JSON encodes minus infinity as null") {
  const GroupTable g = GroupTable::enumerate(parse_ring_spec("F2[T]/(T^2)"));
  const Json j = delta_json(g, delta_k(g, 1));
  CHECK(j["value"].is_null());
  CHECK(j["minus_infinity"] == true);
}

TEST_CASE("scan TSV") {
  const std::string tsv = scan_tsv(scan_range(4, 5));
  CHECK(tsv.find("skipped: not square-free") != std::string::npos);
  CHECK(tsv.find("5\tinert\tinert\t0\t0\t0\t0") != std::string::npos);
}
