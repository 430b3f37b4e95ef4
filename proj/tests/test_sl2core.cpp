#include "sl2wb/error.hpp"
#include "sl2wb/sl2core.hpp"

#include <doctest.h>

using namespace sl2wb;

TEST_CASE("elementary matrices add in the exponent") {
  const FiniteRing r = parse_ring_spec("Z/12");
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = 0; y < r.order(); ++y) {
      CHECK(mul(r, e12(r, x), e12(r, y)) == e12(r, r.add(x, y)));
      CHECK(mul(r, e21(r, x), e21(r, y)) == e21(r, r.add(x, y)));
    }
}

TEST_CASE("inverse, transpose and determinant") {
  const FiniteRing r = parse_ring_spec("F2[T]/(T^2) x F3");
  const Mat2 id = identity(r);
  for (Elem x = 0; x < r.order(); ++x) {
    const Mat2 c = self_reproducing(r, x);
    CHECK(c == mul(r, e21(r, x), e12(r, x)));
    CHECK(det(r, c) == r.one());
    CHECK(mul(r, c, inverse(r, c)) == id);
    CHECK(transpose(transpose(c)) == c);
  }
  CHECK_THROWS_AS(from_entries(r, 1, 1, 1, 1), Error);
}

TEST_CASE("matrix ids round-trip") {
  const FiniteRing r = parse_ring_spec("Z/9");
  for (Elem x = 0; x < 9; ++x) {
    const Mat2 m = mul(r, e12(r, x), e21(r, r.from_integer(2)));
    CHECK(matrix_from_id(r, matrix_id(r, m)) == m);
  }
}

TEST_CASE("level ideal and rho family") {
  const FiniteRing z4 = parse_ring_spec("Z/4");
  const Ideal l = level_ideal(z4, e12(z4, 2));
  CHECK(z4.elements_of(l).size() == 2);
  CHECK(level_ideal(z4, identity(z4)).is_zero());
  CHECK(level_ideal(z4, e12(z4, 1)).is_whole());

  const FiniteRing f3 = parse_ring_spec("F3");
  for (Elem x = 0; x < 3; ++x) {
    const RhoFamily f = rho_family(f3, e12(f3, x));
    CHECK(f == RhoFamily{x, 0, f3.neg(x), 0});
  }
  CHECK(rho(z4, h(z4, 3)) == 0);
}

TEST_CASE("commutator of h(u) with E12(a)") {
  for (const char* spec : {"F5", "Z/9", "Z/12", "F4"}) {
    const FiniteRing r = parse_ring_spec(spec);
    for (Elem u : r.units())
      for (Elem a = 0; a < r.order(); ++a)
        CHECK(comm(r, h(r, u), e12(r, a)) == e12(r, r.mul(r.sub(r.mul(u, u), r.one()), a)));
  }
}

TEST_CASE("self-reproducing shift identity") {
  for (const char* spec : {"Z/4", "F3", "Z/9"}) {
    const FiniteRing r = parse_ring_spec(spec);
    for (Elem x = 0; x < r.order(); ++x)
      for (Elem y = 0; y < r.order(); ++y)
        CHECK(selfrep_shift_check(r, x, y));
  }
}

TEST_CASE("matrix grammar") {
  const FiniteRing r = parse_ring_spec("F2[T]/(T^2) x F3");
  CHECK(parse_matrix(r, "E12((T,1))") == e12(r, r.parse_element("(T,1)")));
  CHECK(parse_matrix(r, "I") == identity(r));
  CHECK(parse_matrix(r, "-I") == scalar(r, r.neg(r.one())));
  CHECK(parse_matrix(r, "[[1,(T,2)],[0,1]]") == e12(r, r.parse_element("(T,2)")));

  const FiniteRing z9 = parse_ring_spec("Z/9");
  const auto list = parse_matrix_list(z9, "E12(1), E21(3), h(2), C(4)");
  REQUIRE(list.size() == 4);
  CHECK(list[1] == e21(z9, 3));
  CHECK(list[2] == h(z9, 2));
  CHECK(list[3] == self_reproducing(z9, 4));
  CHECK(parse_matrix(z9, format_matrix(z9, list[3])) == list[3]);
  CHECK_THROWS_AS(parse_matrix(z9, "E13(1)"), Error);
  CHECK_THROWS_AS(parse_matrix(z9, "h(3)"), Error);
  CHECK_THROWS_AS(parse_matrix(z9, "[[1,1],[1,1]]"), Error);
}
