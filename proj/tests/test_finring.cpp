#include "sl2wb/error.hpp"
#include "sl2wb/finring.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

using namespace sl2wb;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no sl2wb::Error thrown");
  return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("ring specs decompose into chain local factors") {
  const FiniteRing z12 = parse_ring_spec("Z/12");
  CHECK(z12.order() == 12);
  REQUIRE(z12.factor_count() == 2);
  CHECK(z12.factors()[0] == ChainLocalRing::integers(2, 2));
  CHECK(z12.factors()[1] == ChainLocalRing::integers(3, 1));

  const FiniteRing f4 = parse_ring_spec("F4");
  CHECK(f4.order() == 4);
  CHECK(f4.factors()[0].g == std::vector<unsigned>{1, 1, 1});

  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  CHECK(dual.factors()[0] == ChainLocalRing::polynomial(2, {0, 1}, 2));

  const FiniteRing prod = parse_ring_spec("F2[T]/(T^2) x F3");
  CHECK(prod.order() == 12);
  CHECK(prod.factors()[0].kind == ChainLocalRing::Kind::PolynomialQuotient);
  CHECK(parse_ring_spec("Z/4 × F3").order() == 12);
}

TEST_CASE("bad specs and caps are refused") {
  CHECK(kind_of([] { parse_ring_spec("Z/300"); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { parse_ring_spec("Z/128", 64); }) == ErrorKind::CapExceeded);
  CHECK(parse_ring_spec("Z/128", 256).order() == 128);
  CHECK(kind_of([] { parse_ring_spec("F6"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_ring_spec("Q"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_ring_spec("Z/1"); }) == ErrorKind::Parse);
}

TEST_CASE("Z/n arithmetic agrees with integer arithmetic") {
  for (int n : {4, 9, 12, 25, 36}) {
    const FiniteRing r = parse_ring_spec("Z/" + std::to_string(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(r.add(r.from_integer(a), r.from_integer(b)) == r.from_integer((a + b) % n));
        CHECK(r.mul(r.from_integer(a), r.from_integer(b)) == r.from_integer(a * b % n));
      }
    std::size_t coprime = 0;
    for (int a = 1; a < n; ++a)
      coprime += std::gcd(a, n) == 1;
    CHECK(r.units().size() == coprime);
  }
}

TEST_CASE("finite fields and dual numbers") {
  const FiniteRing f4 = parse_ring_spec("F4");
  for (Elem x = 0; x < 4; ++x)
    CHECK(f4.pow(x, 4) == x);
  CHECK(f4.units().size() == 3);

  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  const Elem t = dual.parse_element("T");
  CHECK(dual.mul(t, t) == dual.zero());
  CHECK(dual.units().size() == 2);
  CHECK(dual.format(dual.add(t, dual.one())) == dual.format(dual.parse_element("1+T")));

  for (const char* spec : {"F4", "Z/9", "Z/12", "F2[T]/(T^2) x F3", "F3[T]/(T^2+1)"}) {
    const FiniteRing r = parse_ring_spec(spec);
    for (Elem u : r.units())
      CHECK(r.mul(u, r.inv(u)) == r.one());
    CHECK(kind_of([&] { r.inv(r.zero()); }) == ErrorKind::NotAUnit);
  }
}

TEST_CASE("element literals round-trip through format") {
  for (const char* spec : {"Z/12", "F4", "F2[T]/(T^2)", "F2[T]/(T^2) x F3", "F9", "Z/4 x Z/3 x F2"}) {
    const FiniteRing r = parse_ring_spec(spec);
    for (Elem x = 0; x < r.order(); ++x)
      CHECK(r.parse_element(r.format(x)) == x);
  }
  const FiniteRing prod = parse_ring_spec("Z/4 x F3");
  CHECK(prod.parse_element("(1,2)") == prod.compose(std::vector<unsigned>{1, 2}));
  CHECK(prod.parse_element("-1") == prod.neg(prod.one()));
  CHECK(kind_of([&] { prod.parse_element("(1,2,0)"); }) == ErrorKind::Parse);
}

TEST_CASE("ideals, quotients and vn2") {
  const FiniteRing z12 = parse_ring_spec("Z/12");
  CHECK(maximal_ideals(z12).size() == 2);

  const FiniteRing z4 = parse_ring_spec("Z/4");
  const Ideal v = vn2(z4);
  CHECK(z4.elements_of(v).size() == 2);
  CHECK(z4.contains(v, 2));
  CHECK(vn2(parse_ring_spec("Z/9")).is_whole());

  const FiniteRing z9 = parse_ring_spec("Z/9");
  const Elem three[1] = {3};
  const Ideal i3 = ideal_from_generators(z9, three);
  const RingQuotient q = quotient_ring(z9, i3);
  CHECK(q.ring.order() == 3);
  for (Elem x = 0; x < 9; ++x)
    for (Elem y = 0; y < 9; ++y) {
      CHECK(q.image[z9.mul(x, y)] == q.ring.mul(q.image[x], q.image[y]));
      CHECK(q.image[z9.add(x, y)] == q.ring.add(q.image[x], q.image[y]));
    }
  CHECK(kind_of([&] { quotient_ring(z9, z9.whole_ideal()); }) == ErrorKind::WholeIdeal);

  // Sums take the smaller exponent, products add them.
  const Elem six[1] = {z12.from_integer(6)};
  const Ideal a = ideal_from_generators(z12, six);
  const Elem four[1] = {z12.from_integer(4)};
  const Ideal b = ideal_from_generators(z12, four);
  CHECK(z12.elements_of(a + b).size() == 6);
  CHECK((a * b).is_zero());
}

TEST_CASE("additive closure") {
  const FiniteRing z12 = parse_ring_spec("Z/12");
  const Elem seed[2] = {z12.from_integer(4), z12.from_integer(6)};
  const AdditiveSubgroup s = additive_closure(z12, seed);
  CHECK(s.size() == 6);
  std::set<Elem> brute;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      brute.insert(z12.from_integer(4 * i + 6 * j));
  CHECK(brute == std::set<Elem>(s.members().begin(), s.members().end()));
}

TEST_CASE("many units") {
  CHECK(has_many_units(parse_ring_spec("Z/9")));
  CHECK(has_many_units(parse_ring_spec("Z/25")));
  CHECK_FALSE(has_many_units(parse_ring_spec("Z/4")));
  CHECK_FALSE(has_many_units(parse_ring_spec("F2[T]/(T^2)")));
  for (const char* spec : {"F2", "F3", "F5", "Z/9", "Z/12"})
    CHECK(has_stable_range_one(parse_ring_spec(spec)));
}
