#include "sl2wb/error.hpp"
#include "sl2wb/sandwich.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace sl2wb;

namespace {

AdditiveSubgroup subgroup_of(const FiniteRing& r, std::vector<Elem> seed) { return additive_closure(r, seed); }

Subgroup closure_of(const GroupTable& g, const Mat2& a) {
  const Index i = g.index_of(a);
  return normal_closure(g, std::span<const Index>(&i, 1));
}

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

TEST_CASE("radix predicate") {
  const FiniteRing z4 = parse_ring_spec("Z/4");
  CHECK(is_radix(z4, subgroup_of(z4, {1})));
  CHECK(is_radix(z4, subgroup_of(z4, {})));
  CHECK(is_radix(z4, subgroup_of(z4, {2})));
  const FiniteRing z9 = parse_ring_spec("Z/9");
  CHECK(is_radix(z9, subgroup_of(z9, {3})));
  // {0,1} in F4 is not closed under x -> a x^3.
  const FiniteRing f4 = parse_ring_spec("F4");
  CHECK_FALSE(is_radix(f4, subgroup_of(f4, {1})));
  CHECK(kind_of([&] { Radix(f4, subgroup_of(f4, {1})); }) == ErrorKind::NotARadix);
}

TEST_CASE("rho subgroups") {
  const FiniteRing f3 = parse_ring_spec("F3");
  const GroupTable g = GroupTable::enumerate(f3);
  CHECK(rho_subgroup(g, Subgroup(g.order(), {g.identity()})).size() == 1);
  CHECK(rho_subgroup(g, closure_of(g, e12(f3, 1))).size() == 3);

  const FiniteRing z9 = parse_ring_spec("Z/9");
  const GroupTable g9 = GroupTable::enumerate(z9);
  const AdditiveSubgroup p = rho_subgroup(g9, closure_of(g9, e12(z9, 3)));
  CHECK(is_radix(z9, p));
  CHECK(p.contains(3));
}

TEST_CASE("G(P) membership") {
  const FiniteRing f3 = parse_ring_spec("F3");
  const Radix whole(f3, subgroup_of(f3, {1}));
  CHECK(in_G_P(f3, identity(f3), whole));
  CHECK(in_G_P(f3, e12(f3, 1), whole));

  const FiniteRing z4 = parse_ring_spec("Z/4");
  const Radix two(z4, subgroup_of(z4, {2}));
  CHECK(in_G_P(z4, h(z4, 3), two));
  CHECK(in_G_P(z4, identity(z4), two));
  CHECK_FALSE(in_G_P(z4, e12(z4, 1), two));
}

TEST_CASE("G(J,U) membership") {
  const FiniteRing z4 = parse_ring_spec("Z/4");
  const GroupTable g = GroupTable::enumerate(z4);
  const LevelUnits lu = U_of_N(g, closure_of(g, e12(z4, 2)));
  REQUIRE(lu.quotient.has_value());
  CHECK(lu.quotient->ring.order() == 2);
  CHECK(in_G_JU(z4, identity(z4), lu));
  CHECK(in_G_JU(z4, e12(z4, 2), lu));
  CHECK_FALSE(in_G_JU(z4, e12(z4, 1), lu));

  // J = R: the condition is vacuous.
  const LevelUnits all = U_of_N(g, closure_of(g, e12(z4, 1)));
  CHECK_FALSE(all.quotient.has_value());
  CHECK(in_G_JU(z4, e12(z4, 1), all));
}

TEST_CASE("unit classes of N") {
  const FiniteRing z9 = parse_ring_spec("Z/9");
  const GroupTable g = GroupTable::enumerate(z9);
  const LevelUnits lu = U_of_N(g, closure_of(g, e12(z9, 3)));
  REQUIRE(lu.quotient.has_value());
  CHECK(lu.quotient->ring.order() == 3);
  for (Elem u : lu.units)
    CHECK(lu.quotient->ring.is_unit(u));
  CHECK(std::find(lu.units.begin(), lu.units.end(), lu.quotient->ring.one()) != lu.units.end());
}

TEST_CASE("G(N)") {
  const FiniteRing z9 = parse_ring_spec("Z/9");
  const GroupTable g = GroupTable::enumerate(z9);
  const Subgroup whole(g.order(), [&] {
    std::vector<Index> all(g.order());
    for (Index i = 0; i < g.order(); ++i)
      all[i] = i;
    return all;
  }());
  CHECK(G_of_N(g, whole).size() == g.order());

  const Subgroup n = closure_of(g, e12(z9, 3));
  const Subgroup gn = G_of_N(g, n);
  CHECK(gn.size() < g.order());
  CHECK(n.subset_of(gn));
  CHECK(is_subgroup(g, gn.members()));

  CHECK(kind_of([&] { G_of_N(g, Subgroup(g.order(), {g.identity()})); }) == ErrorKind::LevelZero);
}

TEST_CASE("sandwich check") {
  const FiniteRing z9 = parse_ring_spec("Z/9");
  const GroupTable g = GroupTable::enumerate(z9);
  const SandwichReport full = sandwich_check(g, e12(z9, 1));
  CHECK(full.normal.size() == g.order());
  CHECK(full.ok());

  const SandwichReport proper = sandwich_check(g, e12(z9, 3));
  CHECK(proper.normal.size() < g.order());
  CHECK(proper.chain_left_ok);
  CHECK(proper.chain_right_ok);
  CHECK(proper.radix_ok);
  CHECK(proper.selfrep_ok);

  CHECK(kind_of([&] { sandwich_check(g, identity(z9)); }) == ErrorKind::LevelZero);
  const FiniteRing z4 = parse_ring_spec("Z/4");
  const GroupTable g4 = GroupTable::enumerate(z4);
  CHECK(kind_of([&] { sandwich_check(g4, e12(z4, 1)); }) == ErrorKind::ManyUnitsFailed);
}

TEST_CASE("q and h+q over the dual numbers") {
  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  const Elem t = dual.parse_element("T");
  CHECK(q_hom(dual, e12(dual, 1)) == 0);
  CHECK(q_hom(dual, e12(dual, t)) == 1);
  CHECK(hq_hom(dual, e12(dual, 1)) == HqValue{1, 0});
  CHECK(hq_hom(dual, e12(dual, t)) == HqValue{0, 1});

  const GroupTable g = GroupTable::enumerate(dual);
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y)
      CHECK(q_hom(dual, g.element(g.mul(x, y))) == (q_hom(dual, g.element(x)) ^ q_hom(dual, g.element(y))));

  const Subgroup derived = derived_subgroup(g);
  for (Index x = 0; x < g.order(); ++x)
    CHECK(derived.contains(x) == (hq_hom(dual, g.element(x)) == HqValue{0, 0}));

  const FiniteRing z4 = parse_ring_spec("Z/4");
  CHECK(kind_of([&] { q_hom(z4, e12(z4, 1)); }) == ErrorKind::WrongRing);
}

TEST_CASE("z4 and f3 quotients") {
  const FiniteRing z4 = parse_ring_spec("Z/4");
  const CyclicAbelianHom z = CyclicAbelianHom::z4(z4);
  CHECK(z(e12(z4, 1)) == 1);
  CHECK(z(e12(z4, 3)) == 3);
  CHECK(z(scalar(z4, 3)) == 2);
  CHECK(is_homomorphism(z.group(), z.as_hom(), [](Index a, Index b) { return (a + b) % 4; }));

  const FiniteRing f3 = parse_ring_spec("F3");
  const CyclicAbelianHom f = CyclicAbelianHom::f3(f3);
  CHECK(f(e12(f3, 2)) == 2);
  CHECK(f(e21(f3, 1)) == 2);
  CHECK(kind_of([&] { CyclicAbelianHom::z4(f3); }) == ErrorKind::WrongRing);

  const std::string tsv = hom_table_tsv(f.group(), std::vector<std::string>(24, "0"));
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 25);
}
