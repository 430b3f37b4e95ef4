#include "sl2wb/error.hpp"
#include "sl2wb/groupkit.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace sl2wb;

namespace {

// Conjugacy class by direct matrix conjugation over a brute-force element list.
std::set<std::uint64_t> brute_class(const FiniteRing& r, const std::vector<Mat2>& all, const Mat2& x) {
  std::set<std::uint64_t> out;
  for (const Mat2& g : all)
    out.insert(matrix_id(r, conj(r, x, g)));
  return out;
}

std::vector<Mat2> brute_elements(const FiniteRing& r) {
  std::vector<Mat2> out;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      for (Elem c = 0; c < r.order(); ++c)
        for (Elem d = 0; d < r.order(); ++d)
          if (r.sub(r.mul(a, d), r.mul(b, c)) == r.one())
            out.push_back({a, b, c, d});
  return out;
}

std::vector<std::size_t> sorted_sizes(const ClassPartition& p) {
  std::vector<std::size_t> s;
  for (const auto& c : p.classes)
    s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

TEST_CASE("enumeration matches a determinant scan") {
  for (const char* spec : {"F2", "F3", "F4", "Z/4", "F2[T]/(T^2)", "Z/9"}) {
    const FiniteRing r = parse_ring_spec(spec);
    const GroupTable g = GroupTable::enumerate(r);
    const auto all = brute_elements(r);
    CHECK(g.order() == all.size());
    for (const Mat2& m : all)
      CHECK(g.find(m).has_value());
  }
  CHECK(GroupTable::enumerate(parse_ring_spec("Z/25")).order() == 15000);
  CHECK_THROWS_AS(GroupTable::enumerate(parse_ring_spec("Z/9"), 100), Error);
}

TEST_CASE("table products agree with matrix products") {
  const FiniteRing r = parse_ring_spec("Z/12");
  const GroupTable g = GroupTable::enumerate(r);
  for (Index x = 0; x < g.order(); x += 7)
    for (Index y = 0; y < g.order(); y += 11) {
      CHECK(g.element(g.mul(x, y)) == mul(r, g.element(x), g.element(y)));
      CHECK(g.mul(x, g.inv(x)) == g.identity());
    }
  CHECK(subgroup_closure(g, g.generators()).size() == g.order());
}

TEST_CASE("conjugacy classes") {
  const GroupTable f2 = GroupTable::enumerate(parse_ring_spec("F2"));
  CHECK(sorted_sizes(conjugacy_classes(f2)) == std::vector<std::size_t>{1, 2, 3});
  CHECK(conjugacy_classes(GroupTable::enumerate(parse_ring_spec("F3"))).classes.size() == 7);

  for (const char* spec : {"F3", "Z/4", "F2[T]/(T^2)"}) {
    const FiniteRing r = parse_ring_spec(spec);
    const GroupTable g = GroupTable::enumerate(r);
    const auto all = brute_elements(r);
    const ClassPartition p = conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& c : p.classes) {
      total += c.size();
      std::set<std::uint64_t> ids;
      for (Index i : c)
        ids.insert(matrix_id(r, g.element(i)));
      CHECK(ids == brute_class(r, all, g.element(c.front())));
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("normal closures and derived subgroups") {
  const FiniteRing z4 = parse_ring_spec("Z/4");
  const GroupTable g4 = GroupTable::enumerate(z4);
  const Index e = g4.index_of(e12(z4, 1));
  CHECK(normal_closure(g4, std::span<const Index>(&e, 1)).size() == 48);

  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  const GroupTable gd = GroupTable::enumerate(dual);
  const Index ed = gd.index_of(e12(dual, 1));
  const Subgroup nd = normal_closure(gd, std::span<const Index>(&ed, 1));
  CHECK(nd.size() < 48);
  CHECK(is_normal(gd, nd));

  CHECK(derived_subgroup(GroupTable::enumerate(parse_ring_spec("F2"))).size() == 3);
  CHECK(derived_subgroup(GroupTable::enumerate(parse_ring_spec("F3"))).size() == 8);
  CHECK(is_perfect(GroupTable::enumerate(parse_ring_spec("F5"))));
}

TEST_CASE("quotients refuse non-normal subgroups") {
  const FiniteRing f3 = parse_ring_spec("F3");
  const GroupTable g = GroupTable::enumerate(f3);
  const Index e = g.index_of(e12(f3, 1));
  const Subgroup cyclic = subgroup_closure(g, std::span<const Index>(&e, 1));
  CHECK(cyclic.size() == 3);
  CHECK_FALSE(is_normal(g, cyclic));
  CHECK_THROWS_AS(quotient_group(g, cyclic), Error);
  const QuotientGroup q = quotient_group(g, derived_subgroup(g));
  CHECK(q.order() == 3);
}

TEST_CASE("abelianization invariants") {
  const std::pair<const char*, std::vector<unsigned>> cases[] = {
      {"F2", {2}}, {"F3", {3}}, {"Z/4", {4}}, {"F2[T]/(T^2)", {2, 2}}, {"Z/12", {12}}, {"F4", {}}, {"Z/9", {3}}};
  for (const auto& [spec, expected] : cases) {
    const GroupTable g = GroupTable::enumerate(parse_ring_spec(spec));
    const AbelianInvariants ab = abelianization(g);
    CHECK(ab.factors == expected);
    CHECK(ab.order() * ab.derived.size() == g.order());
    // Coordinates are additive.
    for (Index x = 0; x < g.order(); x += 5)
      for (Index y = 0; y < g.order(); y += 3) {
        const auto cx = ab.coordinates(x), cy = ab.coordinates(y), cxy = ab.coordinates(g.mul(x, y));
        for (std::size_t j = 0; j < ab.factors.size(); ++j)
          CHECK(cxy[j] == (cx[j] + cy[j]) % ab.factors[j]);
      }
  }
}

TEST_CASE("reduction homomorphisms") {
  const FiniteRing z9 = parse_ring_spec("Z/9");
  const GroupTable g = GroupTable::enumerate(z9);
  Ideal three = z9.zero_ideal();
  three.exponents[0] = 1;
  const ReductionHom red = reduction_hom(g, three);
  CHECK(red.target.order() == 24);
  CHECK(red.kernel.size() == 27);
  CHECK(is_homomorphism(g, red.hom, [&](Index a, Index b) { return red.target.mul(a, b); }));
  CHECK(kernel_of(g, red.hom, red.target.identity()) == red.kernel);
  CHECK_THROWS_AS(reduction_hom(g, z9.whole_ideal()), Error);
}
