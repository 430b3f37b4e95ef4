#include "sl2wb/error.hpp"
#include "sl2wb/normlab.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace sl2wb;

namespace {

// Diameter by BFS over matrices, with conjugates formed by direct multiplication.
std::optional<unsigned> brute_diameter(const FiniteRing& r, const std::vector<Mat2>& all, const Mat2& t) {
  std::set<std::uint64_t> seen_steps;
  std::vector<Mat2> steps;
  for (const Mat2& s : {t, inverse(r, t)})
    for (const Mat2& g : all) {
      const Mat2 c = conj(r, s, g);
      if (seen_steps.insert(matrix_id(r, c)).second)
        steps.push_back(c);
    }
  std::map<std::uint64_t, unsigned> dist{{matrix_id(r, identity(r)), 0}};
  std::vector<Mat2> frontier{identity(r)};
  unsigned level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<Mat2> next;
    for (const Mat2& x : frontier)
      for (const Mat2& s : steps) {
        const Mat2 y = mul(r, x, s);
        if (dist.emplace(matrix_id(r, y), level).second)
          next.push_back(y);
      }
    frontier = std::move(next);
  }
  if (dist.size() != all.size())
    return std::nullopt;
  unsigned d = 0;
  for (auto [id, v] : dist)
    d = std::max(d, v);
  return d;
}

} // namespace

TEST_CASE("norm diameters agree with a matrix-level BFS") {
  for (const char* spec : {"F3", "Z/4", "F2[T]/(T^2)"}) {
    const FiniteRing r = parse_ring_spec(spec);
    const GroupTable g = GroupTable::enumerate(r);
    for (Index t = 0; t < g.order(); ++t) {
      const NormProfile p = norm_and_diameter(g, std::span<const Index>(&t, 1));
      CHECK(p.diameter == brute_diameter(r, g.elements(), g.element(t)));
      CHECK(p.ball_sizes.front() == 1);
    }
  }
}

TEST_CASE("delta values") {
  const GroupTable f2 = GroupTable::enumerate(parse_ring_spec("F2"));
  CHECK(delta_k(f2, 1).value == 2u);
  const GroupTable dual = GroupTable::enumerate(parse_ring_spec("F2[T]/(T^2)"));
  CHECK_FALSE(delta_k(dual, 1).value.has_value());
  const DeltaReport d2 = delta_k(dual, 2);
  REQUIRE(d2.value.has_value());
  CHECK(*d2.value >= 3);
  CHECK_FALSE(d2.partial);
  // Every normally generating singleton of SL2(F3) has diameter 3.
  CHECK(delta_k(GroupTable::enumerate(parse_ring_spec("F3")), 1).value == 3u);
}

TEST_CASE("delta is independent of the worker count") {
  const GroupTable g = GroupTable::enumerate(parse_ring_spec("Z/4"));
  const DeltaReport one = delta_k(g, 2, {2'000'000, 1});
  const DeltaReport many = delta_k(g, 2, {2'000'000, 3});
  CHECK(one.value == many.value);
  CHECK(one.witness == many.witness);
  CHECK(one.generating_sets == many.generating_sets);
}

TEST_CASE("delta budget marks partial searches") {
  const GroupTable g = GroupTable::enumerate(parse_ring_spec("Z/4"));
  const DeltaReport r = delta_k(g, 2, {3, 1});
  CHECK(r.partial);
  CHECK(r.examined == 3);
  CHECK_THROWS_AS(delta_k(g, 0), Error);
}

TEST_CASE("pi sets and level sums") {
  const FiniteRing z4 = parse_ring_spec("Z/4");
  const Mat2 two[1] = {e12(z4, 2)};
  CHECK(pi_set(z4, two).size() == 1);
  const Mat2 one[1] = {e12(z4, 1)};
  CHECK(pi_set(z4, one).empty());

  const FiniteRing z12 = parse_ring_spec("Z/12");
  const GroupTable g = GroupTable::enumerate(z12);
  for (Index i = 0; i < g.order(); i += 3) {
    const Mat2 t[1] = {g.element(i)};
    CHECK(pi_set(z12, t).empty() == level_sum(z12, t).is_whole());
  }
}

TEST_CASE("normal generation criterion") {
  for (const char* spec : {"F3", "Z/4", "F2[T]/(T^2)", "Z/12"}) {
    const GroupTable g = GroupTable::enumerate(parse_ring_spec(spec));
    const AbelianInvariants ab = abelianization(g);
    for (Index t = 0; t < g.order(); ++t) {
      const auto v = normally_generates(g, ab, std::span<const Index>(&t, 1));
      if (v.closure_is_group) {
        CHECK(v.pi_empty);
        CHECK(v.ab_generates);
      }
      CHECK(v.agree());
    }
  }
}

TEST_CASE("bound search") {
  const FiniteRing z9 = parse_ring_spec("Z/9");
  const GroupTable g = GroupTable::enumerate(z9);
  const BoundSearchResult r = bound_search(g, e12(z9, 1), 1, 1, 10);
  CHECK(r.k == 2u);
  CHECK(r.target == self_reproducing(z9, 1));
  CHECK_THROWS_AS(bound_search(g, e12(z9, 3), 1, 1, 10), Error);
}

TEST_CASE("generator construction") {
  const FiniteRing z12 = parse_ring_spec("Z/12");
  const GeneratorConstruction a = construct_generators(z12, 1);
  CHECK_FALSE(a.refused);
  CHECK(a.elements == std::vector<Mat2>{e12(z12, z12.one())});

  const FiniteRing mixed = parse_ring_spec("F2[T]/(T^2) x F3");
  const GeneratorConstruction b = construct_generators(mixed, 2);
  REQUIRE(b.elements.size() == 2);
  CHECK(b.elements[0] == e12(mixed, mixed.parse_element("(1,1)")));
  CHECK(b.elements[1] == e12(mixed, mixed.parse_element("(T,1)")));

  const GeneratorConstruction c = construct_generators(parse_ring_spec("F2[T]/(T^2)"), 1);
  CHECK(c.refused);
  CHECK(c.v == 2);

  // Larger k keeps normal generation.
  for (const char* spec : {"Z/12", "F2[T]/(T^2) x F3", "Z/4 x F3", "F4 x F3"}) {
    const FiniteRing r = parse_ring_spec(spec);
    const GroupTable g = GroupTable::enumerate(r);
    for (unsigned k = 1; k <= 3; ++k) {
      const GeneratorConstruction gc = construct_generators(r, k);
      if (gc.refused)
        continue;
      std::vector<Index> idx;
      for (const Mat2& m : gc.elements)
        idx.push_back(g.index_of(m));
      CHECK(normal_closure(g, idx).size() == g.order());
    }
  }
}
