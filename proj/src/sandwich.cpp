#include "sl2wb/sandwich.hpp"

#include "sl2wb/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sl2wb {

namespace {

bool in_G_P_subgroup(const FiniteRing& r, const Mat2& m, const AdditiveSubgroup& p) {
  const RhoFamily f = rho_family(r, m);
  if (!p.contains(f.rho) || !p.contains(f.rho_t) || !p.contains(f.rho_inv) || !p.contains(f.rho_inv_t))
    return false;
  const Elem gens[] = {r.sub(r.mul(m.a, m.a), r.one()), r.sub(r.mul(m.d, m.d), r.one())};
  const Ideal scaled = ideal_from_generators(r, gens) * vn2(r);
  for (Elem x : r.elements_of(scaled))
    if (!p.contains(x))
      return false;
  return true;
}

std::vector<Index> scan_upper(const GroupTable& group, const AdditiveSubgroup& p, const LevelUnits& lu) {
  std::vector<Index> members;
  const FiniteRing& r = group.ring();
  for (Index i = 0; i < group.order(); ++i)
    if (in_G_P_subgroup(r, group.element(i), p) && in_G_JU(r, group.element(i), lu))
      members.push_back(i);
  return members;
}

} // namespace

bool is_radix(const FiniteRing& r, const AdditiveSubgroup& p) {
  for (Elem x : p.members()) {
    const Elem x2 = r.mul(x, x);
    const Elem x3 = r.mul(x2, x);
    for (Elem a = 0; a < r.order(); ++a) {
      const Elem a2 = r.mul(a, a);
      const Elem a3_minus_a = r.sub(r.mul(a2, a), a);
      if (!p.contains(r.add(r.mul(a3_minus_a, x2), r.mul(a2, x))))
        return false;
      if (!p.contains(r.mul(a, x3)))
        return false;
    }
  }
  return true;
}

Radix::Radix(const FiniteRing& ring, AdditiveSubgroup subgroup) : subgroup_(std::move(subgroup)) {
  if (!is_radix(ring, subgroup_))
    throw Error(ErrorKind::NotARadix, "additive subgroup of size " + std::to_string(subgroup_.size()) +
                                          " in " + ring.spec() + " is not a radix");
}

AdditiveSubgroup rho_subgroup(const GroupTable& group, const Subgroup& normal) {
  std::vector<Elem> values;
  for (Index i : normal.members())
    values.push_back(rho(group.ring(), group.element(i)));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return additive_closure(group.ring(), values);
}

LevelUnits U_of_N(const GroupTable& group, const Subgroup& normal) {
  const FiniteRing& r = group.ring();
  LevelUnits out;
  out.level = r.zero_ideal();
  for (Index i : normal.members())
    out.level = out.level + level_ideal(r, group.element(i));
  if (out.level.is_whole())
    return out;
  out.quotient = quotient_ring(r, out.level);
  const FiniteRing& qr = out.quotient->ring;
  const auto& image = out.quotient->image;
  std::vector<bool> seen(qr.order(), false);
  std::vector<Elem> units;
  for (Index i : normal.members()) {
    const Elem u = image[group.element(i).a];
    if (!seen[u]) {
      seen[u] = true;
      units.push_back(u);
    }
  }
  for (std::size_t k = 0; k < units.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      const Elem prod = qr.mul(units[k], units[j]);
      if (!seen[prod]) {
        seen[prod] = true;
        units.push_back(prod);
      }
    }
  std::sort(units.begin(), units.end());
  out.units = std::move(units);
  return out;
}

bool in_G_P(const FiniteRing& ring, const Mat2& m, const Radix& radix) {
  return in_G_P_subgroup(ring, m, radix.subgroup());
}

bool in_G_JU(const FiniteRing&, const Mat2& m, const LevelUnits& lu) {
  if (!lu.quotient)
    return true;
  const FiniteRing& qr = lu.quotient->ring;
  const auto& image = lu.quotient->image;
  const Mat2 red{image[m.a], image[m.b], image[m.c], image[m.d]};
  if (!is_scalar(qr, red))
    return false;
  return std::binary_search(lu.units.begin(), lu.units.end(), red.a);
}

Subgroup G_of_N(const GroupTable& group, const Subgroup& normal) {
  const LevelUnits lu = U_of_N(group, normal);
  if (lu.level.is_zero())
    throw Error(ErrorKind::LevelZero, "the level ideal of N is zero");
  const Radix radix(group.ring(), rho_subgroup(group, normal));
  return Subgroup(group.order(), scan_upper(group, radix.subgroup(), lu));
}

SandwichReport sandwich_check(const GroupTable& group, const Mat2& generator) {
  const FiniteRing& r = group.ring();
  if (!has_many_units(r))
    throw Error(ErrorKind::ManyUnitsFailed, r.spec() + " does not have many units");
  SandwichReport rep;
  rep.generator = generator;
  const Index gen = group.index_of(generator);
  rep.normal = normal_closure(group, std::span<const Index>(&gen, 1));
  rep.units = U_of_N(group, rep.normal);
  rep.level = rep.units.level;
  if (rep.level.is_zero())
    throw Error(ErrorKind::LevelZero, "the level ideal of the normal closure of " + format_matrix(r, generator) +
                                          " is zero");
  rep.rho = rho_subgroup(group, rep.normal);
  rep.radix_ok = is_radix(r, rep.rho);

  const std::vector<Index> upper = scan_upper(group, rep.rho, rep.units);
  rep.upper_is_subgroup = is_subgroup(group, upper);
  rep.upper = Subgroup(group.order(), upper);

  std::vector<Index> elementary;
  for (Elem x = 0; x < r.order(); ++x) {
    elementary.push_back(group.index_of(e12(r, x)));
    elementary.push_back(group.index_of(e21(r, x)));
  }
  std::vector<bool> seen(group.order(), false);
  std::vector<Index> commutators;
  for (Index e : elementary)
    for (Index g : upper) {
      const Index c = group.comm(e, g);
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  rep.lower = normal_closure(group, commutators);

  rep.chain_left_ok = rep.lower.subset_of(rep.normal);
  rep.chain_right_ok = rep.normal.subset_of(rep.upper);

  rep.selfrep_ok = true;
  for (Elem x : r.elements_of(rep.level)) {
    const Elem x3 = r.pow(x, 3);
    for (Elem b = 0; b < r.order() && rep.selfrep_ok; ++b)
      rep.selfrep_ok = rep.normal.contains(group.index_of(self_reproducing(r, r.mul(x3, b))));
  }
  return rep;
}

bool is_dual_numbers_f2(const FiniteRing& ring) {
  return ring.factors() == std::vector<ChainLocalRing>{ChainLocalRing::polynomial(2, {0, 1}, 2)};
}

namespace {

bool is_f2(const FiniteRing& ring) {
  return ring.factors() == std::vector<ChainLocalRing>{ChainLocalRing::integers(2, 1)};
}

void require_dual_numbers(const FiniteRing& ring, const char* what) {
  if (!is_dual_numbers_f2(ring))
    throw Error(ErrorKind::WrongRing, std::string(what) + " is defined over F2[T]/(T^2), not " + ring.spec());
}

// Dual-number elements are c0 + 2*c1; these pick out and re-embed c0.
Mat2 constant_part(const Mat2& m) { return {m.a % 2, m.b % 2, m.c % 2, m.d % 2}; }

bool has_order_two(unsigned a, unsigned b, unsigned c, unsigned d) {
  const bool identity = a == 1 && b == 0 && c == 0 && d == 1;
  // Square over F2.
  const unsigned sa = (a * a + b * c) % 2, sb = (a * b + b * d) % 2;
  const unsigned sc = (c * a + d * c) % 2, sd = (c * b + d * d) % 2;
  return !identity && sa == 1 && sb == 0 && sc == 0 && sd == 1;
}

} // namespace

unsigned q_hom(const FiniteRing& ring, const Mat2& m) {
  require_dual_numbers(ring, "q");
  const Mat2 k = mul(ring, m, inverse(ring, constant_part(m)));
  const Elem s = ring.add(ring.add(ring.sub(k.a, ring.one()), k.b), k.c);
  return s == 0 ? 0u : 1u;
}

unsigned h_hom(const FiniteRing& ring, const Mat2& m) {
  if (is_f2(ring))
    return has_order_two(m.a, m.b, m.c, m.d) ? 1u : 0u;
  require_dual_numbers(ring, "h");
  const Mat2 c = constant_part(m);
  return has_order_two(c.a, c.b, c.c, c.d) ? 1u : 0u;
}

HqValue hq_hom(const FiniteRing& ring, const Mat2& m) {
  require_dual_numbers(ring, "h+q");
  return {h_hom(ring, m), q_hom(ring, m)};
}

CyclicAbelianHom::CyclicAbelianHom(GroupTable group, unsigned modulus) : group_(std::move(group)), modulus_(modulus) {
  const AbelianInvariants ab = abelianization(group_);
  if (ab.factors != std::vector<unsigned>{modulus})
    throw std::logic_error("abelianization is not cyclic of order " + std::to_string(modulus));
  const unsigned c = ab.coordinates(group_.index_of(e12(group_.ring(), group_.ring().one())))[0];
  unsigned c_inv = 0;
  for (unsigned t = 1; t < modulus; ++t)
    if (c * t % modulus == 1)
      c_inv = t;
  if (c_inv == 0)
    throw std::logic_error("E12(1) does not generate the abelianization");
  image_.resize(group_.order());
  for (Index i = 0; i < group_.order(); ++i)
    image_[i] = ab.coordinates(i)[0] * c_inv % modulus;
}

CyclicAbelianHom CyclicAbelianHom::z4(const FiniteRing& ring) {
  if (ring.factors() != std::vector<ChainLocalRing>{ChainLocalRing::integers(2, 2)})
    throw Error(ErrorKind::WrongRing, "z4 is defined over Z/4, not " + ring.spec());
  return CyclicAbelianHom(GroupTable::enumerate(ring), 4);
}

CyclicAbelianHom CyclicAbelianHom::f3(const FiniteRing& ring) {
  if (ring.factors() != std::vector<ChainLocalRing>{ChainLocalRing::integers(3, 1)})
    throw Error(ErrorKind::WrongRing, "f3 is defined over F3, not " + ring.spec());
  return CyclicAbelianHom(GroupTable::enumerate(ring), 3);
}

GroupHom CyclicAbelianHom::as_hom() const { return {std::vector<Index>(image_.begin(), image_.end()), modulus_}; }

std::string hom_table_tsv(const GroupTable& group, const std::vector<std::string>& images) {
  std::ostringstream out;
  out << "id\tmatrix\timage\n";
  for (Index i = 0; i < group.order(); ++i)
    out << matrix_id(group.ring(), group.element(i)) << '\t' << format_matrix(group.ring(), group.element(i)) << '\t'
        << images[i] << '\n';
  return out.str();
}

} // namespace sl2wb
