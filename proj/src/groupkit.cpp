#include "sl2wb/groupkit.hpp"

#include "sl2wb/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sl2wb {

namespace {

// Grows a subgroup one generator at a time.  Old members only need to be
// multiplied by the new generator; new members by every generator.
class ClosureBuilder {
public:
  ClosureBuilder(const GroupTable& group) : group_(group), mask_(group.order(), false) {
    mask_[group.identity()] = true;
    members_.push_back(group.identity());
  }

  bool contains(Index x) const { return mask_[x]; }

  void add_generator(Index x) {
    if (mask_[x])
      return;
    gens_.push_back(x);
    std::size_t old = members_.size();
    for (std::size_t i = 0; i < old; ++i)
      visit(group_.mul(members_[i], x));
    for (std::size_t i = old; i < members_.size(); ++i)
      for (Index g : gens_)
        visit(group_.mul(members_[i], g));
  }

  Subgroup finish() { return Subgroup(group_.order(), std::move(members_), std::move(gens_)); }
  std::size_t size() const { return members_.size(); }

private:
  void visit(Index y) {
    if (!mask_[y]) {
      mask_[y] = true;
      members_.push_back(y);
    }
  }

  const GroupTable& group_;
  std::vector<bool> mask_;
  std::vector<Index> members_;
  std::vector<Index> gens_;
};

} // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable GroupTable::enumerate(FiniteRing ring, std::size_t order_cap) {
  GroupTable g;
  g.ring_ = std::make_shared<const FiniteRing>(std::move(ring));
  const FiniteRing& r = *g.ring_;
  const Elem n = Elem(r.order());

  // solutions[a * n + t] lists every d with a*d = t.
  std::vector<std::vector<Elem>> solutions(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem d = 0; d < n; ++d)
      solutions[std::size_t(a) * n + r.mul(a, d)].push_back(d);

  std::vector<std::uint64_t> ids;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem t = r.add(r.one(), r.mul(b, c));
        for (Elem d : solutions[std::size_t(a) * n + t]) {
          ids.push_back(matrix_id(r, Mat2{a, b, c, d}));
          if (ids.size() > order_cap)
            throw Error(ErrorKind::CapExceeded, "SL2(" + r.spec() + ") exceeds the group order cap " +
                                                    std::to_string(order_cap));
        }
      }
  std::sort(ids.begin(), ids.end());
  g.elements_.reserve(ids.size());
  g.lookup_.reserve(ids.size() * 2);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    g.elements_.push_back(matrix_from_id(r, ids[i]));
    g.lookup_.emplace(ids[i], Index(i));
  }
  g.identity_ = g.index_of(sl2wb::identity(r));
  g.inverse_.resize(g.elements_.size());
  for (Index i = 0; i < g.elements_.size(); ++i)
    g.inverse_[i] = g.index_of(sl2wb::inverse(r, g.elements_[i]));

  // Additive basis of R, greedy in index order.
  std::vector<Elem> basis;
  {
    std::vector<bool> span(n, false);
    span[0] = true;
    std::vector<Elem> members{0};
    for (Elem x = 1; x < n; ++x) {
      if (span[x])
        continue;
      basis.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i) {
        Elem y = members[i];
        for (;;) {
          y = r.add(y, x);
          if (span[y])
            break;
          span[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  for (Elem x : basis)
    g.generators_.push_back(g.index_of(e12(r, x)));
  for (Elem x : basis)
    g.generators_.push_back(g.index_of(e21(r, x)));
  ClosureBuilder closure(g);
  for (Index x : g.generators_)
    closure.add_generator(x);
  for (Index x = 0; closure.size() < g.order(); ++x)
    if (!closure.contains(x)) {
      g.generators_.push_back(x);
      closure.add_generator(x);
    }
  return g;
}

std::optional<Index> GroupTable::find(const Mat2& m) const {
  auto it = lookup_.find(matrix_id(*ring_, m));
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

Index GroupTable::index_of(const Mat2& m) const {
  if (auto i = find(m))
    return *i;
  throw Error(ErrorKind::InvalidArgument, format_matrix(*ring_, m) + " is not in SL2(" + ring_->spec() + ")");
}

Index GroupTable::mul(Index x, Index y) const {
  return lookup_.find(matrix_id(*ring_, sl2wb::mul(*ring_, elements_[x], elements_[y])))->second;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(std::size_t group_order, std::vector<Index> members, std::vector<Index> generated_by)
    : members_(std::move(members)), generated_by_(std::move(generated_by)), mask_(group_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index x : members_)
    mask_.at(x) = true;
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Index x) { return other.contains(x); });
}

// ---------------------------------------------------------------------------
// Classes and closures

std::vector<Index> conjugacy_class(const GroupTable& group, Index x) {
  std::vector<bool> seen(group.order(), false);
  std::vector<Index> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Index g : group.generators()) {
      const Index y = group.conj(orbit[i], g);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

ClassPartition conjugacy_classes(const GroupTable& group) {
  ClassPartition p;
  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  p.class_of.assign(group.order(), unassigned);
  for (Index x = 0; x < group.order(); ++x) {
    if (p.class_of[x] != unassigned)
      continue;
    auto cls = conjugacy_class(group, x);
    for (Index y : cls)
      p.class_of[y] = std::uint32_t(p.classes.size());
    p.classes.push_back(std::move(cls));
  }
  return p;
}

Subgroup subgroup_closure(const GroupTable& group, std::span<const Index> seeds) {
  ClosureBuilder b(group);
  for (Index s : seeds)
    b.add_generator(s);
  return b.finish();
}

Subgroup normal_closure(const GroupTable& group, std::span<const Index> seeds) {
  // The partial closure is always generated by whole classes, hence normal:
  // a seed already inside contributes nothing new.
  ClosureBuilder b(group);
  for (Index s : seeds) {
    if (b.contains(s))
      continue;
    for (Index y : conjugacy_class(group, s))
      b.add_generator(y);
  }
  return b.finish();
}

Subgroup derived_subgroup(const GroupTable& group) {
  const auto& gens = group.generators();
  std::vector<Index> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(group.comm(gens[i], gens[j]));
  return normal_closure(group, seeds);
}

bool is_subgroup(const GroupTable& group, std::span<const Index> members) {
  std::vector<bool> mask(group.order(), false);
  for (Index x : members)
    mask[x] = true;
  if (!mask[group.identity()])
    return false;
  for (Index x : members) {
    if (!mask[group.inv(x)])
      return false;
    for (Index y : members)
      if (!mask[group.mul(x, y)])
        return false;
  }
  return true;
}

bool is_normal(const GroupTable& group, const Subgroup& subgroup) {
  for (Index x : subgroup.members())
    for (Index g : group.generators())
      if (!subgroup.contains(group.conj(x, g)))
        return false;
  return true;
}

bool is_perfect(const GroupTable& group) { return derived_subgroup(group).size() == group.order(); }

QuotientGroup quotient_group(const GroupTable& group, const Subgroup& normal) {
  if (!normal.contains(group.identity()) || !is_normal(group, normal))
    throw Error(ErrorKind::NotNormal, "quotient requires a normal subgroup");
  QuotientGroup q;
  constexpr Index unassigned = std::numeric_limits<Index>::max();
  q.coset_of.assign(group.order(), unassigned);
  for (Index g = 0; g < group.order(); ++g) {
    if (q.coset_of[g] != unassigned)
      continue;
    const Index id = Index(q.representatives.size());
    q.representatives.push_back(g);
    for (Index n : normal.members())
      q.coset_of[group.mul(g, n)] = id;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Abelianization

std::size_t AbelianInvariants::order() const {
  std::size_t m = 1;
  for (unsigned d : factors)
    m *= d;
  return m;
}

std::vector<unsigned> AbelianInvariants::coordinates(Index x) const {
  const std::size_t r = factors.size();
  return {coords.begin() + std::ptrdiff_t(x * r), coords.begin() + std::ptrdiff_t(x * r + r)};
}

bool AbelianInvariants::generated_by(std::span<const Index> elements) const {
  const std::size_t r = factors.size();
  const std::size_t m = order();
  // Mixed-radix encoding of coordinate tuples.
  auto encode = [&](const std::vector<unsigned>& v) {
    std::size_t code = 0;
    for (std::size_t j = r; j-- > 0;)
      code = code * factors[j] + v[j];
    return code;
  };
  std::vector<std::vector<unsigned>> gens;
  for (Index x : elements)
    gens.push_back(coordinates(x));
  std::vector<bool> seen(m, false);
  std::vector<std::vector<unsigned>> reached{std::vector<unsigned>(r, 0)};
  seen[0] = true;
  for (std::size_t i = 0; i < reached.size(); ++i)
    for (const auto& g : gens) {
      std::vector<unsigned> s(r);
      for (std::size_t j = 0; j < r; ++j)
        s[j] = (reached[i][j] + g[j]) % factors[j];
      const std::size_t code = encode(s);
      if (!seen[code]) {
        seen[code] = true;
        reached.push_back(std::move(s));
      }
    }
  return reached.size() == m;
}

AbelianInvariants abelianization(const GroupTable& group) {
  AbelianInvariants out;
  out.derived = derived_subgroup(group);
  const QuotientGroup q = quotient_group(group, out.derived);
  const std::size_t m = q.order();
  const Index e = q.coset_of[group.identity()];

  auto power = [&](Index x, unsigned k) {
    Index r = e;
    for (unsigned i = 0; i < k; ++i)
      r = q.mul(group, r, x);
    return r;
  };
  // Order of x modulo the subgroup marked in `in_b`.
  auto relative_order = [&](Index x, const std::vector<bool>& in_b) {
    unsigned k = 1;
    for (Index y = x; !in_b[y]; y = q.mul(group, y, x))
      ++k;
    return k;
  };

  // Repeatedly take an element whose image in Q/B has maximal order and whose
  // own order equals that image order; B grows by a direct cyclic summand.
  std::vector<bool> in_b(m, false);
  in_b[e] = true;
  std::vector<Index> b_members{e};
  std::vector<std::pair<Index, unsigned>> chosen;
  const std::vector<bool> trivial = [&] {
    std::vector<bool> t(m, false);
    t[e] = true;
    return t;
  }();
  while (b_members.size() < m) {
    unsigned best = 0;
    for (Index x = 0; x < m; ++x)
      best = std::max(best, relative_order(x, in_b));
    std::optional<Index> pick;
    for (Index x = 0; x < m && !pick; ++x)
      if (relative_order(x, in_b) == best && relative_order(x, trivial) == best)
        pick = x;
    if (!pick)
      throw std::logic_error("abelianization: no cyclic direct summand of maximal order found");
    chosen.emplace_back(*pick, best);
    std::vector<Index> grown;
    for (Index bm : b_members)
      for (unsigned k = 0; k < best; ++k)
        grown.push_back(q.mul(group, bm, power(*pick, k)));
    b_members = std::move(grown);
    std::fill(in_b.begin(), in_b.end(), false);
    for (Index y : b_members)
      in_b[y] = true;
  }

  // Factors were found largest first; store ascending so d1 | d2 | ...
  std::reverse(chosen.begin(), chosen.end());
  const std::size_t r = chosen.size();
  for (const auto& [x, d] : chosen)
    out.factors.push_back(d);

  std::vector<unsigned> coset_coords(m * r, 0);
  std::vector<unsigned> tuple(r, 0);
  for (std::size_t count = 0; count < m; ++count) {
    Index y = e;
    for (std::size_t j = 0; j < r; ++j)
      y = q.mul(group, y, power(chosen[j].first, tuple[j]));
    std::copy(tuple.begin(), tuple.end(), coset_coords.begin() + std::ptrdiff_t(y * r));
    for (std::size_t j = 0; j < r; ++j) {
      if (++tuple[j] < out.factors[j])
        break;
      tuple[j] = 0;
    }
  }
  out.coords.resize(group.order() * r);
  for (Index x = 0; x < group.order(); ++x)
    std::copy_n(coset_coords.begin() + std::ptrdiff_t(q.coset_of[x] * r), r,
                out.coords.begin() + std::ptrdiff_t(x * r));
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

ReductionHom reduction_hom(const GroupTable& group, const Ideal& ideal) {
  RingQuotient quotient = quotient_ring(group.ring(), ideal);
  GroupTable target = GroupTable::enumerate(quotient.ring, std::max<std::size_t>(group.order(), 1));
  GroupHom hom;
  hom.codomain_order = target.order();
  hom.image.resize(group.order());
  for (Index i = 0; i < group.order(); ++i) {
    const Mat2& m = group.element(i);
    hom.image[i] = target.index_of(
        Mat2{quotient.image[m.a], quotient.image[m.b], quotient.image[m.c], quotient.image[m.d]});
  }
  Subgroup kernel = kernel_of(group, hom, target.identity());
  return {std::move(quotient), std::move(target), std::move(hom), std::move(kernel)};
}

Subgroup kernel_of(const GroupTable& group, const GroupHom& hom, Index codomain_identity) {
  std::vector<Index> members;
  for (Index i = 0; i < group.order(); ++i)
    if (hom.image[i] == codomain_identity)
      members.push_back(i);
  return Subgroup(group.order(), std::move(members));
}

} // namespace sl2wb
