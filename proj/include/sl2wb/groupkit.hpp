#pragma once

#include "sl2wb/finring.hpp"
#include "sl2wb/sl2core.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace sl2wb {

/// Position of an element in a GroupTable.
using Index = std::uint32_t;

inline constexpr std::size_t kDefaultGroupOrderCap = 200000;

/// SL2(R) fully enumerated.  Elements are sorted by matrix id; products are
/// recomputed from entries and looked up, so there is no |G|^2 table.
class GroupTable {
public:
  static GroupTable enumerate(FiniteRing ring, std::size_t order_cap = kDefaultGroupOrderCap);

  const FiniteRing& ring() const { return *ring_; }
  std::size_t order() const { return elements_.size(); }
  const Mat2& element(Index i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }

  std::optional<Index> find(const Mat2& m) const;
  /// Throws InvalidArgument when m is not in the table.
  Index index_of(const Mat2& m) const;

  Index identity() const { return identity_; }
  Index mul(Index x, Index y) const;
  Index inv(Index x) const { return inverse_[x]; }
  /// y^-1 x y.
  Index conj(Index x, Index y) const { return mul(mul(inverse_[y], x), y); }
  /// x y x^-1 y^-1.
  Index comm(Index x, Index y) const { return mul(mul(x, y), mul(inverse_[x], inverse_[y])); }

  /// Elementary matrices over an additive basis of R, extended greedily until
  /// they generate the whole table.
  const std::vector<Index>& generators() const { return generators_; }

private:
  std::shared_ptr<const FiniteRing> ring_;
  std::vector<Mat2> elements_;
  std::unordered_map<std::uint64_t, Index> lookup_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  Index identity_ = 0;
};

class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::size_t group_order, std::vector<Index> members, std::vector<Index> generated_by = {});

  const std::vector<Index>& members() const { return members_; }
  const std::vector<Index>& generated_by() const { return generated_by_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const { return x < mask_.size() && mask_[x]; }
  bool subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  std::vector<Index> members_;
  std::vector<Index> generated_by_;
  std::vector<bool> mask_;
};

/// Homomorphism given by its image table; codomain elements are 0..codomain_order-1.
struct GroupHom {
  std::vector<Index> image;
  std::size_t codomain_order = 0;
};

struct ClassPartition {
  /// Classes ordered by their smallest member; members ascending.
  std::vector<std::vector<Index>> classes;
  std::vector<std::uint32_t> class_of;
};

std::vector<Index> conjugacy_class(const GroupTable& group, Index x);
ClassPartition conjugacy_classes(const GroupTable& group);

Subgroup subgroup_closure(const GroupTable& group, std::span<const Index> seeds);
/// Subgroup generated by the conjugacy classes of the seeds.
Subgroup normal_closure(const GroupTable& group, std::span<const Index> seeds);
Subgroup derived_subgroup(const GroupTable& group);
bool is_subgroup(const GroupTable& group, std::span<const Index> members);
bool is_normal(const GroupTable& group, const Subgroup& subgroup);
bool is_perfect(const GroupTable& group);

struct QuotientGroup {
  std::vector<Index> coset_of;
  /// Smallest element of each coset.
  std::vector<Index> representatives;

  std::size_t order() const { return representatives.size(); }
  Index mul(const GroupTable& group, Index x, Index y) const {
    return coset_of[group.mul(representatives[x], representatives[y])];
  }
  GroupHom projection() const { return {coset_of, representatives.size()}; }
};

/// Throws NotNormal unless the subgroup is normal.
QuotientGroup quotient_group(const GroupTable& group, const Subgroup& normal);

struct AbelianInvariants {
  /// Invariant factors d1 | d2 | ...; empty for a perfect group.
  std::vector<unsigned> factors;
  /// coords[i * factors.size() + j] is the j-th residue of element i.
  std::vector<unsigned> coords;
  Subgroup derived;

  std::size_t order() const;
  std::vector<unsigned> coordinates(Index x) const;
  /// True when the images of the given elements generate the whole quotient.
  bool generated_by(std::span<const Index> elements) const;
};

AbelianInvariants abelianization(const GroupTable& group);

struct ReductionHom {
  RingQuotient quotient;
  GroupTable target;
  GroupHom hom;
  /// SL2(R, I).
  Subgroup kernel;
};

/// Entry-wise reduction SL2(R) -> SL2(R/I); throws WholeIdeal for I = R.
ReductionHom reduction_hom(const GroupTable& group, const Ideal& ideal);

/// Checks image(xy) == op(image(x), image(y)) over every pair.
template <class CodomainOp>
bool is_homomorphism(const GroupTable& group, const GroupHom& hom, CodomainOp op) {
  for (Index x = 0; x < group.order(); ++x)
    for (Index y = 0; y < group.order(); ++y)
      if (hom.image[group.mul(x, y)] != op(hom.image[x], hom.image[y]))
        return false;
  return true;
}

Subgroup kernel_of(const GroupTable& group, const GroupHom& hom, Index codomain_identity);

} // namespace sl2wb
