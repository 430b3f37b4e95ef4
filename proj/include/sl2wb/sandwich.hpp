#pragma once

#include "sl2wb/groupkit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2wb {

/// Exhaustive check: for all x ∈ P and a ∈ R, (a³−a)x² + a²x ∈ P and a·x³ ∈ P.
bool is_radix(const FiniteRing& ring, const AdditiveSubgroup& subgroup);

/// An additive subgroup already checked to be a radix.
class Radix {
public:
  /// Throws NotARadix.
  Radix(const FiniteRing& ring, AdditiveSubgroup subgroup);

  const AdditiveSubgroup& subgroup() const { return subgroup_; }
  bool contains(Elem x) const { return subgroup_.contains(x); }

private:
  AdditiveSubgroup subgroup_;
};

/// Additive closure of {ρ(A) : A ∈ N}.
AdditiveSubgroup rho_subgroup(const GroupTable& group, const Subgroup& normal);

/// Level ideal J = l(N) with a unit subgroup U of R/J.
struct LevelUnits {
  Ideal level;
  /// Absent when J = R (the quotient is the zero ring).
  std::optional<RingQuotient> quotient;
  /// Units of the quotient ring, ascending.
  std::vector<Elem> units;
};

/// l(N) and the units u of R/l(N) with some A ∈ N ≡ uI, closed under products.
LevelUnits U_of_N(const GroupTable& group, const Subgroup& normal);

bool in_G_P(const FiniteRing& ring, const Mat2& m, const Radix& radix);
/// A mod J equals uI for some u ∈ U.  Always true when J = R.
bool in_G_JU(const FiniteRing& ring, const Mat2& m, const LevelUnits& level_units);

/// {A : A ∈ G(ρ(N)) and A ∈ G(l(N), U(N))}.  Throws LevelZero when l(N) = 0.
Subgroup G_of_N(const GroupTable& group, const Subgroup& normal);

struct SandwichReport {
  Mat2 generator;
  Subgroup normal;
  Ideal level;
  AdditiveSubgroup rho;
  LevelUnits units;
  Subgroup upper;
  /// Normal closure of the commutators [e, g], e elementary, g ∈ G(N).
  Subgroup lower;
  bool upper_is_subgroup = false;
  bool chain_left_ok = false;
  bool chain_right_ok = false;
  bool radix_ok = false;
  /// C(x³b) ∈ N for every x ∈ l(N) and b ∈ R.
  bool selfrep_ok = false;

  bool ok() const { return upper_is_subgroup && chain_left_ok && chain_right_ok && radix_ok && selfrep_ok; }
};

/// Throws ManyUnitsFailed and LevelZero.
SandwichReport sandwich_check(const GroupTable& group, const Mat2& generator);

bool is_dual_numbers_f2(const FiniteRing& ring);

/// 0 or 1 in F2.  Throws WrongRing unless the ring is F2[T]/(T^2).
unsigned q_hom(const FiniteRing& ring, const Mat2& m);
/// 1 iff m has order 2 in SL2(F2), after reduction mod T when needed.
unsigned h_hom(const FiniteRing& ring, const Mat2& m);

struct HqValue {
  unsigned h = 0, q = 0;
  friend bool operator==(const HqValue&, const HqValue&) = default;
};

HqValue hq_hom(const FiniteRing& ring, const Mat2& m);

/// Homomorphism SL2(R) -> Z/n read off the abelianization, with E12(1) ↦ 1.
class CyclicAbelianHom {
public:
  /// Z/4 -> Z/4 and F3 -> Z/3.  Throw WrongRing for any other ring.
  static CyclicAbelianHom z4(const FiniteRing& ring);
  static CyclicAbelianHom f3(const FiniteRing& ring);

  unsigned modulus() const { return modulus_; }
  const GroupTable& group() const { return group_; }
  unsigned operator()(const Mat2& m) const { return image_[group_.index_of(m)]; }
  unsigned at(Index i) const { return image_[i]; }
  GroupHom as_hom() const;

private:
  CyclicAbelianHom(GroupTable group, unsigned modulus);

  GroupTable group_;
  unsigned modulus_ = 0;
  std::vector<unsigned> image_;
};

/// Lines "id<TAB>matrix<TAB>image" over the whole group, ordered by id.
std::string hom_table_tsv(const GroupTable& group, const std::vector<std::string>& images);

} // namespace sl2wb
