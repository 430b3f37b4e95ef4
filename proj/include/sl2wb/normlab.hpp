#pragma once

#include "sl2wb/groupkit.hpp"

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sl2wb {

inline constexpr unsigned kInfiniteNorm = std::numeric_limits<unsigned>::max();

struct NormProfile {
  std::vector<Index> generators;
  /// ball_sizes[k] = |B_T(k)|, up to the level where the ball stops growing.
  std::vector<std::size_t> ball_sizes;
  /// kInfiniteNorm outside the normal closure of T.
  std::vector<unsigned> norm;
  /// nullopt when T does not normally generate (infinite diameter).
  std::optional<unsigned> diameter;
};

/// Word norm of every element with respect to the conjugacy classes of T and
/// T^-1, by breadth-first search from the identity.
NormProfile norm_and_diameter(const GroupTable& group, std::span<const Index> generators);
NormProfile norm_and_diameter(const GroupTable& group, const ClassPartition& classes,
                              std::span<const Index> generators);

struct DeltaOptions {
  /// Maximum number of candidate class sets examined.
  std::size_t budget = 2'000'000;
  unsigned workers = 1;
};

struct DeltaReport {
  unsigned k = 0;
  /// nullopt encodes -infinity: no normally generating set of size <= k.
  std::optional<unsigned> value;
  /// Class representatives of the first set attaining the value.
  std::vector<Index> witness;
  /// Class-pair indices (into the class partition) of the witness.
  std::vector<std::uint32_t> witness_classes;
  std::size_t search_space = 0;
  std::size_t examined = 0;
  std::size_t generating_sets = 0;
  /// True when the budget cut the search short; value is then a lower bound.
  bool partial = false;
};

DeltaReport delta_k(const GroupTable& group, unsigned k, const DeltaOptions& options = {});

/// Maximal ideals P such that every element of T is scalar modulo P.
std::vector<Ideal> pi_set(const FiniteRing& ring, std::span<const Mat2> elements);
Ideal level_sum(const FiniteRing& ring, std::span<const Mat2> elements);

struct NormalGenerationVerdict {
  bool closure_is_group = false;
  bool pi_empty = false;
  bool ab_generates = false;
  std::vector<Ideal> pi;
  /// Whether the two-condition criterion agrees with the ground truth here.
  bool agree() const { return closure_is_group == (pi_empty && ab_generates); }
};

NormalGenerationVerdict normally_generates(const GroupTable& group, std::span<const Index> elements);
NormalGenerationVerdict normally_generates(const GroupTable& group, const AbelianInvariants& ab,
                                           std::span<const Index> elements);

struct BoundSearchResult {
  Mat2 target;
  /// Least k with target in B_A(k); nullopt if not reached by k_max.
  std::optional<unsigned> k;
};

/// Least k with C(b x^3) in B_A(k).  Throws NotInLevelIdeal unless x ∈ l(A).
BoundSearchResult bound_search(const GroupTable& group, const Mat2& a, Elem x, Elem b, unsigned k_max);

struct GeneratorConstruction {
  unsigned r1 = 0, r2 = 0, q = 0, v = 0;
  unsigned k = 0;
  bool refused = false;
  std::string reason;
  std::vector<Elem> entries;
  std::vector<Mat2> elements;
};

/// Elementary set {E12(s_u)} whose residues follow the unit / uniformizer /
/// zero pattern per local factor.  Refuses (without throwing) when k < v.
GeneratorConstruction construct_generators(const FiniteRing& ring, unsigned k);

} // namespace sl2wb
