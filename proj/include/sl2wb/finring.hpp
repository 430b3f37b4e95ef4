#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sl2wb {

/// Ring elements are dense indices 0 .. order-1 into a FiniteRing.
using Elem = std::uint32_t;

/// Finite local ring whose ideals form a chain m^0 ⊋ m^1 ⊋ ... ⊋ m^length = 0.
/// Either Z/p^length or F_p[T]/(g^length) with g monic irreducible.
struct ChainLocalRing {
  enum class Kind { IntegerModPrimePower, PolynomialQuotient };

  Kind kind = Kind::IntegerModPrimePower;
  unsigned p = 2;
  unsigned length = 1;
  /// Ascending coefficients of the monic irreducible g (polynomial kind only).
  std::vector<unsigned> g;

  unsigned degree() const { return kind == Kind::IntegerModPrimePower ? 1u : unsigned(g.size() - 1); }
  unsigned residue_field_order() const;
  unsigned order() const;
  /// Human-readable ring spec, e.g. "Z/4", "F3", "F2[T]/(T^2)".
  std::string spec() const;

  static ChainLocalRing integers(unsigned p, unsigned k);
  static ChainLocalRing polynomial(unsigned p, std::vector<unsigned> g, unsigned e);

  friend bool operator==(const ChainLocalRing&, const ChainLocalRing&) = default;
};

/// An ideal of a product of chain rings: one exponent j_i per factor, the
/// ideal being the product of m_i^{j_i}.  j_i = 0 is the whole factor and
/// j_i = length_i is zero there.
struct Ideal {
  std::vector<unsigned> exponents;
  std::vector<unsigned> lengths;

  bool is_whole() const;
  bool is_zero() const;
  /// Inclusion of ideals: *this ⊆ other.
  bool subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

Ideal operator+(const Ideal& lhs, const Ideal& rhs);
Ideal operator*(const Ideal& lhs, const Ideal& rhs);

class FiniteRing {
public:
  FiniteRing() = default;
  explicit FiniteRing(std::vector<ChainLocalRing> factors, std::string spec = {});

  const std::string& spec() const { return spec_; }
  std::string canonical_spec() const;
  std::size_t order() const { return order_; }
  const std::vector<ChainLocalRing>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem x, Elem y) const { return add_[x * order_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * order_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem pow(Elem x, unsigned n) const;
  bool is_unit(Elem x) const { return inv_[x] != order_; }
  /// Throws Error(NotAUnit) for non-units.
  Elem inv(Elem x) const;

  /// Image of an integer under Z -> R.
  Elem from_integer(long long n) const;

  unsigned component(Elem x, std::size_t factor) const { return components_[x * factors_.size() + factor]; }
  std::vector<unsigned> components(Elem x) const;
  Elem compose(std::span<const unsigned> components) const;
  /// Valuation of the factor-th component: largest j with component in m^j (length for zero).
  unsigned valuation(Elem x, std::size_t factor) const { return valuations_[x * factors_.size() + factor]; }

  std::string format(Elem x) const;
  /// Accepts an integer literal, a polynomial in T (single polynomial factor),
  /// or a tuple "(c1,...,cn)" of per-factor literals.
  Elem parse_element(std::string_view text) const;

  std::vector<Elem> units() const;

  Ideal whole_ideal() const;
  Ideal zero_ideal() const;
  bool contains(const Ideal& ideal, Elem x) const;
  /// All elements of the ideal, ascending.
  std::vector<Elem> elements_of(const Ideal& ideal) const;

private:
  std::vector<ChainLocalRing> factors_;
  std::string spec_;
  std::size_t order_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<unsigned> components_, valuations_;
  std::vector<std::size_t> radix_;
};

struct RingQuotient {
  FiniteRing ring;
  /// image[x] is the class of x in ring.
  std::vector<Elem> image;
};

/// Explicit additive subgroup of a finite ring.
class AdditiveSubgroup {
public:
  AdditiveSubgroup() = default;
  AdditiveSubgroup(std::size_t ring_order, std::vector<Elem> members);

  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }

  friend bool operator==(const AdditiveSubgroup& a, const AdditiveSubgroup& b) { return a.members_ == b.members_; }

private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

inline constexpr std::size_t kDefaultRingOrderCap = 64;
inline constexpr std::size_t kMaxRingOrderCap = 256;

FiniteRing parse_ring_spec(std::string_view spec, std::size_t order_cap = kDefaultRingOrderCap);

std::vector<Ideal> maximal_ideals(const FiniteRing& ring);
Ideal ideal_from_generators(const FiniteRing& ring, std::span<const Elem> gens);
RingQuotient quotient_ring(const FiniteRing& ring, const Ideal& ideal);
Ideal vn2(const FiniteRing& ring);
AdditiveSubgroup additive_closure(const FiniteRing& ring, std::span<const Elem> seed);
bool has_stable_range_one(const FiniteRing& ring);
bool has_many_units(const FiniteRing& ring);

} // namespace sl2wb
