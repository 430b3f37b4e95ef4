#pragma once

#include "sl2wb/finring.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sl2wb {

/// 2x2 matrix [[a,b],[c,d]] over a FiniteRing.  Plain value; every operation
/// takes the ring explicitly.
struct Mat2 {
  Elem a = 0, b = 0, c = 0, d = 0;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Dense id a + n(b + n(c + n d)) with n = |R|.
std::uint64_t matrix_id(const FiniteRing& ring, const Mat2& m);
Mat2 matrix_from_id(const FiniteRing& ring, std::uint64_t id);

Elem det(const FiniteRing& ring, const Mat2& m);

Mat2 identity(const FiniteRing& ring);
Mat2 e12(const FiniteRing& ring, Elem x);
Mat2 e21(const FiniteRing& ring, Elem x);
/// diag(u, u^-1); u must be a unit.
Mat2 h(const FiniteRing& ring, Elem u);
/// E21(x)·E12(x) = [[1, x],[x, 1+x^2]].
Mat2 self_reproducing(const FiniteRing& ring, Elem x);
/// u·I, requires u^2 = 1.
Mat2 scalar(const FiniteRing& ring, Elem u);
/// Throws DeterminantNotOne unless ad - bc = 1.
Mat2 from_entries(const FiniteRing& ring, Elem a, Elem b, Elem c, Elem d);

Mat2 mul(const FiniteRing& ring, const Mat2& x, const Mat2& y);
/// Adjugate inverse [[d,-b],[-c,a]]; valid because det = 1.
Mat2 inverse(const FiniteRing& ring, const Mat2& m);
Mat2 transpose(const Mat2& m);
/// B^-1 A B.
Mat2 conj(const FiniteRing& ring, const Mat2& a, const Mat2& b);
/// A B A^-1 B^-1.
Mat2 comm(const FiniteRing& ring, const Mat2& a, const Mat2& b);

bool is_scalar(const FiniteRing& ring, const Mat2& m);

/// l(A) = (a - d, b, c).
Ideal level_ideal(const FiniteRing& ring, const Mat2& m);

/// ρ(A) = a^2 - 1 + ab.
Elem rho(const FiniteRing& ring, const Mat2& m);

struct RhoFamily {
  Elem rho, rho_t, rho_inv, rho_inv_t;
  friend bool operator==(const RhoFamily&, const RhoFamily&) = default;
};

/// (ρ(A), ρ(Aᵀ), ρ(A⁻¹), ρ(A⁻ᵀ)).
RhoFamily rho_family(const FiniteRing& ring, const Mat2& m);

/// C(x)^-1 · C(y) == C(y - x)^{E12(x)}.
bool selfrep_shift_check(const FiniteRing& ring, Elem x, Elem y);

/// "[[a,b],[c,d]]" with canonical element text.
std::string format_matrix(const FiniteRing& ring, const Mat2& m);

/// One matrix term: E12(x), E21(x), h(u), C(x), I, -I, or [[a,b],[c,d]].
Mat2 parse_matrix(const FiniteRing& ring, std::string_view text);
/// Comma-separated list of matrix terms.
std::vector<Mat2> parse_matrix_list(const FiniteRing& ring, std::string_view text);

} // namespace sl2wb
