#pragma once

// Dense univariate polynomials over F_p, ascending coefficients.  Internal to
// the ring construction; degrees stay below 9 for every ring within the cap.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sl2wb::polyfp {

using Poly = std::vector<unsigned>;

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const Poly& f, const Poly& g, unsigned p);
Poly sub(const Poly& f, const Poly& g, unsigned p);
Poly mul(const Poly& f, const Poly& g, unsigned p);
Poly pow(const Poly& f, unsigned n, unsigned p);
/// Remainder of f modulo a monic g.
Poly mod(const Poly& f, const Poly& g, unsigned p);
/// Quotient and remainder of f by a monic g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, unsigned p);
Poly make_monic(const Poly& f, unsigned p);

/// Fixed-length coefficient vector <-> base-p index, c_0 least significant.
Poly from_index(unsigned index, unsigned p, unsigned length);
unsigned to_index(const Poly& f, unsigned p);

/// Factorization of a monic f by trial division over monic polynomials of
/// increasing degree; factors come out irreducible, in index order.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, unsigned p);
bool is_irreducible(const Poly& f, unsigned p);
/// Monic irreducible of the given degree with the smallest coefficient index.
Poly smallest_irreducible(unsigned p, unsigned degree);

std::string format_ascending(const Poly& f, char var = 'T');
std::string format_descending(const Poly& f, char var = 'T');
/// Parses sums of terms like "2T^3", "T", "-1", "3*T^2" over F_p.
Poly parse(std::string_view text, unsigned p);

unsigned inverse_mod(unsigned a, unsigned p);

} // namespace sl2wb::polyfp
