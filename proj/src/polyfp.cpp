#include "polyfp.hpp"

#include "sl2wb/error.hpp"

#include <cctype>
#include <cstdlib>

namespace sl2wb::polyfp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

int degree(const Poly& f) {
  Poly g = f;
  trim(g);
  return int(g.size()) - 1;
}

Poly add(const Poly& f, const Poly& g, unsigned p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned a = i < f.size() ? f[i] : 0;
    unsigned b = i < g.size() ? g[i] : 0;
    r[i] = (a + b) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, unsigned p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned a = i < f.size() ? f[i] : 0;
    unsigned b = i < g.size() ? g[i] : 0;
    r[i] = (a + p - b) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, unsigned p) {
  if (f.empty() || g.empty())
    return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  trim(r);
  return r;
}

Poly pow(const Poly& f, unsigned n, unsigned p) {
  Poly r{1};
  for (unsigned i = 0; i < n; ++i)
    r = mul(r, f, p);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, unsigned p) {
  Poly r = f;
  trim(r);
  Poly monic = g;
  trim(monic);
  const int dg = int(monic.size()) - 1;
  if (dg < 0 || monic.back() != 1)
    throw Error(ErrorKind::InvalidArgument, "polynomial division requires a monic divisor");
  Poly q(r.size() > monic.size() ? r.size() - monic.size() + 1 : 1, 0);
  while (int(r.size()) - 1 >= dg && !r.empty()) {
    const std::size_t shift = r.size() - 1 - dg;
    const unsigned lead = r.back();
    q[shift] = lead;
    for (int i = 0; i <= dg; ++i)
      r[shift + i] = (r[shift + i] + p - (lead * monic[i]) % p) % p;
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Poly& f, const Poly& g, unsigned p) { return divmod(f, g, p).second; }

unsigned inverse_mod(unsigned a, unsigned p) {
  a %= p;
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1)
      return x;
  throw Error(ErrorKind::NotAUnit, "coefficient has no inverse modulo " + std::to_string(p));
}

Poly make_monic(const Poly& f, unsigned p) {
  Poly g = f;
  trim(g);
  if (g.empty())
    return g;
  const unsigned inv = inverse_mod(g.back(), p);
  for (auto& c : g)
    c = (c * inv) % p;
  return g;
}

Poly from_index(unsigned index, unsigned p, unsigned length) {
  Poly f(length, 0);
  for (unsigned i = 0; i < length; ++i) {
    f[i] = index % p;
    index /= p;
  }
  return f;
}

unsigned to_index(const Poly& f, unsigned p) {
  unsigned index = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    index = index * p + f[i];
  return index;
}

namespace {

Poly monic_with_index(unsigned index, unsigned p, unsigned deg) {
  Poly f = from_index(index, p, deg);
  f.push_back(1);
  return f;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= b;
  return r;
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, unsigned p) {
  Poly rest = make_monic(f, p);
  std::vector<std::pair<Poly, unsigned>> out;
  for (unsigned d = 1; degree(rest) >= int(d); ++d) {
    const unsigned count = ipow(p, d);
    for (unsigned idx = 0; idx < count && degree(rest) >= int(d); ++idx) {
      Poly g = monic_with_index(idx, p, d);
      unsigned e = 0;
      for (;;) {
        auto [q, r] = divmod(rest, g, p);
        if (!r.empty())
          break;
        rest = q;
        ++e;
      }
      if (e > 0)
        out.emplace_back(g, e);
    }
  }
  return out;
}

bool is_irreducible(const Poly& f, unsigned p) {
  if (degree(f) < 1)
    return false;
  auto fs = factor(f, p);
  return fs.size() == 1 && fs.front().second == 1;
}

Poly smallest_irreducible(unsigned p, unsigned deg) {
  const unsigned count = ipow(p, deg);
  for (unsigned idx = 0; idx < count; ++idx) {
    Poly g = monic_with_index(idx, p, deg);
    if (is_irreducible(g, p))
      return g;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

namespace {

std::string term(unsigned c, unsigned e, char var) {
  std::string s;
  if (e == 0)
    return std::to_string(c);
  if (c != 1)
    s += std::to_string(c);
  s += var;
  if (e > 1)
    s += "^" + std::to_string(e);
  return s;
}

} // namespace

std::string format_ascending(const Poly& f, char var) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0)
      continue;
    if (!s.empty())
      s += "+";
    s += term(f[i], unsigned(i), var);
  }
  return s.empty() ? "0" : s;
}

std::string format_descending(const Poly& f, char var) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0)
      continue;
    if (!s.empty())
      s += "+";
    s += term(f[i], unsigned(i), var);
  }
  return s.empty() ? "0" : s;
}

Poly parse(std::string_view text, unsigned p) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  if (s.empty())
    throw Error(ErrorKind::Parse, "empty polynomial");
  Poly out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "bad polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    long long coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (i > start) {
      coef = std::stoll(s.substr(start, i - start));
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_coef)
        fail("dangling '*'");
      ++i;
    }
    unsigned exponent = 0;
    if (i < s.size() && (s[i] == 'T' || s[i] == 't' || s[i] == 'x' || s[i] == 'X')) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
        if (i == es)
          fail("missing exponent");
        exponent = unsigned(std::stoul(s.substr(es, i - es)));
      }
    } else if (!have_coef) {
      fail("expected a coefficient or T");
    }
    if (exponent > 64)
      fail("exponent too large");
    long long c = coef % p;
    if (negative)
      c = (p - c) % p;
    if (out.size() <= exponent)
      out.resize(exponent + 1, 0);
    out[exponent] = unsigned((out[exponent] + c) % p);
  }
  trim(out);
  return out;
}

} // namespace sl2wb::polyfp
