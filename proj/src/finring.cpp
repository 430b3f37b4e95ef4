#include "sl2wb/finring.hpp"

#include "polyfp.hpp"
#include "sl2wb/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>

namespace sl2wb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse: return "parse_error";
  case ErrorKind::CapExceeded: return "cap_exceeded";
  case ErrorKind::NotAUnit: return "not_a_unit";
  case ErrorKind::DeterminantNotOne: return "determinant_not_one";
  case ErrorKind::WholeIdeal: return "whole_ideal";
  case ErrorKind::NotInLevelIdeal: return "not_in_level_ideal";
  case ErrorKind::NotNormal: return "not_normal";
  case ErrorKind::NotARadix: return "not_a_radix";
  case ErrorKind::LevelZero: return "level_zero";
  case ErrorKind::ManyUnitsFailed: return "many_units_failed";
  case ErrorKind::WrongRing: return "wrong_ring";
  case ErrorKind::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

namespace {

unsigned ipow(unsigned base, unsigned exp) {
  unsigned r = 1;
  for (unsigned i = 0; i < exp; ++i)
    r *= base;
  return r;
}

bool is_prime(unsigned long long n) {
  if (n < 2)
    return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

// Splits on commas that are not nested inside (), [] pairs.
std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[')
      ++depth;
    else if (ch == ')' || ch == ']')
      --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(trim_copy(cur));
  return parts;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

// Arithmetic inside one chain factor, on indices 0 .. order-1.
struct LocalTables {
  unsigned n = 0;
  std::vector<unsigned> add, mul, neg, val;
};

LocalTables build_local(const ChainLocalRing& f) {
  LocalTables t;
  t.n = f.order();
  const unsigned n = t.n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  t.val.resize(n);
  if (f.kind == ChainLocalRing::Kind::IntegerModPrimePower) {
    for (unsigned x = 0; x < n; ++x) {
      t.neg[x] = (n - x) % n;
      unsigned v = 0;
      if (x == 0)
        v = f.length;
      else
        for (unsigned y = x; y % f.p == 0; y /= f.p)
          ++v;
      t.val[x] = v;
      for (unsigned y2 = 0; y2 < n; ++y2) {
        t.add[x * n + y2] = (x + y2) % n;
        t.mul[x * n + y2] = unsigned((static_cast<unsigned long long>(x) * y2) % n);
      }
    }
    return t;
  }
  const unsigned p = f.p;
  const unsigned len = f.degree() * f.length;
  const polyfp::Poly modulus = polyfp::pow(f.g, f.length, p);
  std::vector<polyfp::Poly> polys(n);
  for (unsigned x = 0; x < n; ++x) {
    polys[x] = polyfp::from_index(x, p, len);
    polyfp::trim(polys[x]);
  }
  auto index_of = [&](polyfp::Poly q) {
    q.resize(len, 0);
    return polyfp::to_index(q, p);
  };
  for (unsigned x = 0; x < n; ++x) {
    t.neg[x] = index_of(polyfp::sub({}, polys[x], p));
    unsigned v = 0;
    polyfp::Poly r = polys[x];
    if (r.empty()) {
      v = f.length;
    } else {
      while (v < f.length) {
        auto [q, rem] = polyfp::divmod(r, f.g, p);
        if (!rem.empty())
          break;
        r = q;
        ++v;
      }
    }
    t.val[x] = v;
    for (unsigned y = 0; y < n; ++y) {
      t.add[x * n + y] = index_of(polyfp::add(polys[x], polys[y], p));
      t.mul[x * n + y] = index_of(polyfp::mod(polyfp::mul(polys[x], polys[y], p), modulus, p));
    }
  }
  return t;
}

unsigned parse_factor_literal(const ChainLocalRing& f, std::string_view text) {
  std::string s = trim_copy(text);
  if (s.empty())
    throw Error(ErrorKind::Parse, "empty ring element");
  const unsigned n = f.order();
  if (is_integer_literal(s)) {
    long long v = std::stoll(s);
    if (f.kind == ChainLocalRing::Kind::IntegerModPrimePower) {
      long long r = v % static_cast<long long>(n);
      return unsigned(r < 0 ? r + n : r);
    }
    long long r = v % static_cast<long long>(f.p);
    return unsigned(r < 0 ? r + f.p : r);
  }
  if (f.kind == ChainLocalRing::Kind::IntegerModPrimePower)
    throw Error(ErrorKind::Parse, "'" + s + "' is not an integer literal for " + f.spec());
  const unsigned len = f.degree() * f.length;
  polyfp::Poly q = polyfp::mod(polyfp::parse(s, f.p), polyfp::pow(f.g, f.length, f.p), f.p);
  q.resize(len, 0);
  return polyfp::to_index(q, f.p);
}

std::string format_factor(const ChainLocalRing& f, unsigned x) {
  if (f.kind == ChainLocalRing::Kind::IntegerModPrimePower)
    return std::to_string(x);
  polyfp::Poly q = polyfp::from_index(x, f.p, f.degree() * f.length);
  polyfp::trim(q);
  return polyfp::format_ascending(q);
}

unsigned reduce_factor(const ChainLocalRing& f, unsigned x, unsigned new_length) {
  if (f.kind == ChainLocalRing::Kind::IntegerModPrimePower)
    return x % ipow(f.p, new_length);
  polyfp::Poly q = polyfp::from_index(x, f.p, f.degree() * f.length);
  q = polyfp::mod(q, polyfp::pow(f.g, new_length, f.p), f.p);
  q.resize(f.degree() * new_length, 0);
  return polyfp::to_index(q, f.p);
}

} // namespace

// ---------------------------------------------------------------------------
// ChainLocalRing

unsigned ChainLocalRing::residue_field_order() const { return ipow(p, degree()); }

unsigned ChainLocalRing::order() const { return ipow(p, degree() * length); }

std::string ChainLocalRing::spec() const {
  if (kind == Kind::IntegerModPrimePower)
    return length == 1 ? "F" + std::to_string(p) : "Z/" + std::to_string(order());
  if (length == 1 && degree() > 1 && g == polyfp::smallest_irreducible(p, degree()))
    return "F" + std::to_string(order());
  return "F" + std::to_string(p) + "[T]/(" + polyfp::format_descending(polyfp::pow(g, length, p)) + ")";
}

ChainLocalRing ChainLocalRing::integers(unsigned p, unsigned k) {
  ChainLocalRing f;
  f.kind = Kind::IntegerModPrimePower;
  f.p = p;
  f.length = k;
  return f;
}

ChainLocalRing ChainLocalRing::polynomial(unsigned p, std::vector<unsigned> g, unsigned e) {
  ChainLocalRing f;
  f.kind = Kind::PolynomialQuotient;
  f.p = p;
  f.g = std::move(g);
  f.length = e;
  return f;
}

// ---------------------------------------------------------------------------
// Ideal

bool Ideal::is_whole() const {
  return std::all_of(exponents.begin(), exponents.end(), [](unsigned j) { return j == 0; });
}

bool Ideal::is_zero() const { return exponents == lengths; }

bool Ideal::subset_of(const Ideal& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] < other.exponents[i])
      return false;
  return true;
}

Ideal operator+(const Ideal& lhs, const Ideal& rhs) {
  Ideal r = lhs;
  for (std::size_t i = 0; i < r.exponents.size(); ++i)
    r.exponents[i] = std::min(lhs.exponents[i], rhs.exponents[i]);
  return r;
}

Ideal operator*(const Ideal& lhs, const Ideal& rhs) {
  Ideal r = lhs;
  for (std::size_t i = 0; i < r.exponents.size(); ++i)
    r.exponents[i] = std::min(lhs.exponents[i] + rhs.exponents[i], lhs.lengths[i]);
  return r;
}

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing::FiniteRing(std::vector<ChainLocalRing> factors, std::string spec)
    : factors_(std::move(factors)), spec_(std::move(spec)) {
  if (factors_.empty())
    throw Error(ErrorKind::InvalidArgument, "a ring needs at least one local factor");
  if (spec_.empty())
    spec_ = canonical_spec();
  std::vector<LocalTables> local;
  local.reserve(factors_.size());
  order_ = 1;
  radix_.clear();
  for (const auto& f : factors_) {
    radix_.push_back(order_);
    order_ *= f.order();
    local.push_back(build_local(f));
  }
  const std::size_t nf = factors_.size();
  const std::size_t n = order_;
  components_.resize(n * nf);
  valuations_.resize(n * nf);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < nf; ++i) {
      const unsigned c = unsigned(rest % local[i].n);
      rest /= local[i].n;
      components_[x * nf + i] = c;
      valuations_[x * nf + i] = local[i].val[c];
    }
  }
  one_ = 0;
  for (std::size_t i = 0; i < nf; ++i)
    one_ += Elem(radix_[i]);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, Elem(n));
  for (std::size_t x = 0; x < n; ++x) {
    Elem ng = 0;
    for (std::size_t i = 0; i < nf; ++i)
      ng += Elem(local[i].neg[components_[x * nf + i]] * radix_[i]);
    neg_[x] = ng;
    for (std::size_t y = 0; y < n; ++y) {
      Elem s = 0, m = 0;
      for (std::size_t i = 0; i < nf; ++i) {
        const unsigned a = components_[x * nf + i];
        const unsigned b = components_[y * nf + i];
        s += Elem(local[i].add[a * local[i].n + b] * radix_[i]);
        m += Elem(local[i].mul[a * local[i].n + b] * radix_[i]);
      }
      add_[x * n + y] = s;
      mul_[x * n + y] = m;
      if (m == one_)
        inv_[x] = Elem(y);
    }
  }
}

std::string FiniteRing::canonical_spec() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty())
      s += " x ";
    s += f.spec();
  }
  return s;
}

Elem FiniteRing::pow(Elem x, unsigned n) const {
  Elem r = one_;
  for (unsigned i = 0; i < n; ++i)
    r = mul(r, x);
  return r;
}

Elem FiniteRing::inv(Elem x) const {
  if (!is_unit(x))
    throw Error(ErrorKind::NotAUnit, format(x) + " is not a unit in " + spec_);
  return inv_[x];
}

Elem FiniteRing::from_integer(long long n) const {
  std::vector<unsigned> comps;
  for (const auto& f : factors_)
    comps.push_back(parse_factor_literal(f, std::to_string(n)));
  return compose(comps);
}

std::vector<unsigned> FiniteRing::components(Elem x) const {
  std::vector<unsigned> out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = component(x, i);
  return out;
}

Elem FiniteRing::compose(std::span<const unsigned> comps) const {
  if (comps.size() != factors_.size())
    throw Error(ErrorKind::InvalidArgument, "component count does not match factor count");
  Elem x = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i] >= factors_[i].order())
      throw Error(ErrorKind::InvalidArgument, "component out of range");
    x += Elem(comps[i] * radix_[i]);
  }
  return x;
}

std::string FiniteRing::format(Elem x) const {
  if (factors_.size() == 1)
    return format_factor(factors_[0], component(x, 0));
  std::string s = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i)
      s += ",";
    s += format_factor(factors_[i], component(x, i));
  }
  return s + ")";
}

Elem FiniteRing::parse_element(std::string_view text) const {
  const std::string s = trim_copy(text);
  if (s.empty())
    throw Error(ErrorKind::Parse, "empty ring element");
  if (s.front() == '(' && s.back() == ')') {
    auto parts = split_top_level(std::string_view(s).substr(1, s.size() - 2), ',');
    if (parts.size() == factors_.size() && (factors_.size() > 1 || parts.size() == 1)) {
      std::vector<unsigned> comps;
      for (std::size_t i = 0; i < parts.size(); ++i)
        comps.push_back(parse_factor_literal(factors_[i], parts[i]));
      return compose(comps);
    }
    if (parts.size() != 1)
      throw Error(ErrorKind::Parse, "tuple '" + s + "' has " + std::to_string(parts.size()) +
                                        " entries but " + spec_ + " has " +
                                        std::to_string(factors_.size()) + " factors");
    return parse_element(parts.front());
  }
  if (is_integer_literal(s))
    return from_integer(std::stoll(s));
  if (factors_.size() == 1)
    return compose(std::vector<unsigned>{parse_factor_literal(factors_[0], s)});
  throw Error(ErrorKind::Parse, "'" + s + "' must be an integer or a factor tuple in " + spec_);
}

std::vector<Elem> FiniteRing::units() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < order_; ++x)
    if (is_unit(x))
      out.push_back(x);
  return out;
}

Ideal FiniteRing::whole_ideal() const {
  Ideal I;
  I.exponents.assign(factors_.size(), 0);
  for (const auto& f : factors_)
    I.lengths.push_back(f.length);
  return I;
}

Ideal FiniteRing::zero_ideal() const {
  Ideal I = whole_ideal();
  I.exponents = I.lengths;
  return I;
}

bool FiniteRing::contains(const Ideal& ideal, Elem x) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (valuation(x, i) < ideal.exponents[i])
      return false;
  return true;
}

std::vector<Elem> FiniteRing::elements_of(const Ideal& ideal) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < order_; ++x)
    if (contains(ideal, x))
      out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// AdditiveSubgroup

AdditiveSubgroup::AdditiveSubgroup(std::size_t ring_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(ring_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem x : members_)
    mask_.at(x) = true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<ChainLocalRing> parse_single(const std::string& token) {
  auto fail = [&](const std::string& why) -> std::vector<ChainLocalRing> {
    throw Error(ErrorKind::Parse, "bad ring spec '" + token + "': " + why);
  };
  if (token.rfind("Z/", 0) == 0) {
    const std::string digits = token.substr(2);
    if (digits.empty() || !is_integer_literal(digits) || digits.front() == '-' || digits.front() == '+')
      return fail("expected Z/<n>");
    if (digits.size() > 9)
      throw Error(ErrorKind::CapExceeded, "ring order " + digits + " exceeds the cap");
    unsigned long long n = std::stoull(digits);
    if (n < 2)
      return fail("n must be at least 2");
    std::vector<ChainLocalRing> out;
    for (unsigned long long p = 2; n > 1; ++p) {
      if (p * p > n)
        p = n;
      unsigned k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      if (k > 0)
        out.push_back(ChainLocalRing::integers(unsigned(p), k));
    }
    return out;
  }
  if (token.size() >= 2 && token.front() == 'F') {
    const auto bracket = token.find('[');
    if (bracket == std::string::npos) {
      const std::string digits = token.substr(1);
      if (!is_integer_literal(digits) || digits.front() == '-' || digits.front() == '+')
        return fail("expected F<q>");
      if (digits.size() > 9)
        throw Error(ErrorKind::CapExceeded, "field order " + digits + " exceeds the cap");
      unsigned long long q = std::stoull(digits);
      unsigned long long p = 0;
      for (unsigned long long d = 2; d <= q; ++d)
        if (q % d == 0) {
          p = d;
          break;
        }
      if (p == 0)
        return fail("field order must be a prime power");
      unsigned m = 0;
      unsigned long long r = q;
      while (r % p == 0) {
        r /= p;
        ++m;
      }
      if (r != 1)
        return fail("field order must be a prime power");
      if (q > kMaxRingOrderCap)
        throw Error(ErrorKind::CapExceeded, "field order " + digits + " exceeds the cap");
      if (m == 1)
        return {ChainLocalRing::integers(unsigned(p), 1)};
      return {ChainLocalRing::polynomial(unsigned(p), polyfp::smallest_irreducible(unsigned(p), m), 1)};
    }
    const std::string digits = token.substr(1, bracket - 1);
    if (!is_integer_literal(digits) || digits.front() == '-' || digits.front() == '+' || digits.size() > 6)
      return fail("expected F<p>[T]/(poly)");
    const unsigned long long p = std::stoull(digits);
    if (!is_prime(p))
      return fail("polynomial quotients need a prime base field");
    const std::string rest = token.substr(bracket);
    std::string compact;
    for (char ch : rest)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        compact += ch;
    if (compact.rfind("[T]/(", 0) != 0 || compact.back() != ')')
      return fail("expected F<p>[T]/(poly)");
    const std::string body = compact.substr(5, compact.size() - 6);
    polyfp::Poly f = polyfp::parse(body, unsigned(p));
    if (polyfp::degree(f) < 1)
      return fail("modulus must have degree at least 1");
    if (std::pow(double(p), polyfp::degree(f)) > double(kMaxRingOrderCap))
      throw Error(ErrorKind::CapExceeded, "ring order exceeds the cap");
    std::vector<ChainLocalRing> out;
    for (auto& [g, e] : polyfp::factor(f, unsigned(p)))
      out.push_back(ChainLocalRing::polynomial(unsigned(p), g, e));
    return out;
  }
  return fail("unrecognized form");
}

} // namespace

FiniteRing parse_ring_spec(std::string_view spec, std::size_t order_cap) {
  const std::string s = trim_copy(spec);
  if (s.empty())
    throw Error(ErrorKind::Parse, "empty ring spec");
  // Split on a standalone 'x' (or '×') separating factor specs.
  std::vector<std::string> tokens;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool sep_x = s[i] == 'x' && (i == 0 || std::isspace(static_cast<unsigned char>(s[i - 1]))) &&
                       (i + 1 == s.size() || std::isspace(static_cast<unsigned char>(s[i + 1])));
    if (sep_x) {
      tokens.push_back(trim_copy(cur));
      cur.clear();
    } else if (s.compare(i, 2, "\xC3\x97") == 0) {
      tokens.push_back(trim_copy(cur));
      cur.clear();
      ++i;
    } else {
      cur += s[i];
    }
  }
  tokens.push_back(trim_copy(cur));
  std::vector<ChainLocalRing> factors;
  unsigned long long order = 1;
  for (const auto& t : tokens) {
    if (t.empty())
      throw Error(ErrorKind::Parse, "empty factor in ring spec '" + s + "'");
    for (auto& f : parse_single(t)) {
      order *= f.order();
      if (order > order_cap)
        throw Error(ErrorKind::CapExceeded, "ring '" + s + "' exceeds the order cap " + std::to_string(order_cap));
      factors.push_back(std::move(f));
    }
  }
  return FiniteRing(std::move(factors), s);
}

// ---------------------------------------------------------------------------
// Ideal-level operations

std::vector<Ideal> maximal_ideals(const FiniteRing& ring) {
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    Ideal I = ring.whole_ideal();
    I.exponents[i] = 1;
    out.push_back(I);
  }
  return out;
}

Ideal ideal_from_generators(const FiniteRing& ring, std::span<const Elem> gens) {
  Ideal I = ring.zero_ideal();
  for (Elem g : gens)
    for (std::size_t i = 0; i < ring.factor_count(); ++i)
      I.exponents[i] = std::min(I.exponents[i], ring.valuation(g, i));
  return I;
}

RingQuotient quotient_ring(const FiniteRing& ring, const Ideal& ideal) {
  if (ideal.is_whole())
    throw Error(ErrorKind::WholeIdeal, "cannot form the quotient of " + ring.spec() + " by the whole ring");
  std::vector<ChainLocalRing> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    const unsigned j = ideal.exponents[i];
    if (j == 0)
      continue;
    ChainLocalRing f = ring.factors()[i];
    f.length = j;
    kept.push_back(f);
    kept_index.push_back(i);
  }
  RingQuotient q{FiniteRing(kept), {}};
  q.image.resize(ring.order());
  std::vector<unsigned> comps(kept.size());
  for (Elem x = 0; x < ring.order(); ++x) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::size_t i = kept_index[k];
      comps[k] = reduce_factor(ring.factors()[i], ring.component(x, i), kept[k].length);
    }
    q.image[x] = q.ring.compose(comps);
  }
  return q;
}

Ideal vn2(const FiniteRing& ring) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < ring.order(); ++x)
    gens.push_back(ring.sub(ring.mul(x, x), x));
  return ideal_from_generators(ring, gens);
}

AdditiveSubgroup additive_closure(const FiniteRing& ring, std::span<const Elem> seed) {
  std::vector<bool> seen(ring.order(), false);
  std::vector<Elem> members{ring.zero()};
  seen[ring.zero()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : seed) {
      const Elem y = ring.add(members[i], s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  return AdditiveSubgroup(ring.order(), std::move(members));
}

bool has_stable_range_one(const FiniteRing& ring) {
  const Elem n = Elem(ring.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem pair[2] = {a, b};
      if (!ideal_from_generators(ring, pair).is_whole())
        continue;
      bool found = false;
      for (Elem x = 0; x < n && !found; ++x)
        found = ring.is_unit(ring.add(a, ring.mul(b, x)));
      if (!found)
        return false;
    }
  return true;
}

bool has_many_units(const FiniteRing& ring) {
  const Elem n = Elem(ring.order());
  std::map<std::vector<unsigned>, bool> checked;
  for (Elem c = 1; c < n; ++c) {
    if (ring.is_unit(c))
      continue;
    const Elem gen[1] = {c};
    const Ideal cR = ideal_from_generators(ring, gen);
    auto [it, fresh] = checked.try_emplace(cR.exponents, false);
    if (fresh)
      it->second = has_stable_range_one(quotient_ring(ring, cR).ring);
    if (!it->second)
      return false;
  }
  const auto units = ring.units();
  for (Elem x = 1; x < n; ++x) {
    const Elem gen[1] = {x};
    const Ideal xR = ideal_from_generators(ring, gen);
    bool found = false;
    for (Elem u : units) {
      const Elem u2 = ring.mul(u, u);
      if (ring.mul(u2, u2) != ring.one() && ring.contains(xR, ring.sub(u2, ring.one()))) {
        found = true;
        break;
      }
    }
    if (!found)
      return false;
  }
  return true;
}

} // namespace sl2wb
