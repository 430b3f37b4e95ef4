#include "sl2wb/sl2core.hpp"

#include "sl2wb/error.hpp"

#include <cctype>
#include <optional>

namespace sl2wb {

std::uint64_t matrix_id(const FiniteRing& ring, const Mat2& m) {
  const std::uint64_t n = ring.order();
  return m.a + n * (m.b + n * (m.c + n * std::uint64_t(m.d)));
}

Mat2 matrix_from_id(const FiniteRing& ring, std::uint64_t id) {
  const std::uint64_t n = ring.order();
  Mat2 m;
  m.a = Elem(id % n);
  id /= n;
  m.b = Elem(id % n);
  id /= n;
  m.c = Elem(id % n);
  id /= n;
  m.d = Elem(id % n);
  return m;
}

Elem det(const FiniteRing& ring, const Mat2& m) { return ring.sub(ring.mul(m.a, m.d), ring.mul(m.b, m.c)); }

Mat2 identity(const FiniteRing& ring) { return {ring.one(), ring.zero(), ring.zero(), ring.one()}; }

Mat2 e12(const FiniteRing& ring, Elem x) { return {ring.one(), x, ring.zero(), ring.one()}; }

Mat2 e21(const FiniteRing& ring, Elem x) { return {ring.one(), ring.zero(), x, ring.one()}; }

Mat2 h(const FiniteRing& ring, Elem u) { return {u, ring.zero(), ring.zero(), ring.inv(u)}; }

Mat2 self_reproducing(const FiniteRing& ring, Elem x) {
  return {ring.one(), x, x, ring.add(ring.one(), ring.mul(x, x))};
}

Mat2 scalar(const FiniteRing& ring, Elem u) {
  if (ring.mul(u, u) != ring.one())
    throw Error(ErrorKind::NotAUnit, "scalar " + ring.format(u) + " does not square to 1");
  return {u, ring.zero(), ring.zero(), u};
}

Mat2 from_entries(const FiniteRing& ring, Elem a, Elem b, Elem c, Elem d) {
  const Mat2 m{a, b, c, d};
  if (det(ring, m) != ring.one())
    throw Error(ErrorKind::DeterminantNotOne, format_matrix(ring, m) + " has determinant " +
                                                  ring.format(det(ring, m)) + ", not 1");
  return m;
}

Mat2 mul(const FiniteRing& r, const Mat2& x, const Mat2& y) {
  return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
          r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

Mat2 inverse(const FiniteRing& ring, const Mat2& m) { return {m.d, ring.neg(m.b), ring.neg(m.c), m.a}; }

Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

Mat2 conj(const FiniteRing& ring, const Mat2& a, const Mat2& b) {
  return mul(ring, mul(ring, inverse(ring, b), a), b);
}

Mat2 comm(const FiniteRing& ring, const Mat2& a, const Mat2& b) {
  return mul(ring, mul(ring, a, b), mul(ring, inverse(ring, a), inverse(ring, b)));
}

bool is_scalar(const FiniteRing&, const Mat2& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

Ideal level_ideal(const FiniteRing& ring, const Mat2& m) {
  const Elem gens[3] = {ring.sub(m.a, m.d), m.b, m.c};
  return ideal_from_generators(ring, gens);
}

Elem rho(const FiniteRing& ring, const Mat2& m) {
  return ring.add(ring.sub(ring.mul(m.a, m.a), ring.one()), ring.mul(m.a, m.b));
}

RhoFamily rho_family(const FiniteRing& ring, const Mat2& m) {
  const Mat2 inv = inverse(ring, m);
  return {rho(ring, m), rho(ring, transpose(m)), rho(ring, inv), rho(ring, transpose(inv))};
}

bool selfrep_shift_check(const FiniteRing& ring, Elem x, Elem y) {
  const Mat2 lhs = mul(ring, inverse(ring, self_reproducing(ring, x)), self_reproducing(ring, y));
  const Mat2 rhs = conj(ring, self_reproducing(ring, ring.sub(y, x)), e12(ring, x));
  return lhs == rhs;
}

std::string format_matrix(const FiniteRing& ring, const Mat2& m) {
  return "[[" + ring.format(m.a) + "," + ring.format(m.b) + "],[" + ring.format(m.c) + "," +
         ring.format(m.d) + "]]";
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      out += ch;
  return out;
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[')
      ++depth;
    else if (ch == ')' || ch == ']')
      --depth;
    if (depth < 0)
      throw Error(ErrorKind::Parse, "unbalanced brackets in '" + std::string(s) + "'");
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0)
    throw Error(ErrorKind::Parse, "unbalanced brackets in '" + std::string(s) + "'");
  parts.push_back(cur);
  return parts;
}

} // namespace

Mat2 parse_matrix(const FiniteRing& ring, std::string_view text) {
  const std::string s = strip(text);
  if (s == "I")
    return identity(ring);
  if (s == "-I")
    return scalar(ring, ring.neg(ring.one()));
  auto call = [&](std::string_view name) -> std::optional<Elem> {
    const std::string prefix = std::string(name) + "(";
    if (s.rfind(prefix, 0) != 0 || s.back() != ')')
      return std::nullopt;
    return ring.parse_element(s.substr(prefix.size(), s.size() - prefix.size() - 1));
  };
  if (auto x = call("E12"))
    return e12(ring, *x);
  if (auto x = call("E21"))
    return e21(ring, *x);
  if (auto x = call("h"))
    return h(ring, *x);
  if (auto x = call("C"))
    return self_reproducing(ring, *x);
  if (s.size() > 4 && s.rfind("[[", 0) == 0 && s.substr(s.size() - 2) == "]]") {
    auto rows = split_commas(s.substr(1, s.size() - 2));
    if (rows.size() == 2 && rows[0].size() >= 2 && rows[1].size() >= 2 && rows[0].front() == '[' &&
        rows[0].back() == ']' && rows[1].front() == '[' && rows[1].back() == ']') {
      auto r0 = split_commas(std::string_view(rows[0]).substr(1, rows[0].size() - 2));
      auto r1 = split_commas(std::string_view(rows[1]).substr(1, rows[1].size() - 2));
      if (r0.size() == 2 && r1.size() == 2)
        return from_entries(ring, ring.parse_element(r0[0]), ring.parse_element(r0[1]),
                            ring.parse_element(r1[0]), ring.parse_element(r1[1]));
    }
  }
  throw Error(ErrorKind::Parse, "cannot parse matrix '" + std::string(text) + "'");
}

std::vector<Mat2> parse_matrix_list(const FiniteRing& ring, std::string_view text) {
  std::vector<Mat2> out;
  for (const auto& part : split_commas(text)) {
    if (strip(part).empty())
      throw Error(ErrorKind::Parse, "empty entry in matrix list '" + std::string(text) + "'");
    out.push_back(parse_matrix(ring, part));
  }
  return out;
}

} // namespace sl2wb
