#include "sl2wb/acceptance.hpp"

#include "sl2wb/error.hpp"

#include <chrono>
#include <functional>
#include <tuple>
#include <random>
#include <set>
#include <sstream>

namespace sl2wb {

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  std::string detail(const std::string& success) const {
    if (ok)
      return success;
    std::string s;
    for (const auto& f : failures)
      s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

CriterionResult make(unsigned id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.data = Json::object();
  return r;
}

void finish(CriterionResult& r, const Check& check, const std::string& success) {
  r.pass = check.ok;
  r.detail = check.detail(success);
}

std::string join(const std::vector<unsigned>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string show(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "-inf"; }

// Counts ad - bc = 1 over all quadruples, without the group table.
std::size_t determinant_scan(const FiniteRing& r) {
  std::size_t count = 0;
  const Elem n = Elem(r.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem d = 0; d < n; ++d) {
      const Elem ad = r.mul(a, d);
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          count += r.sub(ad, r.mul(b, c)) == r.one();
    }
  return count;
}

// Multiplicative into (Z/m, +), onto, and with kernel equal to the derived subgroup.
struct HomAudit {
  bool multiplicative = true;
  bool surjective = false;
  bool kernel_is_derived = false;
};

HomAudit audit(const GroupTable& g, const std::vector<unsigned>& image, unsigned m,
               const std::function<unsigned(unsigned, unsigned)>& op) {
  HomAudit a;
  for (Index x = 0; x < g.order() && a.multiplicative; ++x)
    for (Index y = 0; y < g.order(); ++y)
      if (image[g.mul(x, y)] != op(image[x], image[y])) {
        a.multiplicative = false;
        break;
      }
  a.surjective = std::set<unsigned>(image.begin(), image.end()).size() == m;
  std::vector<Index> kernel;
  for (Index i = 0; i < g.order(); ++i)
    if (image[i] == 0)
      kernel.push_back(i);
  a.kernel_is_derived = kernel == derived_subgroup(g).members();
  return a;
}

void expect_audit(Check& check, CriterionResult& res, const std::string& name, const HomAudit& a) {
  res.data[name] = {{"multiplicative", a.multiplicative},
                    {"surjective", a.surjective},
                    {"kernel_is_derived", a.kernel_is_derived}};
  check.expect(a.multiplicative, name + " is not multiplicative");
  check.expect(a.surjective, name + " is not surjective");
  check.expect(a.kernel_is_derived, name + " kernel differs from the derived subgroup");
}

CriterionResult group_orders(const AcceptanceOptions&) {
  CriterionResult res = make(1, "group orders");
  const std::pair<const char*, std::size_t> cases[] = {{"F2", 6},          {"F3", 24},  {"F4", 60},    {"Z/4", 48},
                                                       {"F2[T]/(T^2)", 48}, {"Z/9", 648}, {"Z/12", 1152}};
  Check check;
  for (auto [spec, expected] : cases) {
    const FiniteRing r = parse_ring_spec(spec);
    const std::size_t table = GroupTable::enumerate(r).order();
    const std::size_t oracle = determinant_scan(r);
    res.data[spec] = table;
    check.expect(table == expected && oracle == expected, std::string(spec) + ": table " + std::to_string(table) +
                                                              ", scan " + std::to_string(oracle) + ", expected " +
                                                              std::to_string(expected));
  }
  finish(res, check, "all seven orders match the determinant scan");
  return res;
}

CriterionResult abelianizations(const AcceptanceOptions&) {
  CriterionResult res = make(2, "abelianizations");
  const std::pair<const char*, std::vector<unsigned>> cases[] = {
      {"F2", {2}}, {"F3", {3}}, {"Z/4", {4}}, {"F2[T]/(T^2)", {2, 2}}, {"Z/12", {12}},
      {"F4", {}},  {"F5", {}},  {"Z/25", {}}};
  Check check;
  for (const auto& [spec, expected] : cases) {
    const GroupTable g = GroupTable::enumerate(parse_ring_spec(spec));
    const AbelianInvariants ab = abelianization(g);
    res.data[spec] = ab.factors;
    check.expect(ab.factors == expected,
                 std::string(spec) + ": got " + join(ab.factors) + ", expected " + join(expected));
  }
  finish(res, check, "all eight invariant-factor lists match");
  return res;
}

CriterionResult homomorphisms(const AcceptanceOptions&) {
  CriterionResult res = make(3, "homomorphism suite");
  Check check;
  auto xor_op = [](unsigned x, unsigned y) { return x ^ y; };

  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  const GroupTable g = GroupTable::enumerate(dual);
  std::vector<unsigned> q(g.order()), hq(g.order());
  for (Index i = 0; i < g.order(); ++i) {
    q[i] = q_hom(dual, g.element(i));
    const HqValue v = hq_hom(dual, g.element(i));
    hq[i] = v.h + 2 * v.q;
  }
  const HomAudit qa = audit(g, q, 2, xor_op);
  res.data["q"] = {{"multiplicative", qa.multiplicative}};
  check.expect(qa.multiplicative, "q is not multiplicative");
  expect_audit(check, res, "hq", audit(g, hq, 4, xor_op));

  const Elem t = dual.parse_element("T");
  const HqValue at_one = hq_hom(dual, e12(dual, dual.one()));
  const HqValue at_t = hq_hom(dual, e12(dual, t));
  res.data["hq_E12_1"] = {at_one.h, at_one.q};
  res.data["hq_E12_T"] = {at_t.h, at_t.q};
  check.expect(at_one == HqValue{1, 0}, "E12(1) does not map to (1,0)");
  check.expect(at_t == HqValue{0, 1}, "E12(T) does not map to (0,1)");

  for (auto [name, spec, m] : {std::tuple{"z4", "Z/4", 4u}, std::tuple{"f3", "F3", 3u}}) {
    const FiniteRing r = parse_ring_spec(spec);
    const CyclicAbelianHom hom = m == 4 ? CyclicAbelianHom::z4(r) : CyclicAbelianHom::f3(r);
    std::vector<unsigned> image(hom.group().order());
    for (Index i = 0; i < image.size(); ++i)
      image[i] = hom.at(i);
    expect_audit(check, res, name, audit(hom.group(), image, m, [m](unsigned x, unsigned y) { return (x + y) % m; }));
  }
  finish(res, check, "q, h+q, z4 and f3 verified on all pairs");
  return res;
}

CriterionResult semidirect(const AcceptanceOptions&) {
  CriterionResult res = make(4, "semidirect structure");
  Check check;
  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  const GroupTable g = GroupTable::enumerate(dual);
  Ideal t_ideal = dual.zero_ideal();
  t_ideal.exponents[0] = 1;
  const ReductionHom red = reduction_hom(g, t_ideal);
  const Subgroup& k = red.kernel;

  bool elementary = true;
  for (Index x : k.members())
    for (Index y : k.members())
      elementary = elementary && g.mul(x, x) == g.identity() && g.mul(x, y) == g.mul(y, x);

  // Constant-coefficient matrices: entries 0 or 1.
  std::vector<Index> constants;
  for (Index i = 0; i < g.order(); ++i) {
    const Mat2& m = g.element(i);
    if (m.a < 2 && m.b < 2 && m.c < 2 && m.d < 2)
      constants.push_back(i);
  }
  const bool is_sub = is_subgroup(g, constants);
  std::size_t meet = 0;
  std::set<Index> images;
  for (Index i : constants) {
    meet += k.contains(i);
    images.insert(red.hom.image[i]);
  }
  const bool complement = is_sub && constants.size() == 6 && meet == 1 && images.size() == red.target.order();

  res.data["kernel_order"] = k.size();
  res.data["kernel_elementary_abelian"] = elementary;
  res.data["complement_order"] = constants.size();
  res.data["complement_meets_kernel_trivially"] = meet == 1;
  check.expect(k.size() == 8, "kernel order " + std::to_string(k.size()) + ", expected 8");
  check.expect(elementary, "kernel is not elementary abelian");
  check.expect(complement, "constant matrices are not a complement mapping onto SL2(F2)");
  finish(res, check, "kernel F2^3 with constant-coefficient complement SL2(F2)");
  return res;
}

CriterionResult word_norms(const AcceptanceOptions& opt) {
  CriterionResult res = make(5, "word-norm values");
  Check check;
  DeltaOptions d;
  d.budget = opt.delta_budget;
  d.workers = opt.parallelism;
  auto run = [&](const char* spec, unsigned k) {
    const DeltaReport r = delta_k(GroupTable::enumerate(parse_ring_spec(spec)), k, d);
    res.data[std::string("delta") + std::to_string(k) + " " + spec] = {
        {"value", r.value ? Json(*r.value) : Json(nullptr)}, {"partial", r.partial}};
    return r;
  };
  const DeltaReport f2 = run("F2", 1);
  const DeltaReport f3 = run("F3", 1);
  const DeltaReport dual1 = run("F2[T]/(T^2)", 1);
  const DeltaReport dual2 = run("F2[T]/(T^2)", 2);
  check.expect(!f2.partial && f2.value == 2u, "Delta_1(SL2(F2)) = " + show(f2.value) + ", expected 2");
  check.expect(!f3.partial && f3.value == 2u, "Delta_1(SL2(F3)) = " + show(f3.value) + ", expected 2");
  check.expect(!dual1.partial && !dual1.value, "Delta_1(SL2(F2[T]/(T^2))) = " + show(dual1.value) + ", expected -inf");
  check.expect(!dual2.partial && dual2.value && *dual2.value >= 3,
               "Delta_2(SL2(F2[T]/(T^2))) = " + show(dual2.value) + ", expected >= 3");
  finish(res, check,
         "Delta_1 values 2, 2, -inf; Delta_2(SL2(F2[T]/(T^2))) = " + show(dual2.value) + " (exhaustive)");
  return res;
}

CriterionResult sandwich(const AcceptanceOptions&) {
  CriterionResult res = make(6, "sandwich verification");
  Check check;
  const GroupTable g = GroupTable::enumerate(parse_ring_spec("Z/9"));
  const ClassPartition classes = conjugacy_classes(g);
  std::size_t checked = 0, skipped = 0;
  for (const auto& cls : classes.classes) {
    const Mat2& a = g.element(cls.front());
    if (level_ideal(g.ring(), a).is_zero()) {
      ++skipped;
      continue;
    }
    const SandwichReport rep = sandwich_check(g, a);
    ++checked;
    check.expect(rep.ok(), "fails for " + format_matrix(g.ring(), a));
  }
  res.data["representatives_checked"] = checked;
  res.data["level_zero_skipped"] = skipped;
  finish(res, check, std::to_string(checked) + " class representatives satisfy both inclusions, radix and C(x^3 b)");
  return res;
}

CriterionResult identities(const AcceptanceOptions&) {
  CriterionResult res = make(7, "identity suites");
  Check check;
  for (const char* spec : {"Z/9", "F3"}) {
    const FiniteRing r = parse_ring_spec(spec);
    bool ok = true;
    for (Elem x = 0; x < r.order(); ++x)
      for (Elem y = 0; y < r.order(); ++y)
        ok = ok && selfrep_shift_check(r, x, y);
    res.data["selfrep " + std::string(spec)] = ok;
    check.expect(ok, std::string("self-reproducing shift identity fails over ") + spec);
  }

  const char* rings[] = {"F2", "F3", "F4", "F5", "Z/4", "F2[T]/(T^2)", "Z/9", "Z/12", "Z/25"};
  for (const char* spec : rings) {
    const FiniteRing r = parse_ring_spec(spec);
    bool ok = true;
    for (Elem u : r.units())
      for (Elem a = 0; a < r.order(); ++a)
        ok = ok && comm(r, h(r, u), e12(r, a)) == e12(r, r.mul(r.sub(r.mul(u, u), r.one()), a));
    res.data["commutator " + std::string(spec)] = ok;
    check.expect(ok, std::string("[h(u), E12(a)] identity fails over ") + spec);
  }

  std::mt19937_64 rng(0x5eed'2a9bULL);
  constexpr int kSamples = 1000;
  for (const char* spec : rings) {
    const GroupTable g = GroupTable::enumerate(parse_ring_spec(spec));
    std::uniform_int_distribution<Index> pick(0, Index(g.order() - 1));
    std::uniform_int_distribution<int> size(1, 3);
    int agree = 0;
    for (int s = 0; s < kSamples; ++s) {
      std::vector<Mat2> t;
      for (int i = size(rng); i > 0; --i)
        t.push_back(g.element(pick(rng)));
      agree += pi_set(g.ring(), t).empty() == level_sum(g.ring(), t).is_whole();
    }
    res.data["pi " + std::string(spec)] = agree;
    check.expect(agree == kSamples, std::string("Pi/level mismatch over ") + spec);
  }
  finish(res, check, "all identities hold; 1000 random sets per ring agree");
  return res;
}

CriterionResult quadratic(const AcceptanceOptions&) {
  CriterionResult res = make(8, "quadratic table");
  Check check;
  std::size_t rows = 0;
  for (std::int64_t d = 2; d <= 500; ++d) {
    if (!is_square_free(d))
      continue;
    ++rows;
    const unsigned m8 = unsigned(d % 8), m3 = unsigned(d % 3);
    const unsigned expected = m8 == 5 && m3 == 2 ? 0 : m8 == 5 && m3 == 0 ? 1 : 2;
    const unsigned v = v_profile(d).v;
    check.expect(v == expected, "v(" + std::to_string(d) + ") = " + std::to_string(v) + ", expected " +
                                    std::to_string(expected));
  }
  res.data["rows"] = rows;
  for (auto [d, expected] : {std::pair{5, 0u}, {21, 1u}, {13, 2u}, {2, 2u}}) {
    const unsigned v = v_profile(d).v;
    res.data["v(" + std::to_string(d) + ")"] = v;
    check.expect(v == expected, "v(" + std::to_string(d) + ") = " + std::to_string(v));
  }
  const DeltaVerdict v13 = delta_verdict(13, 1);
  res.data["delta_verdict(13,1)"] = v13.lower_bound ? Json(*v13.lower_bound) : Json("-inf");
  check.expect(!v13.lower_bound, "delta_verdict(13, 1) is not -inf");
  finish(res, check, std::to_string(rows) + " square-free D match the three-case table");
  return res;
}

CriterionResult generator_demo(const AcceptanceOptions&) {
  CriterionResult res = make(9, "generating-set demo");
  Check check;
  for (auto [spec, k] : {std::pair{"Z/12", 1u}, {"F2[T]/(T^2) x F3", 2u}}) {
    const FiniteRing r = parse_ring_spec(spec);
    const GeneratorConstruction c = construct_generators(r, k);
    const GroupTable g = GroupTable::enumerate(r);
    std::vector<Index> idx;
    for (const Mat2& m : c.elements)
      idx.push_back(g.index_of(m));
    const std::size_t closure = c.refused ? 0 : normal_closure(g, idx).size();
    res.data[spec] = generators_json(r, c);
    check.expect(!c.refused && closure == g.order(), std::string(spec) + ": normal closure " +
                                                         std::to_string(closure) + " of " +
                                                         std::to_string(g.order()));
  }
  const FiniteRing dual = parse_ring_spec("F2[T]/(T^2)");
  const GeneratorConstruction refused = construct_generators(dual, 1);
  res.data["F2[T]/(T^2) k=1"] = generators_json(dual, refused);
  check.expect(refused.refused && refused.reason.find("rank obstruction") != std::string::npos,
               "k = 1 over F2[T]/(T^2) was not refused");
  finish(res, check, "both sets normally generate; k = 1 over F2[T]/(T^2) refused by rank");
  return res;
}

using Runner = CriterionResult (*)(const AcceptanceOptions&);

constexpr Runner kRunners[] = {group_orders, abelianizations, homomorphisms, semidirect, word_norms,
                               sandwich,     identities,      quadratic,     generator_demo};
constexpr double kLimits[] = {5, 60, 5, 1, 30, 600, 60, 1, 30};

CriterionResult timed(std::size_t i, const AcceptanceOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[i](opt);
  } catch (const std::exception& e) {
    r = make(unsigned(i + 1), "criterion " + std::to_string(i + 1));
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.limit_seconds = kLimits[i];
  if (r.seconds > r.limit_seconds) {
    r.pass = false;
    r.detail += " (time limit exceeded)";
  }
  return r;
}

std::vector<CriterionResult> run_core(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < std::size(kRunners); ++i)
    out.push_back(timed(i, opt));
  return out;
}

Json core_json(const std::vector<CriterionResult>& rs) {
  AcceptanceReport r;
  r.suite = "core";
  r.criteria = rs;
  return r.to_json();
}

} // namespace

bool AcceptanceReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.skipped && !c.pass)
      return false;
  return true;
}

Json AcceptanceReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : criteria)
    list.push_back({{"id", c.id},
                    {"name", c.name},
                    {"status", c.skipped ? "skip" : c.pass ? "pass" : "fail"},
                    {"detail", c.detail},
                    {"data", c.data}});
  Json j;
  j["suite"] = suite;
  j["criteria"] = std::move(list);
  j["all_pass"] = all_pass();
  return j;
}

std::string AcceptanceReport::summary_lines(bool with_timings) const {
  std::ostringstream out;
  for (const auto& c : criteria) {
    out << "criterion " << c.id << ": " << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << " - " << c.name
        << ": " << c.detail;
    if (with_timings && !c.skipped) {
      out.setf(std::ios::fixed);
      out.precision(3);
      out << " [" << c.seconds << " s";
      if (c.limit_seconds > 0)
        out << " of " << c.limit_seconds << " s";
      out << "]";
    }
    out << '\n';
  }
  return out.str();
}

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceReport report;
  report.suite = options.fast ? "fast" : "full";
  report.criteria = run_core(options);

  CriterionResult det = make(10, "determinism");
  if (options.fast) {
    det.skipped = true;
    det.detail = "skipped in the fast suite";
  } else {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string reference = core_json(report.criteria).dump();
    Check check;
    for (unsigned workers : {1u, 4u}) {
      AcceptanceOptions again = options;
      again.parallelism = workers;
      const bool same = core_json(run_core(again)).dump() == reference;
      det.data["parallelism " + std::to_string(workers)] = same;
      check.expect(same, "JSON differs at parallelism " + std::to_string(workers));
    }
    finish(det, check, "criteria 1-9 JSON byte-identical across reruns at parallelism 1 and 4");
    det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  report.criteria.push_back(std::move(det));
  return report;
}

} // namespace sl2wb
