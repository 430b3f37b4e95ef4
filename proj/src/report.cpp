#include "sl2wb/report.hpp"

#include <sstream>

namespace sl2wb {

namespace {

Json matrices_json(const FiniteRing& ring, std::span<const Mat2> ms) {
  Json arr = Json::array();
  for (const Mat2& m : ms)
    arr.push_back(matrix_json(ring, m));
  return arr;
}

Json optional_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

Json elements_json(const FiniteRing& ring, const std::vector<Elem>& xs) {
  Json arr = Json::array();
  for (Elem x : xs)
    arr.push_back(ring.format(x));
  return arr;
}

} // namespace

Json ring_json(const FiniteRing& ring) {
  Json factors = Json::array();
  for (const auto& f : ring.factors()) {
    Json jf;
    jf["spec"] = f.spec();
    jf["p"] = f.p;
    if (f.kind == ChainLocalRing::Kind::IntegerModPrimePower) {
      jf["k"] = f.length;
    } else {
      jf["g"] = f.g;
      jf["e"] = f.length;
    }
    jf["residue_field_order"] = f.residue_field_order();
    factors.push_back(std::move(jf));
  }
  Json j;
  j["spec"] = ring.spec();
  j["order"] = ring.order();
  j["factors"] = std::move(factors);
  j["units_count"] = ring.units().size();
  return j;
}

Json matrix_json(const FiniteRing& ring, const Mat2& m) {
  Json j;
  j["a"] = ring.format(m.a);
  j["b"] = ring.format(m.b);
  j["c"] = ring.format(m.c);
  j["d"] = ring.format(m.d);
  j["ring_spec"] = ring.spec();
  return j;
}

Json ideal_json(const Ideal& ideal) {
  Json j;
  j["exponents"] = ideal.exponents;
  j["whole"] = ideal.is_whole();
  j["zero"] = ideal.is_zero();
  return j;
}

Json group_json(const GroupTable& group, const ClassPartition& classes, const AbelianInvariants& ab) {
  Json sizes = Json::array();
  for (const auto& c : classes.classes)
    sizes.push_back(c.size());
  Json j;
  j["ring_spec"] = group.ring().spec();
  j["group_order"] = group.order();
  j["class_count"] = classes.classes.size();
  j["class_sizes"] = std::move(sizes);
  j["abelian_invariants"] = ab.factors;
  j["perfect"] = ab.factors.empty();
  return j;
}

Json abelianization_json(const GroupTable& group, const AbelianInvariants& ab) {
  Json j;
  j["ring_spec"] = group.ring().spec();
  j["group_order"] = group.order();
  j["derived_order"] = ab.derived.size();
  j["abelian_invariants"] = ab.factors;
  j["perfect"] = ab.factors.empty();
  return j;
}

Json norm_json(const GroupTable& group, const NormProfile& profile, const NormalGenerationVerdict& verdict) {
  std::vector<Mat2> t;
  for (Index i : profile.generators)
    t.push_back(group.element(i));
  Json pi = Json::array();
  for (const Ideal& p : verdict.pi)
    pi.push_back(ideal_json(p));
  Json j;
  j["ring_spec"] = group.ring().spec();
  j["T"] = matrices_json(group.ring(), t);
  j["diameter"] = optional_json(profile.diameter);
  j["ball_sizes"] = profile.ball_sizes;
  j["pi_set"] = std::move(pi);
  j["verdict"] = {{"closure", verdict.closure_is_group},
                  {"pi_empty", verdict.pi_empty},
                  {"ab_generates", verdict.ab_generates},
                  {"criterion_agrees", verdict.agree()}};
  return j;
}

Json pi_json(const FiniteRing& ring, std::span<const Mat2> elements) {
  Json pi = Json::array();
  for (const Ideal& p : pi_set(ring, elements))
    pi.push_back(ideal_json(p));
  const Ideal l = level_sum(ring, elements);
  Json j;
  j["ring_spec"] = ring.spec();
  j["T"] = matrices_json(ring, elements);
  j["pi_set"] = std::move(pi);
  j["level_sum"] = ideal_json(l);
  return j;
}

Json delta_json(const GroupTable& group, const DeltaReport& report) {
  std::vector<Mat2> witness;
  for (Index i : report.witness)
    witness.push_back(group.element(i));
  Json j;
  j["ring_spec"] = group.ring().spec();
  j["group_order"] = group.order();
  j["k"] = report.k;
  j["value"] = optional_json(report.value);
  j["minus_infinity"] = !report.value.has_value();
  j["witness"] = matrices_json(group.ring(), witness);
  j["search_space"] = report.search_space;
  j["examined"] = report.examined;
  j["generating_sets"] = report.generating_sets;
  j["partial"] = report.partial;
  return j;
}

Json sandwich_json(const GroupTable& group, const SandwichReport& report) {
  const FiniteRing& r = group.ring();
  Json units = Json::array();
  if (report.units.quotient)
    for (Elem u : report.units.units)
      units.push_back(report.units.quotient->ring.format(u));
  Json j;
  j["ring_spec"] = r.spec();
  j["generator"] = matrix_json(r, report.generator);
  j["N_order"] = report.normal.size();
  j["level"] = ideal_json(report.level);
  j["rho"] = elements_json(r, report.rho.members());
  j["units"] = std::move(units);
  j["G_N_order"] = report.upper.size();
  j["commutator_order"] = report.lower.size();
  j["G_N_is_subgroup"] = report.upper_is_subgroup;
  j["chain_left_ok"] = report.chain_left_ok;
  j["chain_right_ok"] = report.chain_right_ok;
  j["radix_ok"] = report.radix_ok;
  j["selfrep_ok"] = report.selfrep_ok;
  return j;
}

Json generators_json(const FiniteRing& ring, const GeneratorConstruction& c) {
  Json j;
  j["ring_spec"] = ring.spec();
  j["k"] = c.k;
  j["r1"] = c.r1;
  j["r2"] = c.r2;
  j["q"] = c.q;
  j["v"] = c.v;
  j["refused"] = c.refused;
  if (c.refused)
    j["reason"] = c.reason;
  j["elements"] = matrices_json(ring, c.elements);
  return j;
}

Json splitting_json(const SplittingReport& r) {
  Json j;
  j["D"] = r.d;
  j["split2"] = std::string(to_string(r.split2));
  j["split3"] = std::string(to_string(r.split3));
  j["r1"] = r.r1;
  j["r2"] = r.r2;
  j["q"] = r.q;
  j["v"] = r.v;
  j["improved_offset"] = r.improved_offset;
  return j;
}

Json verdict_json(const DeltaVerdict& v) {
  Json j;
  j["D"] = v.d;
  j["k"] = v.k;
  j["lower_bound"] = optional_json(v.lower_bound);
  j["improved_lower_bound"] = optional_json(v.improved_lower_bound);
  j["minus_infinity"] = !v.lower_bound.has_value();
  return j;
}

Json scan_json(const ScanTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    if (row.report)
      rows.push_back(splitting_json(*row.report));
    else
      rows.push_back({{"D", row.d}, {"skipped", row.note}});
  }
  Json hist = Json::object();
  for (auto [v, n] : table.v_histogram)
    hist[std::to_string(v)] = n;
  Json j;
  j["rows"] = std::move(rows);
  j["v_histogram"] = std::move(hist);
  return j;
}

std::string scan_tsv(const ScanTable& table) {
  std::ostringstream out;
  out << "D\tsplit2\tsplit3\tr1\tr2\tq\tv\tnote\n";
  for (const auto& row : table.rows) {
    out << row.d;
    if (row.report) {
      const auto& r = *row.report;
      out << '\t' << to_string(r.split2) << '\t' << to_string(r.split3) << '\t' << r.r1 << '\t' << r.r2 << '\t'
          << r.q << '\t' << r.v << '\t';
    } else {
      out << "\t\t\t\t\t\t\t" << row.note;
    }
    out << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace sl2wb
