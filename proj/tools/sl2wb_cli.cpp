#include "sl2wb/acceptance.hpp"
#include "sl2wb/error.hpp"
#include "sl2wb/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace sl2wb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::size_t ring_order_cap = kDefaultRingOrderCap;
  std::size_t group_order_cap = kDefaultGroupOrderCap;
  std::size_t delta_budget = DeltaOptions{}.budget;
  std::string output_format = "json";
  unsigned parallelism = 1;
};

void load_config(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::InvalidArgument, "cannot open config file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, "config file " + path + ": " + e.what());
  }
  cfg.ring_order_cap = j.value("ring_order_cap", cfg.ring_order_cap);
  cfg.group_order_cap = j.value("group_order_cap", cfg.group_order_cap);
  cfg.delta_budget = j.value("delta_budget", cfg.delta_budget);
  cfg.output_format = j.value("output_format", cfg.output_format);
  cfg.parallelism = j.value("parallelism", cfg.parallelism);
}

void validate(const Config& cfg) {
  if (cfg.ring_order_cap == 0 || cfg.ring_order_cap > kMaxRingOrderCap)
    throw Error(ErrorKind::InvalidArgument,
                "ring_order_cap must be between 1 and " + std::to_string(kMaxRingOrderCap));
  if (cfg.group_order_cap == 0 || cfg.delta_budget == 0 || cfg.parallelism == 0)
    throw Error(ErrorKind::InvalidArgument, "caps, budget and parallelism must be positive");
  if (cfg.output_format != "json" && cfg.output_format != "tsv" && cfg.output_format != "text")
    throw Error(ErrorKind::InvalidArgument, "output format must be json, tsv or text");
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const Json& j, const Config& cfg) {
  if (cfg.output_format == "json") {
    std::cout << dump(j);
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  for (const auto& [k, v] : rows)
    std::cout << k << (cfg.output_format == "tsv" ? "\t" : ": ") << v << '\n';
}

FiniteRing ring_of(const std::string& spec, const Config& cfg) { return parse_ring_spec(spec, cfg.ring_order_cap); }

GroupTable group_of(const std::string& spec, const Config& cfg) {
  return GroupTable::enumerate(ring_of(spec, cfg), cfg.group_order_cap);
}

std::vector<Index> indices_of(const GroupTable& g, const std::vector<Mat2>& ms) {
  std::vector<Index> out;
  for (const Mat2& m : ms)
    out.push_back(g.index_of(m));
  return out;
}

int run_hom(const std::string& which, bool table, const std::string& matrix, const Config& cfg) {
  std::string spec = which == "z4" ? "Z/4" : which == "f3" ? "F3" : "F2[T]/(T^2)";
  const FiniteRing ring = ring_of(spec, cfg);
  const GroupTable g = GroupTable::enumerate(ring, cfg.group_order_cap);
  std::vector<std::string> images(g.order());
  std::optional<CyclicAbelianHom> cyclic;
  if (which == "z4")
    cyclic = CyclicAbelianHom::z4(ring);
  else if (which == "f3")
    cyclic = CyclicAbelianHom::f3(ring);
  auto image_of = [&](const Mat2& m) -> std::string {
    if (cyclic)
      return std::to_string((*cyclic)(m));
    if (which == "q")
      return std::to_string(q_hom(ring, m));
    const HqValue v = hq_hom(ring, m);
    return "(" + std::to_string(v.h) + "," + std::to_string(v.q) + ")";
  };
  for (Index i = 0; i < g.order(); ++i)
    images[i] = image_of(g.element(i));
  if (table) {
    std::cout << hom_table_tsv(g, images);
    return kExitOk;
  }
  Json j;
  j["hom"] = which;
  j["ring_spec"] = ring.spec();
  j["group_order"] = g.order();
  if (!matrix.empty()) {
    const Mat2 m = parse_matrix(ring, matrix);
    j["matrix"] = matrix_json(ring, m);
    j["image"] = image_of(m);
  }
  Json counts = Json::object();
  for (const auto& s : images)
    counts[s] = counts.value(s, 0) + 1;
  j["image_counts"] = std::move(counts);
  emit(j, cfg);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-ring laboratory for SL2: enumeration, abelianization, conjugation-invariant word norms, "
               "sandwich subgroups and quadratic-field bounds"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  std::optional<std::string> format;
  std::optional<unsigned> parallelism;
  std::optional<std::size_t> ring_cap, group_cap, budget;
  app.add_option("--config", config_path, "JSON config file (default from $SL2WB_CONFIG)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--parallelism", parallelism, "Worker threads");
  app.add_option("--ring-cap", ring_cap, "Maximum ring order (at most 256)");
  app.add_option("--group-cap", group_cap, "Maximum group order");
  app.add_option("--delta-budget", budget, "Maximum candidate sets examined by delta");

  auto* ring_cmd = app.add_subcommand("ring", "Ring operations")->require_subcommand(1);
  std::string ring_spec;
  auto* ring_info = ring_cmd->add_subcommand("info", "Factorization and order of a ring");
  ring_info->add_option("spec", ring_spec, "Ring spec, e.g. Z/12 or F2[T]/(T^2)")->required();

  auto* sl2_cmd = app.add_subcommand("sl2", "SL2 over a finite ring")->require_subcommand(1);
  auto* sl2_enum = sl2_cmd->add_subcommand("enumerate", "Order, classes and abelianization");
  sl2_enum->add_option("spec", ring_spec, "Ring spec")->required();
  auto* sl2_ab = sl2_cmd->add_subcommand("abelianization", "Invariant factors of the abelianization");
  sl2_ab->add_option("spec", ring_spec, "Ring spec")->required();

  std::string set_text, gen_text;
  auto* norm_cmd = app.add_subcommand("norm", "Conjugation-invariant word norm of a set T");
  norm_cmd->add_option("--ring", ring_spec, "Ring spec")->required();
  norm_cmd->add_option("--set", set_text, "Comma-separated matrices")->required();

  unsigned k = 1;
  auto* delta_cmd = app.add_subcommand("delta", "Exhaustive Delta_k");
  delta_cmd->add_option("--ring", ring_spec, "Ring spec")->required();
  delta_cmd->add_option("-k", k, "Maximum size of T")->required()->check(CLI::PositiveNumber);

  auto* pi_cmd = app.add_subcommand("pi", "Maximal ideals modulo which T is scalar");
  pi_cmd->add_option("--ring", ring_spec, "Ring spec")->required();
  pi_cmd->add_option("--set", set_text, "Comma-separated matrices")->required();

  auto* sandwich_cmd = app.add_subcommand("sandwich", "Check [E, G(N)] <= N <= G(N) for N = <<A>>");
  sandwich_cmd->add_option("--ring", ring_spec, "Ring spec")->required();
  sandwich_cmd->add_option("--gen", gen_text, "Matrix A")->required();

  std::string x_text = "1", b_text = "1";
  unsigned k_max = 16;
  auto* bound_cmd = app.add_subcommand("bound", "Least k with C(b x^3) in B_A(k)");
  bound_cmd->add_option("--ring", ring_spec, "Ring spec")->required();
  bound_cmd->add_option("--gen", gen_text, "Matrix A")->required();
  bound_cmd->add_option("--x", x_text, "Element of the level ideal of A");
  bound_cmd->add_option("--b", b_text, "Ring element");
  bound_cmd->add_option("--k-max", k_max, "Search depth");

  auto* gens_cmd = app.add_subcommand("generators", "Elementary normally generating set of size k");
  gens_cmd->add_option("--ring", ring_spec, "Ring spec")->required();
  gens_cmd->add_option("-k", k, "Set size")->required();

  std::string hom_name, hom_matrix;
  bool hom_table = false;
  auto* hom_cmd = app.add_subcommand("hom", "Explicit abelian quotients");
  hom_cmd->add_option("name", hom_name, "q, hq, z4 or f3")->required()->check(CLI::IsMember({"q", "hq", "z4", "f3"}));
  hom_cmd->add_flag("--table", hom_table, "TSV table over the whole group");
  hom_cmd->add_option("--matrix", hom_matrix, "Evaluate at one matrix");

  auto* quad_cmd = app.add_subcommand("quad", "Real quadratic integer rings")->require_subcommand(1);
  long long d_value = 0, d_from = 2, d_to = 500;
  auto* quad_v = quad_cmd->add_subcommand("v", "Splitting of 2 and 3 and v(R)");
  quad_v->add_option("--D", d_value, "Square-free D > 1")->required();
  auto* quad_verdict = quad_cmd->add_subcommand("verdict", "Lower bound on Delta_k");
  quad_verdict->add_option("--D", d_value, "Square-free D > 1")->required();
  quad_verdict->add_option("-k", k, "k")->required();
  auto* quad_scan = quad_cmd->add_subcommand("scan", "Table over a range of D");
  quad_scan->add_option("--from", d_from, "First D");
  quad_scan->add_option("--to", d_to, "Last D");

  std::string suite = "full";
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_option("--suite", suite, "full or fast")->check(CLI::IsMember({"full", "fast"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (config_path.empty())
      if (const char* env = std::getenv("SL2WB_CONFIG"))
        config_path = env;
    if (!config_path.empty())
      load_config(config_path, cfg);
    if (format)
      cfg.output_format = *format;
    if (parallelism)
      cfg.parallelism = *parallelism;
    if (ring_cap)
      cfg.ring_order_cap = *ring_cap;
    if (group_cap)
      cfg.group_order_cap = *group_cap;
    if (budget)
      cfg.delta_budget = *budget;
    validate(cfg);

    if (*ring_info) {
      emit(ring_json(ring_of(ring_spec, cfg)), cfg);
    } else if (*sl2_enum) {
      const GroupTable g = group_of(ring_spec, cfg);
      emit(group_json(g, conjugacy_classes(g), abelianization(g)), cfg);
    } else if (*sl2_ab) {
      const GroupTable g = group_of(ring_spec, cfg);
      emit(abelianization_json(g, abelianization(g)), cfg);
    } else if (*norm_cmd) {
      const GroupTable g = group_of(ring_spec, cfg);
      const auto idx = indices_of(g, parse_matrix_list(g.ring(), set_text));
      emit(norm_json(g, norm_and_diameter(g, idx), normally_generates(g, idx)), cfg);
    } else if (*delta_cmd) {
      const GroupTable g = group_of(ring_spec, cfg);
      DeltaOptions opt;
      opt.budget = cfg.delta_budget;
      opt.workers = cfg.parallelism;
      emit(delta_json(g, delta_k(g, k, opt)), cfg);
    } else if (*pi_cmd) {
      const FiniteRing r = ring_of(ring_spec, cfg);
      emit(pi_json(r, parse_matrix_list(r, set_text)), cfg);
    } else if (*sandwich_cmd) {
      const GroupTable g = group_of(ring_spec, cfg);
      emit(sandwich_json(g, sandwich_check(g, parse_matrix(g.ring(), gen_text))), cfg);
    } else if (*bound_cmd) {
      const GroupTable g = group_of(ring_spec, cfg);
      const FiniteRing& r = g.ring();
      const Mat2 a = parse_matrix(r, gen_text);
      const BoundSearchResult res = bound_search(g, a, r.parse_element(x_text), r.parse_element(b_text), k_max);
      Json j;
      j["ring_spec"] = r.spec();
      j["generator"] = matrix_json(r, a);
      j["target"] = matrix_json(r, res.target);
      j["k"] = res.k ? Json(*res.k) : Json(nullptr);
      j["k_max"] = k_max;
      emit(j, cfg);
    } else if (*gens_cmd) {
      const FiniteRing r = ring_of(ring_spec, cfg);
      emit(generators_json(r, construct_generators(r, k)), cfg);
    } else if (*hom_cmd) {
      return run_hom(hom_name, hom_table, hom_matrix, cfg);
    } else if (*quad_v) {
      emit(splitting_json(v_profile(d_value)), cfg);
    } else if (*quad_verdict) {
      emit(verdict_json(delta_verdict(d_value, k)), cfg);
    } else if (*quad_scan) {
      const ScanTable t = scan_range(d_from, d_to);
      if (cfg.output_format == "tsv")
        std::cout << scan_tsv(t);
      else
        emit(scan_json(t), cfg);
    } else if (*verify_cmd) {
      AcceptanceOptions opt;
      opt.fast = suite == "fast";
      opt.parallelism = cfg.parallelism;
      opt.delta_budget = cfg.delta_budget;
      const AcceptanceReport rep = run_acceptance(opt);
      std::cerr << rep.summary_lines(true);
      if (cfg.output_format == "json")
        std::cout << dump(rep.to_json());
      else
        std::cout << rep.summary_lines(false);
      return rep.all_pass() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (cfg.output_format == "json")
      std::cout << dump(Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
