#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvesys/error.hpp"
#include "curvesys/io.hpp"

namespace {

using namespace curvesys;

constexpr int kOk = 0;
constexpr int kNotRealizable = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json lifted_witness(const ReductionLog& log, const NormalizedWitness& w) {
  Json j = witness_json(w);
  j["system"] = system_json(log.lift(w.system));
  return j;
}

int cmd_check(const std::string& file) {
  const auto doc = read_scheme_file(file);
  const Verdict v = decide_torus(doc.scheme);
  print(verdict_json(v));
  return v.realizable() ? kOk : kNotRealizable;
}

int cmd_solve(const std::string& file, const std::optional<std::string>& kappa, std::size_t orbits) {
  const auto doc = read_scheme_file(file);
  const Verdict v = decide_torus(doc.scheme);
  Json j = verdict_json(v, orbits);
  if (v.realizable()) {
    const ReductionLog& log = *v.reduction;
    j["solutions"] = Json::array();
    for (const auto& w : enumerate_orbits(log.reduced, orbits)) j["solutions"].push_back(lifted_witness(log, w));
    if (kappa) {
      const NormalizedWitness w = construct_witness(log.reduced, parse_integer_json(Json(*kappa)));
      j["requested"] = lifted_witness(log, w);
    }
  }
  print(j);
  return kOk;
}

int cmd_toz(const std::string& file) {
  const auto doc = read_scheme_file(file);
  print(toz_json(toz_report(doc.scheme)));
  return kOk;
}

int cmd_oracle(const std::string& file) {
  const auto doc = read_scheme_file(file);
  print(oracle_json(oracle_realizable(doc.scheme)));
  return kOk;
}

int cmd_decompose(const std::string& file) {
  const auto doc = read_scheme_file(file);
  const auto result = decompose_3scheme(doc.scheme);
  if (std::holds_alternative<AlreadyTorus>(result)) {
    print(Json{{"status", "torus"}, {"decomposition", nullptr}});
  } else {
    print(Json{{"status", "not_torus"}, {"decomposition", decomposition_json(std::get<Decomposition>(result))}});
  }
  return kOk;
}

int cmd_endemic(const std::string& p, const std::string& q, std::optional<int> bound, int jobs) {
  const Scheme s = endemic_family(parse_integer_json(Json(p)), parse_integer_json(Json(q)));
  Json j;
  j["n"] = s.size();
  j["entries"] = Json::array();
  for (const auto& e : s.entries()) j["entries"].push_back(integer_json(e));
  j["verdict"] = verdict_json(decide_torus(s));
  if (bound) {
    const auto found = bounded_decomposition_search_parallel(s, *bound, jobs);
    j["search"] = {{"bound", *bound}, {"result", found ? decomposition_json(*found) : Json("none_found")}};
  }
  print(j);
  return kOk;
}

int cmd_farey(std::int64_t d, int jobs) {
  if (d < 1) throw DomainError("--d must be at least 1");
  const CliqueResult r = jobs == 1 ? max_packing(d) : max_packing_parallel(d, jobs);
  print(clique_json(r));
  return kOk;
}

int cmd_render(const std::string& file, const std::string& out) {
  const auto doc = read_scheme_file(file);
  const Verdict v = decide_torus(doc.scheme);
  if (!v.realizable()) {
    print(verdict_json(v));
    std::cerr << "error: scheme has no torus witness to render\n";
    return kNotRealizable;
  }
  for (const auto& w : render_svg(*v.witness, out)) std::cerr << "warning: " << w << '\n';
  print(Json{{"status", "torus"}, {"witness", system_json(*v.witness)}, {"svg", out}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Torus realizability of intersection schemes.\n"
      "Scheme files are JSON: {\"n\": N, \"entries\": [...]} with entries in column order\n"
      "m12; m13, m23; m14, m24, m34; ... Large values may be given as decimal strings."};
  app.require_subcommand(1);

  std::string file, out, p, q;
  std::optional<std::string> kappa;
  std::size_t orbits = 16;
  std::optional<int> bound;
  std::int64_t d = 1;
  int jobs = 0;

  auto* check = app.add_subcommand("check", "Decide torus realizability; exit 0 if realizable, 1 if not");
  check->add_option("FILE", file, "scheme document")->required();
  auto* solve = app.add_subcommand("solve", "Witnesses and allowed kappa classes");
  solve->add_option("FILE", file, "scheme document")->required();
  solve->add_option("--kappa", kappa, "build the witness for this kappa");
  solve->add_option("--orbits", orbits, "maximum number of orbit representatives")->capture_default_str();
  auto* toz = app.add_subcommand("toz", "toz report");
  toz->add_option("FILE", file, "scheme document")->required();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference decision (|m12| <= 10^6)");
  oracle->add_option("FILE", file, "scheme document")->required();
  auto* decompose = app.add_subcommand("decompose", "Genus-2 split of a 3-scheme");
  decompose->add_option("FILE", file, "scheme document")->required();
  auto* endemic = app.add_subcommand("endemic", "Scheme (q; pq, pq; pq, pq, p) and optional bounded search");
  endemic->add_option("--p", p, "odd prime")->required();
  endemic->add_option("--q", q, "odd prime distinct from p")->required();
  endemic->add_option("--search-bound", bound, "search decompositions with entries in [-B, B]");
  endemic->add_option("--jobs", jobs, "worker threads (0 = default)");
  auto* farey = app.add_subcommand("farey", "Largest set of classes with pairwise intersection in [1, d]");
  farey->add_option("--d", d, "intersection bound")->required();
  farey->add_option("--jobs", jobs, "worker threads (0 = default, 1 = serial)");
  auto* render = app.add_subcommand("render", "SVG of the canonical witness");
  render->add_option("FILE", file, "scheme document")->required();
  render->add_option("--out", out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*solve) return cmd_solve(file, kappa, orbits);
    if (*toz) return cmd_toz(file);
    if (*oracle) return cmd_oracle(file);
    if (*decompose) return cmd_decompose(file);
    if (*endemic) return cmd_endemic(p, q, bound, jobs);
    if (*farey) return cmd_farey(d, jobs);
    if (*render) return cmd_render(file, out);
  } catch (const InternalFault& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
