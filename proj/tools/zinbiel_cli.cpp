// Command-line front end: build catalog algebras, check the defining
// identity, compute invariants, verify the change-of-basis formulas, search
// for isomorphisms, and replay the nonexistence refutations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zinbiel/acceptance.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/constraints.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/invariants.hpp"
#include "zinbiel/transform.hpp"

namespace {

using namespace zinbiel;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
}

Rational parse_param_value(const std::string& kv, std::string& key) {
  auto eq = kv.find('=');
  if (eq == std::string::npos) throw ParseError("--param needs key=value, got \"" + kv + "\"");
  key = kv.substr(0, eq);
  return Rational::parse(kv.substr(eq + 1));
}

int cmd_check(const std::string& path, bool json) {
  Algebra a = algebra_from_json(read_input(path));
  auto witness = zinbiel_violation(a);
  bool nilpotent = true;
  std::string nil_msg;
  try {
    power_series(a);
  } catch (const NotNilpotentError& e) {
    nilpotent = false;
    nil_msg = e.what();
  }
  bool ok = !witness && nilpotent;
  if (json) {
    nlohmann::ordered_json j;
    j["op"] = "check";
    j["label"] = a.label();
    j["dim"] = a.dim();
    j["zinbiel"] = !witness;
    if (witness) j["witness"] = {witness->i, witness->j, witness->k};
    j["nilpotent"] = nilpotent;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra:   " << (a.label().empty() ? "(unlabeled)" : a.label()) << " dim "
              << a.dim() << "\n";
    if (witness)
      std::cout << "identity:  FAIL at basis triple (e" << witness->i << ",e" << witness->j
                << ",e" << witness->k << ")\n";
    else
      std::cout << "identity:  ok (all " << a.dim() * a.dim() * a.dim() << " basis triples)\n";
    std::cout << "nilpotent: " << (nilpotent ? "ok" : "FAIL " + nil_msg) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_invariants(const std::string& path, int trials, std::uint64_t seed) {
  Algebra a = algebra_from_json(read_input(path));
  Fingerprint f = fingerprint(a, trials, seed);
  std::cout << f.to_json() << "\n";
  return 0;
}

int cmd_catalog(const std::string& name, int dim, const std::vector<std::string>& params,
                const std::string& out_path) {
  CatalogEntry entry{name, dim, {}};
  for (const std::string& kv : params) {
    std::string key;
    Rational v = parse_param_value(kv, key);
    entry.params[key] = v;
  }
  BuildResult r = build_entry(entry);
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
  write_output(out_path, to_json(r.algebra));
  return 0;
}

int cmd_verify_formulas(int samples, std::uint64_t seed, bool json) {
  VerifyReport formulas = verify_change_formulas(samples, seed);
  VerifyReport nullity = verify_nullity_invariants(samples, seed);
  if (json) {
    std::cout << formulas.to_json() << nullity.to_json();
  } else {
    auto show = [](const VerifyReport& r) {
      std::cout << r.op << ": " << r.passes << "/" << r.samples << " exact matches, "
                << r.skipped << " degenerate draws skipped, " << r.failures.size()
                << " failures\n";
      for (const auto& f : r.failures) std::cout << "  counterexample: " << f.detail << "\n";
    };
    show(formulas);
    show(nullity);
  }
  return formulas.failures.empty() && nullity.failures.empty() ? 0 : 1;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, long budget,
            std::uint64_t seed, bool json) {
  Algebra a = algebra_from_json(read_input(a_path));
  Algebra b = algebra_from_json(read_input(b_path));
  SeparationResult r = separate_or_search(a, b, budget, seed);
  if (json) {
    std::cout << separation_to_json(a, b, r, budget, seed);
  } else {
    if (const auto* s = std::get_if<SeparatedBy>(&r))
      std::cout << "separated by " << s->invariant << "\n  " << s->detail << "\n";
    else if (std::holds_alternative<NoIsoFound>(r))
      std::cout << "no isomorphism found within budget " << budget << " (evidence, not proof)\n";
    else
      std::cout << "isomorphism found and verified by exact transport\n";
  }
  return 0;
}

int cmd_nonexistence(const std::string& token, int dim, bool json) {
  auto c = parse_nonexistence_case(token);
  if (!c) {
    std::cerr << "unknown case \"" << token
              << "\"; expected r1ge3, r1eq2, r2ge4, typeII or typeIII\n";
    return 2;
  }
  RefutationReport rep = refute_case(*c, dim);
  if (json) {
    std::cout << rep.to_json();
  } else {
    std::cout << "case " << rep.case_name << " at n=" << rep.dim << ": "
              << (rep.refuted ? "refuted" : "NOT refuted") << "\n";
    for (const PlacementReport& p : rep.placements) {
      std::cout << "  " << p.description << ": " << p.verdict << "\n";
      for (const EquationView& e : p.equations)
        std::cout << "    " << e.text << "   [from (e" << e.source.a << ",e" << e.source.b
                  << ",e" << e.source.c << "), e" << e.component << "-component]\n";
      std::cout << "    " << p.detail << "\n";
    }
  }
  return rep.refuted ? 0 : 1;
}

int cmd_suite(const std::vector<int>& ids, const std::string& dims, std::uint64_t seed,
              bool json) {
  AcceptanceOptions options;
  options.seed = seed;
  if (!dims.empty()) {
    auto dots = dims.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(dims);
    } else {
      lo = std::stoi(dims.substr(0, dots));
      hi = std::stoi(dims.substr(dots + 2));
    }
    if (lo < 8 || hi < lo) throw RangeError("suite dims must satisfy 8 <= lo <= hi");
    options.dims.clear();
    for (int n = lo; n <= hi; ++n) options.dims.push_back(n);
  }
  std::vector<CriterionResult> results = run_acceptance(ids, json ? nullptr : &std::cout, options);
  if (json) std::cout << acceptance_to_json(results);
  int passed = 0;
  for (const CriterionResult& r : results)
    if (r.passed) ++passed;
  if (!json)
    std::cout << passed << "/" << results.size() << " criteria passed (dims "
              << options.dims.front() << ".." << options.dims.back() << ", seed " << seed
              << ")\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for finite-dimensional Zinbiel algebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string check_path;
  auto* check = app.add_subcommand("check", "verify the identity and nilpotency of an algebra file");
  check->add_option("file", check_path, "algebra JSON file, - for stdin")->required();

  std::string inv_path;
  int inv_trials = 32;
  std::uint64_t inv_seed = 0;
  auto* inv = app.add_subcommand("invariants", "fingerprint of an algebra file as JSON");
  inv->add_option("file", inv_path, "algebra JSON file, - for stdin")->required();
  inv->add_option("--trials", inv_trials, "random vectors for the characteristic sequence");
  inv->add_option("--seed", inv_seed, "sampling seed");

  std::string cat_name, cat_out = "-";
  int cat_dim = 0;
  std::vector<std::string> cat_params;
  auto* cat = app.add_subcommand("catalog", "emit a catalog algebra as JSON");
  cat->add_option("name", cat_name, "entry name (NF, Zfam6, Zfam4, Z1..Z21) or 'list'")
      ->required();
  cat->add_option("--dim", cat_dim, "dimension");
  cat->add_option("--param", cat_params, "parameter assignment key=value (repeatable)");
  cat->add_option("-o,--output", cat_out, "output file, - for stdout");

  int vt_samples = 100;
  std::uint64_t vt_seed = 0;
  auto* vt = app.add_subcommand("verify-formulas",
                                "replay the change-of-basis formulas and nullity invariants");
  vt->add_option("--samples", vt_samples, "admissible samples per report");
  vt->add_option("--seed", vt_seed, "sampling seed");

  std::string iso_a, iso_b;
  long iso_budget = 10000;
  std::uint64_t iso_seed = 0;
  auto* iso = app.add_subcommand("iso", "separate two algebras or search for an isomorphism");
  iso->add_option("a", iso_a, "first algebra JSON file")->required();
  iso->add_option("b", iso_b, "second algebra JSON file")->required();
  iso->add_option("--budget", iso_budget, "random generator changes to try");
  iso->add_option("--seed", iso_seed, "search seed");

  std::string nx_case;
  int nx_dim = 0;
  auto* nx = app.add_subcommand("nonexistence", "replay a nonexistence refutation");
  nx->add_option("case", nx_case, "r1ge3 | r1eq2 | r2ge4 | typeII | typeIII")->required();
  nx->add_option("--dim", nx_dim, "dimension")->required();

  std::vector<int> suite_ids;
  std::string suite_dims;
  std::uint64_t suite_seed = 0;
  auto* suite = app.add_subcommand("suite", "run the acceptance checks");
  suite->add_option("--only", suite_ids, "criterion ids to run (default all)");
  suite->add_option("--dims", suite_dims, "dimension range lo..hi (default 8..12)");
  suite->add_option("--seed", suite_seed, "sampling seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, json);
    if (inv->parsed()) return cmd_invariants(inv_path, inv_trials, inv_seed);
    if (cat->parsed()) {
      if (cat_name == "list") {
        std::cout << manifest_to_json();
        return 0;
      }
      if (cat_dim <= 0) {
        std::cerr << "catalog: --dim is required\n";
        return 2;
      }
      return cmd_catalog(cat_name, cat_dim, cat_params, cat_out);
    }
    if (vt->parsed()) return cmd_verify_formulas(vt_samples, vt_seed, json);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, iso_budget, iso_seed, json);
    if (nx->parsed()) return cmd_nonexistence(nx_case, nx_dim, json);
    if (suite->parsed()) return cmd_suite(suite_ids, suite_dims, suite_seed, json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
