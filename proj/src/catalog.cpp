#include "zinbiel/catalog.hpp"

#include <sstream>

#include <json.hpp>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

void binomial_core(Algebra& a, int n, int top) {
  // e_i o e_j = C(i+j-1, j) e_{i+j} for 2 <= i+j <= top
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int s = i + j;
      if (s < 2 || s > top) continue;
      a.add_term(i, j, s, binomial(s - 1, j));
    }
}

std::string param_label(const std::vector<Rational>& ps) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i].str();
  os << ")";
  return os.str();
}

}  // namespace

Algebra build_null_filiform(int n) {
  if (n < 1) throw RangeError("null-filiform algebra needs dimension >= 1");
  Algebra a(n, "NF@n=" + std::to_string(n));
  binomial_core(a, n, n);
  return a;
}

Algebra build_family6(int n, const std::array<Rational, 6>& p) {
  if (n < 8) throw RangeError("six-parameter family needs dimension >= 8");
  Algebra a(n, "Z" + param_label({p.begin(), p.end()}) + "@n=" + std::to_string(n));
  binomial_core(a, n, n - 3);
  a.add_term(1, n - 2, n - 1, 1);
  a.add_term(n - 2, 1, n - 1, p[0]);
  a.add_term(n - 2, n - 2, n - 1, p[1]);
  a.add_term(n - 2, n, n - 1, p[2]);
  a.add_term(n, 1, n - 1, p[3]);
  a.add_term(n, n - 2, n - 1, p[4]);
  a.add_term(n, n, n - 1, p[5]);
  return a;
}

Algebra build_family4(int n, const std::array<Rational, 4>& p) {
  if (n < 8) throw RangeError("four-parameter family needs dimension >= 8");
  if (p[2].is_zero() && p[3].is_zero())
    throw ParameterDomainError("four-parameter family needs (gamma1, gamma2) != (0, 0)");
  Algebra a(n, "Z" + param_label({p.begin(), p.end()}) + "@n=" + std::to_string(n));
  binomial_core(a, n, n - 3);
  a.add_term(1, n - 2, n - 1, 1);
  a.add_term(n - 2, 1, n - 1, p[0]);
  a.add_term(n - 2, 1, n, p[2]);
  a.add_term(n - 2, n - 2, n - 1, p[1]);
  a.add_term(n - 2, n - 2, n, p[3]);
  return a;
}

Algebra build_z21(int n) {
  if (n < 8) throw RangeError("Z21 needs dimension >= 8");
  Algebra a(n, "Z_21@n=" + std::to_string(n));
  binomial_core(a, n, n - 3);
  a.add_term(1, n - 2, n - 1, 1);
  a.add_term(n - 2, 1, n - 1, -1);
  a.add_term(n - 2, n - 1, n, 1);
  return a;
}

namespace {

struct RepDef {
  const char* name;
  // a-tuple with one optional symbolic slot filled from the parameter
  std::array<Rational, 6> base;
  const char* param;      // nullptr when parameter-free
  int param_slot = -1;    // index receiving the raw parameter
};

// Parameter-free and one-parameter representatives of the six-parameter
// family.  Z9's a2 slot is derived, not raw (see build below).
const RepDef kFam6Reps[] = {
    {"Z1", {1, 0, 0, 0, 1, 0}, nullptr},
    {"Z2", {0, 0, 0, 0, 1, 0}, nullptr},
    {"Z3", {0, 1, 0, 1, 0, 0}, nullptr},
    {"Z4", {0, 0, 0, 1, 0, 0}, nullptr},
    {"Z5", {0, 1, 0, 0, 0, 0}, nullptr},
    {"Z6", {1, 1, 0, 0, 0, 0}, nullptr},
    {"Z7", {0, 0, 0, 0, 0, 0}, "lambda", 0},
    {"Z8", {0, 0, 1, 0, 0, 1}, "lambda", 1},
    {"Z10", {0, 0, 1, 0, 1, 1}, nullptr},
    {"Z11", {1, 0, 1, 0, 1, 1}, nullptr},
    {"Z12", {0, 0, 1, 1, 0, 0}, nullptr},
    {"Z13", {0, 0, 1, 0, 0, 0}, nullptr},
    {"Z14", {0, 1, 1, 0, 1, 1}, "lambda", 0},
    {"Z15", {0, 1, 1, -1, 1, 1}, nullptr},
    {"Z16", {1, 1, 1, 0, 1, 1}, nullptr},
};

const std::map<std::string, std::array<Rational, 4>> kFam4Reps = {
    {"Z17", {0, 0, 0, 1}},  // beta1 slot takes lambda
    {"Z18", {1, 0, 1, 1}},
    {"Z19", {0, 1, 1, 0}},
    {"Z20", {0, 0, 1, 0}},
};

Rational require_param(const CatalogEntry& e, const std::string& key) {
  auto it = e.params.find(key);
  if (it == e.params.end())
    throw ParameterDomainError(e.name + " needs parameter \"" + key + "\"");
  return it->second;
}

void require_no_params(const CatalogEntry& e) {
  if (!e.params.empty())
    throw ParameterDomainError(e.name + " takes no parameters");
}

std::string rep_label(const std::string& name, const std::vector<Rational>& ps, int n) {
  std::string tag = "Z_" + name.substr(1);
  if (!ps.empty()) tag += param_label(ps);
  return tag + "@n=" + std::to_string(n);
}

}  // namespace

BuildResult build_entry(const CatalogEntry& entry) {
  const std::string& name = entry.name;
  int n = entry.dim;
  BuildResult out{Algebra(0), {}};

  if (name == "NF") {
    require_no_params(entry);
    if (n < 3) throw RangeError("catalog entry NF needs dimension >= 3");
    out.algebra = build_null_filiform(n);
    return out;
  }
  if (name == "Zfam6") {
    std::array<Rational, 6> a;
    for (int i = 0; i < 6; ++i) a[i] = require_param(entry, "a" + std::to_string(i + 1));
    out.algebra = build_family6(n, a);
    return out;
  }
  if (name == "Zfam4") {
    std::array<Rational, 4> p{require_param(entry, "beta1"), require_param(entry, "beta2"),
                              require_param(entry, "gamma1"), require_param(entry, "gamma2")};
    out.algebra = build_family4(n, p);
    return out;
  }
  if (name == "Z21") {
    require_no_params(entry);
    out.algebra = build_z21(n);
    return out;
  }
  if (name == "Z9") {
    Rational alpha = require_param(entry, "alpha");
    if (alpha.is_zero() || alpha == Rational(1))
      throw ParameterDomainError("Z9 needs alpha outside {0, 1}");
    Rational d = alpha - Rational(1);
    std::array<Rational, 6> a{alpha, -alpha / (d * d), 1, 0, 0, 1};
    out.algebra = build_family6(n, a);
    out.algebra.set_label(rep_label("Z9", {alpha}, n));
    return out;
  }
  for (const RepDef& def : kFam6Reps) {
    if (name != def.name) continue;
    std::array<Rational, 6> a = def.base;
    std::vector<Rational> shown;
    if (def.param) {
      Rational v = require_param(entry, def.param);
      if (name == "Z8" && v.is_zero()) throw ParameterDomainError("Z8 needs lambda != 0");
      if (name == "Z14" && v == Rational(1))
        out.warnings.push_back("Z14 with lambda = 1 coincides with Z16");
      a[def.param_slot] = v;
      shown.push_back(v);
    } else {
      require_no_params(entry);
    }
    out.algebra = build_family6(n, a);
    out.algebra.set_label(rep_label(name, shown, n));
    return out;
  }
  if (auto it = kFam4Reps.find(name); it != kFam4Reps.end()) {
    std::array<Rational, 4> p = it->second;
    std::vector<Rational> shown;
    if (name == "Z17") {
      Rational v = require_param(entry, "lambda");
      p[0] = v;
      shown.push_back(v);
    } else {
      require_no_params(entry);
    }
    out.algebra = build_family4(n, p);
    out.algebra.set_label(rep_label(name, shown, n));
    return out;
  }
  throw ParameterDomainError("unknown catalog entry \"" + name + "\"");
}

const std::vector<CatalogEntryInfo>& catalog_manifest() {
  static const std::vector<CatalogEntryInfo> kManifest = [] {
    std::vector<CatalogEntryInfo> m;
    m.push_back({"NF", "family", 3, {}, "null-filiform algebra, nilindex n"});
    m.push_back({"Zfam6",
                 "family",
                 8,
                 {{"a1", "any rational"},
                  {"a2", "any rational"},
                  {"a3", "any rational"},
                  {"a4", "any rational"},
                  {"a5", "any rational"},
                  {"a6", "any rational"}},
                 "naturally graded family, generators e1, e(n-2), en in layer 1"});
    m.push_back({"Zfam4",
                 "family",
                 8,
                 {{"beta1", "any rational"},
                  {"beta2", "any rational"},
                  {"gamma1", "(gamma1, gamma2) != (0, 0)"},
                  {"gamma2", "(gamma1, gamma2) != (0, 0)"}},
                 "naturally graded family, e(n-2) in layer 1, en in layer 2"});
    auto rep = [&m](const std::string& name, std::vector<ParamSpec> ps, std::string desc) {
      m.push_back({name, "representative", 8, std::move(ps), std::move(desc)});
    };
    const char* fam6 = "six-parameter family representative";
    rep("Z1", {}, std::string(fam6) + " (1,0,0,0,1,0)");
    rep("Z2", {}, std::string(fam6) + " (0,0,0,0,1,0)");
    rep("Z3", {}, std::string(fam6) + " (0,1,0,1,0,0)");
    rep("Z4", {}, std::string(fam6) + " (0,0,0,1,0,0)");
    rep("Z5", {}, std::string(fam6) + " (0,1,0,0,0,0)");
    rep("Z6", {}, std::string(fam6) + " (1,1,0,0,0,0)");
    rep("Z7", {{"lambda", "any rational"}}, std::string(fam6) + " (lambda,0,0,0,0,0)");
    rep("Z8", {{"lambda", "lambda != 0"}}, std::string(fam6) + " (0,lambda,1,0,0,1)");
    rep("Z9", {{"alpha", "alpha outside {0, 1}"}},
        std::string(fam6) + " (alpha,-alpha/(alpha-1)^2,1,0,0,1)");
    rep("Z10", {}, std::string(fam6) + " (0,0,1,0,1,1)");
    rep("Z11", {}, std::string(fam6) + " (1,0,1,0,1,1)");
    rep("Z12", {}, std::string(fam6) + " (0,0,1,1,0,0)");
    rep("Z13", {}, std::string(fam6) + " (0,0,1,0,0,0)");
    rep("Z14", {{"lambda", "any rational; lambda = 1 flagged (coincides with Z16)"}},
        std::string(fam6) + " (lambda,1,1,0,1,1)");
    rep("Z15", {}, std::string(fam6) + " (0,1,1,-1,1,1)");
    rep("Z16", {}, std::string(fam6) + " (1,1,1,0,1,1)");
    const char* fam4 = "four-parameter family representative";
    rep("Z17", {{"lambda", "any rational"}}, std::string(fam4) + " (lambda,0,0,1)");
    rep("Z18", {}, std::string(fam4) + " (1,0,1,1)");
    rep("Z19", {}, std::string(fam4) + " (0,1,1,0)");
    rep("Z20", {}, std::string(fam4) + " (0,0,1,0)");
    rep("Z21", {}, "rigid algebra, e(n-2) in layer 1, en in layer 3");
    return m;
  }();
  return kManifest;
}

std::string manifest_to_json() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CatalogEntryInfo& e : catalog_manifest()) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["kind"] = e.kind;
    je["min_dim"] = e.min_dim;
    auto params = nlohmann::ordered_json::array();
    for (const ParamSpec& p : e.params) params.push_back({{"name", p.name}, {"domain", p.domain}});
    je["params"] = std::move(params);
    je["description"] = e.description;
    out.push_back(std::move(je));
  }
  return out.dump(2) + "\n";
}

}  // namespace zinbiel
