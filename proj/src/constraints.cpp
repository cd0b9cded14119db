#include "zinbiel/constraints.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

Poly normalize_sign(Poly p) {
  if (p.is_zero()) return p;
  if (p.terms().begin()->second.sign() < 0) return -p;
  return p;
}

std::string triple_str(const Triple& t) {
  std::ostringstream os;
  os << (t.rule == Rule::Zinbiel ? "Z" : "S") << "(e" << t.a << ",e" << t.b << ",e" << t.c << ")";
  return os.str();
}

}  // namespace

GradedTemplate::GradedTemplate(int dim, std::vector<int> layers)
    : dim_(dim), layers_(std::move(layers)), table_(dim * dim) {
  if (static_cast<int>(layers_.size()) != dim)
    throw DimensionMismatch("layer assignment length != dimension");
}

void GradedTemplate::check_layer_rule(int i, int j, const SymVec& v) const {
  int want = layer(i) + layer(j);
  for (int k = 1; k <= dim_; ++k)
    if (!v[k - 1].is_zero() && layer(k) != want) {
      std::ostringstream os;
      os << "product e" << i << " o e" << j << " has a component on e" << k
         << " outside layer " << want;
      throw ParseError(os.str());
    }
}

void GradedTemplate::set_known(int i, int j, const std::vector<std::pair<int, Rational>>& comps) {
  SymVec v(dim_);
  for (const auto& [k, c] : comps) v[k - 1] = Poly(c);
  table_[(i - 1) * dim_ + (j - 1)] = std::move(v);
}

void GradedTemplate::declare_slot(int i, int j, const std::map<int, std::string>& names) {
  SymVec v(dim_);
  int want = layer(i) + layer(j);
  for (int k = 1; k <= dim_; ++k) {
    if (layer(k) != want) continue;
    auto it = names.find(k);
    std::string name = it != names.end()
                           ? it->second
                           : "u" + std::to_string(i) + "_" + std::to_string(j) + "_e" +
                                 std::to_string(k);
    v[k - 1] = Poly::symbol(symbols_.intern(name));
  }
  table_[(i - 1) * dim_ + (j - 1)] = std::move(v);
}

void GradedTemplate::saturate() {
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j)
      if (!resolved(i, j)) declare_slot(i, j);
}

bool GradedTemplate::resolved(int i, int j) const {
  return table_[(i - 1) * dim_ + (j - 1)].has_value();
}

const SymVec& GradedTemplate::product(int i, int j) const {
  const auto& e = table_[(i - 1) * dim_ + (j - 1)];
  if (!e) throw ParseError("product e" + std::to_string(i) + " o e" + std::to_string(j) +
                           " is unresolved");
  return *e;
}

GradedTemplate::Expansion GradedTemplate::expand(const Triple& t) const {
  Expansion ex;
  ex.value.assign(dim_, Poly());
  // outer multiplication of a resolved value by e_c on the right / e_a on
  // the left; unresolved factors are collected symbolically
  auto mul_right = [&](const SymVec& v, int c, int sign) {
    for (int k = 1; k <= dim_; ++k) {
      if (v[k - 1].is_zero()) continue;
      Poly coef = sign > 0 ? v[k - 1] : -v[k - 1];
      if (resolved(k, c)) {
        const SymVec& w = product(k, c);
        for (int m = 0; m < dim_; ++m)
          if (!w[m].is_zero()) ex.value[m] += coef * w[m];
      } else {
        ex.unresolved[{k, c}] += coef;
      }
    }
  };
  auto mul_left = [&](int a, const SymVec& v, int sign) {
    for (int k = 1; k <= dim_; ++k) {
      if (v[k - 1].is_zero()) continue;
      Poly coef = sign > 0 ? v[k - 1] : -v[k - 1];
      if (resolved(a, k)) {
        const SymVec& w = product(a, k);
        for (int m = 0; m < dim_; ++m)
          if (!w[m].is_zero()) ex.value[m] += coef * w[m];
      } else {
        ex.unresolved[{a, k}] += coef;
      }
    }
  };
  mul_right(product(t.a, t.b), t.c, +1);
  if (t.rule == Rule::Zinbiel) {
    mul_left(t.a, product(t.b, t.c), -1);
    mul_left(t.a, product(t.c, t.b), -1);
  } else {
    mul_right(product(t.a, t.c), t.b, -1);
  }
  for (auto it = ex.unresolved.begin(); it != ex.unresolved.end();)
    it = it->second.is_zero() ? ex.unresolved.erase(it) : std::next(it);
  return ex;
}

std::pair<int, int> GradedTemplate::resolve(const Triple& t) {
  Expansion ex = expand(t);
  if (ex.unresolved.size() != 1)
    throw ParseError("resolution step " + triple_str(t) + " touches " +
                     std::to_string(ex.unresolved.size()) + " unresolved products");
  auto [key, coef] = *ex.unresolved.begin();
  if (!coef.is_constant() || coef.constant_value().is_zero())
    throw ParseError("resolution step " + triple_str(t) + " has a non-constant pivot");
  Rational scale = -inverse(coef.constant_value());
  SymVec v(dim_);
  for (int m = 0; m < dim_; ++m) v[m] = ex.value[m].scaled(scale);
  check_layer_rule(key.first, key.second, v);
  table_[(key.first - 1) * dim_ + (key.second - 1)] = std::move(v);
  return key;
}

std::vector<Equation> GradedTemplate::equations_for(const Triple& t) const {
  Expansion ex = expand(t);
  if (!ex.unresolved.empty())
    throw ParseError("equation step " + triple_str(t) + " meets an unresolved product");
  std::vector<Equation> out;
  for (int k = 1; k <= dim_; ++k)
    if (!ex.value[k - 1].is_zero())
      out.push_back(Equation{normalize_sign(ex.value[k - 1]), t, k});
  return out;
}

void GradedTemplate::substitute(const std::map<int, Rational>& assignment) {
  for (auto& entry : table_) {
    if (!entry) continue;
    for (Poly& p : *entry) p = p.substitute(assignment);
  }
}

GradedTemplate::SpanBound GradedTemplate::product_span_upper_bound(int la, int lb) const {
  SpanBound out{Subspace(dim_), {}};
  std::vector<Vec> gens;
  for (int i = 1; i <= dim_; ++i) {
    if (layer(i) != la) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (layer(j) != lb) continue;
      std::ostringstream note;
      note << "e" << i << " o e" << j << " = ";
      if (!resolved(i, j)) {
        // every permitted direction may occur
        for (int k = 1; k <= dim_; ++k)
          if (layer(k) == la + lb) {
            Vec dir(dim_, Rational(0));
            dir[k - 1] = Rational(1);
            gens.push_back(std::move(dir));
          }
        note << "(unresolved)";
      } else {
        const SymVec& v = product(i, j);
        Vec constant(dim_, Rational(0));
        bool any = false;
        for (int k = 1; k <= dim_; ++k) {
          const Poly& p = v[k - 1];
          if (p.is_zero()) continue;
          any = true;
          if (p.is_constant()) {
            constant[k - 1] = p.constant_value();
          } else {
            Vec dir(dim_, Rational(0));
            dir[k - 1] = Rational(1);
            gens.push_back(std::move(dir));
          }
        }
        if (!is_zero_vec(constant)) gens.push_back(constant);
        if (!any) note << "0";
        else {
          bool first = true;
          for (int k = 1; k <= dim_; ++k)
            if (!v[k - 1].is_zero()) {
              note << (first ? "" : " + ") << "(" << v[k - 1].str(symbols_) << ")*e" << k;
              first = false;
            }
        }
      }
      out.notes.push_back(note.str());
    }
  }
  out.span = Subspace::span(dim_, gens);
  return out;
}

ConstraintSystem generate_constraints(const GradedTemplate& t, const std::vector<Triple>& triples) {
  ConstraintSystem cs;
  cs.symbols = t.symbols();
  for (const Triple& tr : triples)
    for (Equation& e : t.equations_for(tr)) cs.equations.push_back(std::move(e));
  return cs;
}

namespace {

// Linear stratum as an exact system over the symbols that appear.
struct LinearSystem {
  std::vector<int> ids;  // column order
  Matrix m{0, 0};
  Vec rhs;
  std::vector<int> rows;  // equation indices used
};

LinearSystem linear_stratum(const std::vector<Equation>& eqs) {
  LinearSystem ls;
  std::map<int, int> col;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    if (!eqs[e].poly.is_linear()) continue;
    ls.rows.push_back(static_cast<int>(e));
    for (const auto& [m, c] : eqs[e].poly.terms())
      if (m.size() == 1 && !col.count(m[0])) {
        col[m[0]] = static_cast<int>(ls.ids.size());
        ls.ids.push_back(m[0]);
      }
  }
  ls.m = Matrix(static_cast<int>(ls.rows.size()), static_cast<int>(ls.ids.size()));
  ls.rhs.assign(ls.rows.size(), Rational(0));
  for (std::size_t r = 0; r < ls.rows.size(); ++r) {
    const Poly& p = eqs[ls.rows[r]].poly;
    for (const auto& [m, c] : p.terms()) {
      if (m.empty())
        ls.rhs[r] = -c;
      else
        ls.m.at(static_cast<int>(r), col[m[0]]) = c;
    }
  }
  return ls;
}

bool linear_consistent(const std::vector<Equation>& eqs, const std::vector<bool>& active) {
  std::vector<Equation> sub;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (active[i]) sub.push_back(eqs[i]);
  LinearSystem ls = linear_stratum(sub);
  return solve_linear(ls.m, ls.rhs).has_value();
}

}  // namespace

RefutationOutcome refute_linear(const ConstraintSystem& cs) {
  std::vector<Equation> lin;
  for (const Equation& e : cs.equations)
    if (e.poly.is_linear()) lin.push_back(e);
  std::vector<bool> active(lin.size(), true);
  if (linear_consistent(lin, active)) return Undetermined{};
  // Greedy minimal witness: drop each equation that keeps the system
  // inconsistent, in fixed order.
  for (std::size_t i = 0; i < lin.size(); ++i) {
    active[i] = false;
    if (linear_consistent(lin, active)) active[i] = true;
  }
  LinearRefutation out;
  for (std::size_t i = 0; i < lin.size(); ++i)
    if (active[i]) out.witness.push_back(lin[i]);
  return out;
}

Propagation propagate_linear(std::vector<Equation>& eqs, GradedTemplate* t) {
  Propagation out;
  for (;;) {
    LinearSystem ls = linear_stratum(eqs);
    RrefResult rr = [&] {
      Matrix aug(ls.m.rows(), ls.m.cols() + 1);
      for (int r = 0; r < ls.m.rows(); ++r) {
        for (int c = 0; c < ls.m.cols(); ++c) aug.at(r, c) = ls.m.at(r, c);
        aug.at(r, ls.m.cols()) = ls.rhs[r];
      }
      return rref(aug);
    }();
    std::map<int, Rational> forced;
    for (int r = 0; r < rr.rank; ++r) {
      int pc = rr.pivot_cols[r];
      if (pc == ls.m.cols()) {
        out.inconsistent = true;
        return out;
      }
      bool pure = true;
      for (int c = 0; c < ls.m.cols(); ++c)
        if (c != pc && !rr.matrix.at(r, c).is_zero()) {
          pure = false;
          break;
        }
      if (pure) {
        int id = ls.ids[pc];
        if (!out.forced.count(id)) forced[id] = rr.matrix.at(r, ls.m.cols());
      }
    }
    if (forced.empty()) return out;
    for (auto& [id, v] : forced) out.forced[id] = v;
    for (Equation& e : eqs) e.poly = normalize_sign(e.poly.substitute(forced));
    if (t) t->substitute(forced);
  }
}

// ---------------------------------------------------------------------------
// Case templates and refutation scripts
// ---------------------------------------------------------------------------

namespace {

// Left-multiplication chain with blocks ordered J_{n-3}, J_2, J_1:
// e_1 o e_i = e_{i+1} (i <= n-4), e_1 o e_{n-3} = 0, e_1 o e_{n-2} = e_{n-1},
// e_1 o e_{n-1} = e_1 o e_n = 0.
GradedTemplate chain_first_template(int n, int r1, int r2) {
  std::vector<int> layers(n);
  for (int i = 1; i <= n - 3; ++i) layers[i - 1] = i;
  layers[n - 3] = r1;
  layers[n - 2] = r1 + 1;
  layers[n - 1] = r2;
  GradedTemplate t(n, std::move(layers));
  for (int i = 1; i <= n - 4; ++i) t.set_known(1, i, {{i + 1, Rational(1)}});
  t.set_known(1, n - 3, {});
  t.set_known(1, n - 2, {{n - 1, Rational(1)}});
  t.set_known(1, n - 1, {});
  t.set_known(1, n, {});
  return t;
}

// The chain part of the table is forced to the binomial products by the
// identity alone; derive it bottom-up so later steps can rely on it.
void derive_chain_core(GradedTemplate& t) {
  int top = t.dim() - 3;
  for (int s = 3; s <= 2 * top; ++s)
    for (int i = std::max(2, s - top); i <= std::min(top, s - 1); ++i)
      t.resolve({Rule::Zinbiel, 1, i - 1, s - i});
}

std::vector<Equation> collect_equations(const GradedTemplate& t, const std::vector<Triple>& ts) {
  std::vector<Equation> out;
  for (const Triple& tr : ts)
    for (Equation& e : t.equations_for(tr)) out.push_back(std::move(e));
  return out;
}

EquationView view_of(const Equation& e, const SymbolTable& symbols) {
  EquationView v;
  v.text = e.poly.str(symbols) + " = 0";
  v.source = e.source;
  v.component = e.component;
  Rational c = e.poly.constant_term();
  if (!c.is_zero()) v.coeffs["const"] = c.str();
  for (const auto& [m, coef] : e.poly.terms())
    if (m.size() == 1) v.coeffs[symbols.name(m[0])] = coef.str();
  return v;
}

PlacementReport report_inconsistent(const GradedTemplate& t, ConstraintSystem& cs,
                                    const std::string& description) {
  PlacementReport rep;
  rep.description = description;
  for (const Equation& e : cs.equations) rep.equations.push_back(view_of(e, cs.symbols));
  RefutationOutcome out = refute_linear(cs);
  if (const auto* refut = std::get_if<LinearRefutation>(&out)) {
    rep.verdict = "inconsistent-linear-system";
    rep.refuted = true;
    for (const Equation& e : refut->witness)
      rep.witness_triples.push_back({e.source.a, e.source.b, e.source.c});
    std::ostringstream os;
    os << "no assignment satisfies:";
    for (const Equation& e : refut->witness) os << " [" << e.poly.str(cs.symbols) << " = 0]";
    rep.detail = os.str();
  } else {
    rep.verdict = "undetermined";
    rep.refuted = false;
    rep.detail = "linear stratum is consistent";
  }
  (void)t;
  return rep;
}

PlacementReport report_unreachable(const GradedTemplate& t, int la, int lb, int target,
                                   const std::vector<Triple>& derivations,
                                   const std::string& description) {
  PlacementReport rep;
  rep.description = description;
  auto bound = t.product_span_upper_bound(la, lb);
  Vec tv(t.dim(), Rational(0));
  tv[target - 1] = Rational(1);
  bool unreachable = !bound.span.contains(tv);
  rep.verdict = unreachable ? "layer-unreachable" : "target-reachable";
  rep.refuted = unreachable;
  for (const Triple& tr : derivations) rep.witness_triples.push_back({tr.a, tr.b, tr.c});
  std::ostringstream os;
  os << "layer " << la + lb << " products span dimension " << bound.span.dim() << "; e" << target
     << (unreachable ? " is not reachable:" : " is reachable:");
  for (const std::string& s : bound.notes) os << " [" << s << "]";
  rep.detail = os.str();
  return rep;
}

PlacementReport refute_r1ge3_placement(int n, int r1) {
  GradedTemplate t = chain_first_template(n, r1, 1);
  derive_chain_core(t);
  t.declare_slot(n, 1, {{2, "alpha1"}});
  t.declare_slot(n, n, {{2, "alpha2"}});
  std::vector<Triple> kill{{Rule::Zinbiel, 1, n, 1}, {Rule::Zinbiel, 1, n, n}};
  auto eqs = collect_equations(t, kill);
  Propagation prop = propagate_linear(eqs, &t);
  std::vector<Triple> derivations = kill;
  for (int i = 2; i <= n - 3; ++i) {
    derivations.push_back({Rule::Zinbiel, n, 1, i - 1});
    t.resolve(derivations.back());
    derivations.push_back({Rule::Zinbiel, 1, i - 1, n});
    t.resolve(derivations.back());
  }
  std::ostringstream desc;
  desc << "e" << n - 2 << " in layer r1=" << r1 << ", e" << n << " in layer 1";
  PlacementReport rep = report_unreachable(t, 1, r1 - 1, n - 2, derivations, desc.str());
  if (prop.inconsistent) rep.detail += " (propagation already inconsistent)";
  return rep;
}

PlacementReport refute_r1eq2_placement(int n) {
  GradedTemplate t = chain_first_template(n, 2, 1);
  derive_chain_core(t);
  t.declare_slot(n, 1, {{2, "alpha1"}, {n - 2, "beta1"}});
  t.declare_slot(n, n, {{2, "alpha2"}, {n - 2, "beta2"}});
  std::vector<Triple> kill{{Rule::Zinbiel, 1, n, 1}, {Rule::Zinbiel, 1, n, n}};
  auto eqs = collect_equations(t, kill);
  propagate_linear(eqs, &t);
  std::vector<Triple> derivations = kill;
  for (int i = 2; i <= n - 3; ++i) {
    derivations.push_back({Rule::Zinbiel, n, 1, i - 1});
    t.resolve(derivations.back());
    derivations.push_back({Rule::Zinbiel, 1, i - 1, n});
    t.resolve(derivations.back());
  }
  std::ostringstream desc;
  desc << "e" << n - 2 << " in layer 2, e" << n << " in layer 1";
  return report_unreachable(t, 1, 1, n - 2, derivations, desc.str());
}

PlacementReport refute_r2ge4_placement(int n, int r2) {
  GradedTemplate t = chain_first_template(n, 1, r2);
  derive_chain_core(t);
  t.declare_slot(n - 2, 1, {{2, "alpha1"}, {n - 1, "beta1"}});
  t.declare_slot(n - 2, n - 2, {{2, "alpha2"}, {n - 1, "beta2"}});
  std::vector<Triple> derivations;
  derivations.push_back({Rule::Zinbiel, 1, n - 2, 1});
  t.resolve(derivations.back());  // e_{n-1} o e_1 = alpha1 e_3
  std::vector<Triple> kill{{Rule::Zinbiel, 1, n - 1, 1}};
  auto eqs = collect_equations(t, kill);
  propagate_linear(eqs, &t);  // alpha1 = 0
  derivations.insert(derivations.end(), kill.begin(), kill.end());
  for (int i = 2; i <= n - 3; ++i) {
    for (Triple tr : {Triple{Rule::Zinbiel, n - 1, 1, i - 1}, Triple{Rule::Zinbiel, 1, i - 1, n - 1},
                      Triple{Rule::Zinbiel, n - 2, 1, i - 1}, Triple{Rule::Zinbiel, 1, i - 1, n - 2}}) {
      derivations.push_back(tr);
      t.resolve(tr);
    }
  }
  std::ostringstream desc;
  desc << "e" << n - 2 << " in layer 1, e" << n << " in layer r2=" << r2;
  return report_unreachable(t, 1, r2 - 1, n, derivations, desc.str());
}

PlacementReport refute_type2_placement(int n, int r) {
  std::vector<int> layers(n);
  layers[0] = 1;
  layers[1] = 2;
  layers[2] = 1;
  layers[3] = 2;
  for (int i = 5; i <= n - 1; ++i) layers[i - 1] = i - 2;
  layers[n - 1] = r;
  GradedTemplate t(n, std::move(layers));
  t.set_known(1, 1, {{2, Rational(1)}});
  t.set_known(1, 2, {});
  for (int i = 3; i <= n - 2; ++i) t.set_known(1, i, {{i + 1, Rational(1)}});
  t.set_known(1, n - 1, {});
  t.set_known(1, n, {});
  t.declare_slot(3, 1, {{2, "alpha1"}, {4, "beta1"}});
  t.declare_slot(3, 2, {{5, "beta2"}});
  for (Triple tr : {Triple{Rule::Zinbiel, 1, 1, 1}, Triple{Rule::Zinbiel, 1, 1, 2},
                    Triple{Rule::Zinbiel, 1, 3, 1}, Triple{Rule::Zinbiel, 1, 1, 3},
                    Triple{Rule::Zinbiel, 1, 1, 4}, Triple{Rule::Zinbiel, 1, 3, 2},
                    Triple{Rule::Zinbiel, 1, 4, 1}, Triple{Rule::Zinbiel, 1, 1, 5},
                    Triple{Rule::Zinbiel, 1, 4, 2}})
    t.resolve(tr);
  ConstraintSystem cs = generate_constraints(
      t, {{Rule::Zinbiel, 1, 2, 3}, {Rule::Zinbiel, 1, 2, 4}, {Rule::Zinbiel, 1, 2, 5}});
  std::ostringstream desc;
  desc << "e" << n << " in layer r=" << r;
  return report_inconsistent(t, cs, desc.str());
}

PlacementReport refute_type3_placement(int n, int s) {
  std::vector<int> layers(n);
  layers[0] = 1;
  layers[1] = 1;
  for (int i = 3; i <= n - 2; ++i) layers[i - 1] = i - 1;
  layers[n - 2] = s;
  layers[n - 1] = s + 1;
  GradedTemplate t(n, std::move(layers));
  t.set_known(1, 1, {});
  for (int i = 2; i <= n - 3; ++i) t.set_known(1, i, {{i + 1, Rational(1)}});
  t.set_known(1, n - 2, {});
  t.set_known(1, n - 1, {{n, Rational(1)}});
  t.set_known(1, n, {});
  t.declare_slot(3, 1, {{4, "sigma"}});
  ConstraintSystem cs = generate_constraints(
      t, {{Rule::RightSymmetric, 1, 2, 1}, {Rule::Zinbiel, 1, 1, 3}});
  std::ostringstream desc;
  desc << "J2 head e" << n - 1 << " in layer s=" << s;
  return report_inconsistent(t, cs, desc.str());
}

}  // namespace

GradedTemplate family6_template(int n) {
  GradedTemplate t = chain_first_template(n, 1, 1);
  derive_chain_core(t);
  t.declare_slot(n - 2, 1, {{2, "alpha1"}, {n - 1, "alpha2"}});
  t.declare_slot(n - 2, n - 2, {{2, "alpha3"}, {n - 1, "alpha4"}});
  t.declare_slot(n - 2, n, {{2, "alpha5"}, {n - 1, "alpha6"}});
  t.declare_slot(n, 1, {{2, "beta1"}, {n - 1, "beta2"}});
  t.declare_slot(n, n - 2, {{2, "beta3"}, {n - 1, "beta4"}});
  t.declare_slot(n, n, {{2, "beta5"}, {n - 1, "beta6"}});
  t.declare_slot(n - 2, 2, {{3, "gamma1"}});
  t.declare_slot(n - 2, n - 1, {{3, "gamma2"}});
  t.declare_slot(n, 2, {{3, "gamma3"}});
  t.declare_slot(n, n - 1, {{3, "gamma4"}});
  t.saturate();
  return t;
}

std::vector<Triple> family6_identity_triples(int n) {
  std::vector<Triple> ts;
  auto z = [&ts](int a, int b, int c) { ts.push_back({Rule::Zinbiel, a, b, c}); };
  z(1, n, 1);
  z(1, n, n);
  z(1, n - 2, 1);
  z(1, n - 1, 1);
  z(1, 1, n - 2);
  z(n - 2, 1, 1);
  z(n - 2, n - 1, 1);
  z(1, 1, n);
  z(1, n, 2);
  z(n, n - 1, 1);
  z(1, n - 2, n - 2);
  z(1, n - 1, n - 2);
  z(1, n - 2, n);
  z(1, n, n - 1);
  z(1, 1, n - 1);
  z(1, n - 2, 2);
  z(n - 2, n, 1);
  z(n - 2, n - 2, 1);
  return ts;
}

GradedTemplate family4_template(int n) {
  GradedTemplate t = chain_first_template(n, 1, 2);
  derive_chain_core(t);
  t.declare_slot(n - 2, 1, {{2, "alpha1"}, {n - 1, "beta1"}, {n, "gamma1"}});
  t.declare_slot(n - 2, n - 2, {{2, "alpha2"}, {n - 1, "beta2"}, {n, "gamma2"}});
  t.declare_slot(n - 2, n - 1, {{3, "delta1"}});
  t.declare_slot(n - 2, n, {{3, "delta2"}});
  t.declare_slot(n, 1, {{3, "delta3"}});
  t.declare_slot(n, n - 2, {{3, "delta4"}});
  t.declare_slot(n, n - 1, {{4, "delta5"}});
  t.declare_slot(n, n, {{4, "delta6"}});
  t.saturate();
  return t;
}

std::vector<Triple> family4_identity_triples(int n) {
  std::vector<Triple> ts;
  auto z = [&ts](int a, int b, int c) { ts.push_back({Rule::Zinbiel, a, b, c}); };
  z(1, n - 2, 1);
  z(1, n - 1, 1);
  z(1, 1, n - 2);
  z(n - 2, 1, 1);
  z(n - 2, n - 1, 1);
  z(n - 2, n - 2, 1);
  z(1, n - 2, n - 2);
  z(1, n, 1);
  z(n - 2, n, 1);
  z(1, n, n - 2);
  z(1, n - 2, n - 1);
  z(1, n - 2, n);
  z(n, n - 1, 1);
  z(1, n, n);
  return ts;
}

std::optional<NonexistenceCase> parse_nonexistence_case(const std::string& token) {
  if (token == "r1ge3") return NonexistenceCase::TypeI_R1Ge3;
  if (token == "r1eq2") return NonexistenceCase::TypeI_R1Eq2;
  if (token == "r2ge4") return NonexistenceCase::TypeI_R2Ge4;
  if (token == "typeII" || token == "II") return NonexistenceCase::TypeII;
  if (token == "typeIII" || token == "III") return NonexistenceCase::TypeIII;
  return std::nullopt;
}

std::string nonexistence_case_name(NonexistenceCase c) {
  switch (c) {
    case NonexistenceCase::TypeI_R1Ge3:
      return "r1ge3";
    case NonexistenceCase::TypeI_R1Eq2:
      return "r1eq2";
    case NonexistenceCase::TypeI_R2Ge4:
      return "r2ge4";
    case NonexistenceCase::TypeII:
      return "typeII";
    case NonexistenceCase::TypeIII:
      return "typeIII";
  }
  return "?";
}

RefutationReport refute_case(NonexistenceCase c, int n) {
  RefutationReport rep;
  rep.case_name = nonexistence_case_name(c);
  rep.dim = n;
  switch (c) {
    case NonexistenceCase::TypeI_R1Ge3:
      if (n < 7) throw RangeError("case r1ge3 needs dimension >= 7");
      for (int r1 = 3; r1 <= n - 4; ++r1) rep.placements.push_back(refute_r1ge3_placement(n, r1));
      break;
    case NonexistenceCase::TypeI_R1Eq2:
      if (n < 8) throw RangeError("case r1eq2 needs dimension >= 8");
      rep.placements.push_back(refute_r1eq2_placement(n));
      break;
    case NonexistenceCase::TypeI_R2Ge4:
      if (n < 8) throw RangeError("case r2ge4 needs dimension >= 8");
      for (int r2 = 4; r2 <= n - 3; ++r2) rep.placements.push_back(refute_r2ge4_placement(n, r2));
      break;
    case NonexistenceCase::TypeII:
      if (n < 9) throw RangeError("case typeII needs dimension >= 9");
      for (int r = 1; r <= n - 3; ++r) rep.placements.push_back(refute_type2_placement(n, r));
      break;
    case NonexistenceCase::TypeIII:
      if (n < 7) throw RangeError("case typeIII needs dimension >= 7");
      for (int s = 1; s <= n - 4; ++s) rep.placements.push_back(refute_type3_placement(n, s));
      break;
  }
  rep.refuted = !rep.placements.empty();
  for (const PlacementReport& p : rep.placements) rep.refuted = rep.refuted && p.refuted;
  return rep;
}

std::string RefutationReport::to_json() const {
  nlohmann::ordered_json j;
  j["case"] = case_name;
  j["n"] = dim;
  auto arr = nlohmann::ordered_json::array();
  for (const PlacementReport& p : placements) {
    nlohmann::ordered_json jp;
    jp["placement"] = p.description;
    jp["verdict"] = p.verdict;
    jp["refuted"] = p.refuted;
    auto eqs = nlohmann::ordered_json::array();
    for (const EquationView& e : p.equations) {
      nlohmann::ordered_json je;
      je["text"] = e.text;
      je["triple"] = {e.source.a, e.source.b, e.source.c};
      je["rule"] = e.source.rule == Rule::Zinbiel ? "zinbiel" : "right-symmetric";
      je["component"] = e.component;
      je["coeffs"] = e.coeffs;
      eqs.push_back(std::move(je));
    }
    jp["equations"] = std::move(eqs);
    auto wts = nlohmann::ordered_json::array();
    for (const auto& w : p.witness_triples) wts.push_back({w[0], w[1], w[2]});
    jp["witness_triples"] = std::move(wts);
    jp["detail"] = p.detail;
    arr.push_back(std::move(jp));
  }
  j["placements"] = std::move(arr);
  j["refuted"] = refuted;
  return j.dump(2) + "\n";
}

}  // namespace zinbiel
