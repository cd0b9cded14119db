#include "zinbiel/transform.hpp"

#include <sstream>

#include <json.hpp>

#include "zinbiel/catalog.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/invariants.hpp"
#include "zinbiel/sampling.hpp"

namespace zinbiel {

BasisChange::BasisChange(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("basis change must be square");
  inv_ = inverse(m_);  // throws SingularMatrixError
}

Algebra transport(const Algebra& a, const BasisChange& p) {
  int n = a.dim();
  if (p.matrix().rows() != n) throw DimensionMismatch("basis change dimension != algebra dimension");
  Algebra b(n, a.label() + "'");
  const Matrix& inv = p.inverse_matrix();
  for (int i = 1; i <= n; ++i) {
    Vec pi = p.matrix().row(i - 1);
    for (int j = 1; j <= n; ++j) {
      Vec prod = multiply(a, pi, p.matrix().row(j - 1));
      if (is_zero_vec(prod)) continue;
      // coords x of prod in the new basis solve x P = prod
      Vec x = inv.apply_left(prod);
      Algebra::Row row;
      for (int k = 0; k < n; ++k)
        if (!x[k].is_zero()) row.emplace_back(k + 1, x[k]);
      b.set_product(i, j, std::move(row));
    }
  }
  return b;
}

std::optional<FamilyParams> family6_params(const Algebra& a) {
  int n = a.dim();
  if (n < 8) return std::nullopt;
  FamilyParams p{a.coefficient(n - 2, 1, n - 1), a.coefficient(n - 2, n - 2, n - 1),
                 a.coefficient(n - 2, n, n - 1),  a.coefficient(n, 1, n - 1),
                 a.coefficient(n, n - 2, n - 1),  a.coefficient(n, n, n - 1)};
  if (a == build_family6(n, p)) return p;
  return std::nullopt;
}

GeneratorChangeResult admissible_generator_change(const Algebra& a, const GeneratorChange& g) {
  auto params = family6_params(a);
  if (!params) throw ParameterDomainError("generator change needs a six-parameter family table");
  const auto& [a1, a2, a3, a4, a5, a6] = *params;
  int n = a.dim();

  if (!g.Q1.is_zero() || !g.R1.is_zero()) return RejectedChange{"Q_1 = R_1 = 0"};
  Rational r_eq = g.P1 * g.Rn2 + a2 * g.Pn2 * g.Rn2 + a3 * g.Pn2 * g.Rn + a5 * g.Pn * g.Rn2 +
                  a6 * g.Pn * g.Rn;
  if (!r_eq.is_zero())
    return RejectedChange{"P_1 R_{n-2} + a_2 P_{n-2} R_{n-2} + a_3 P_{n-2} R_n + "
                          "a_5 P_n R_{n-2} + a_6 P_n R_n = 0"};
  Rational denom = g.P1 * g.Qn2 + a2 * g.Pn2 * g.Qn2 + a3 * g.Pn2 * g.Qn + a5 * g.Pn * g.Qn2 +
                   a6 * g.Pn * g.Qn;
  if (denom.is_zero())
    return RejectedChange{"P_1 Q_{n-2} + a_2 P_{n-2} Q_{n-2} + a_3 P_{n-2} Q_n + "
                          "a_5 P_n Q_{n-2} + a_6 P_n Q_n != 0"};
  if ((g.P1 * (g.Qn2 * g.Rn - g.Qn * g.Rn2)).is_zero())
    return RejectedChange{"P_1 (Q_{n-2} R_n - Q_n R_{n-2}) != 0"};

  // Extend the generators to a full graded basis: e'_{i+1} = e'_1 o e'_i for
  // the chain, e'_{n-1} = e'_1 o e'_{n-2}.
  std::vector<Vec> rows(n);
  Vec e1p(n, Rational(0)), en2p(n, Rational(0)), enp(n, Rational(0));
  e1p[0] = g.P1;
  e1p[n - 3] = g.Pn2;
  e1p[n - 1] = g.Pn;
  en2p[n - 3] = g.Qn2;
  en2p[n - 1] = g.Qn;
  enp[n - 3] = g.Rn2;
  enp[n - 1] = g.Rn;
  rows[0] = e1p;
  for (int i = 2; i <= n - 3; ++i) rows[i - 1] = multiply(a, e1p, rows[i - 2]);
  rows[n - 3] = en2p;
  rows[n - 2] = multiply(a, e1p, en2p);
  rows[n - 1] = enp;

  BasisChange change(Matrix::from_rows(rows, n));  // restrictions make this invertible
  Algebra moved = transport(a, change);
  auto new_params = family6_params(moved);
  if (!new_params)
    return RejectedChange{"transported table left the six-parameter family"};
  return AppliedChange{std::move(change), *new_params, std::move(moved)};
}

FamilyParams change_of_basis_formulas(const FamilyParams& a, const GeneratorChange& g) {
  const auto& [a1, a2, a3, a4, a5, a6] = a;
  const Rational &P1 = g.P1, &Pn2 = g.Pn2, &Pn = g.Pn, &Qn2 = g.Qn2, &Qn = g.Qn, &Rn2 = g.Rn2,
                 &Rn = g.Rn;
  Rational d = P1 * Qn2 + a2 * Pn2 * Qn2 + a3 * Pn2 * Qn + a5 * Pn * Qn2 + a6 * Pn * Qn;
  Rational di = inverse(d);
  return FamilyParams{
      (a1 * P1 * Qn2 + a2 * Pn2 * Qn2 + a3 * Pn * Qn2 + a4 * P1 * Qn + a5 * Pn2 * Qn +
       a6 * Pn * Qn) * di,
      (a2 * Qn2 * Qn2 + a3 * Qn2 * Qn + a5 * Qn2 * Qn + a6 * Qn * Qn) * di,
      (a2 * Qn2 * Rn2 + a3 * Qn2 * Rn + a5 * Qn * Rn2 + a6 * Qn * Rn) * di,
      (a1 * P1 * Rn2 + a2 * Pn2 * Rn2 + a3 * Pn * Rn2 + a4 * P1 * Rn + a5 * Pn2 * Rn +
       a6 * Pn * Rn) * di,
      (a2 * Qn2 * Rn2 + a3 * Qn * Rn2 + a5 * Qn2 * Rn + a6 * Qn * Rn) * di,
      (a2 * Rn2 * Rn2 + a3 * Rn2 * Rn + a5 * Rn2 * Rn + a6 * Rn * Rn) * di};
}

Rational delta_expr(const FamilyParams& p) {
  const auto& [a1, a2, a3, a4, a5, a6] = p;
  return a3 * a3 * a3 * a4 + a3 * a3 * a4 * a5 - a1 * a3 * a3 * a4 * a5 +
         a2 * a3 * a4 * a4 * a5 - a1 * a3 * a4 * a5 * a5 - a1 * a3 * a3 * a6 -
         Rational(3) * a2 * a3 * a4 * a6 + a1 * a2 * a3 * a4 * a6 - a2 * a2 * a4 * a4 * a6 +
         a3 * a5 * a6 + a1 * a1 * a3 * a5 * a6 + a2 * a4 * a5 * a6 + a1 * a2 * a4 * a5 * a6 -
         a1 * a5 * a5 * a6 - a2 * a6 * a6 + Rational(2) * a1 * a2 * a6 * a6 -
         a1 * a1 * a2 * a6 * a6;
}

bool InvariantExpr::in_scope(const FamilyParams& a) const {
  bool en_right_ann = a[2].is_zero() && a[5].is_zero();
  switch (scope) {
    case ExprScope::EnInRightAnn:
      return en_right_ann;
    case ExprScope::EnInRightAnnA5Zero:
      return en_right_ann && a[4].is_zero();
    case ExprScope::EnInRightAnnA5A4Zero:
      return en_right_ann && a[4].is_zero() && a[3].is_zero();
    case ExprScope::EnNotInRightAnn:
      return !en_right_ann;
  }
  return false;
}

const std::vector<InvariantExpr>& invariant_exprs() {
  static const std::vector<InvariantExpr> kExprs = {
      // The five verified expressions.
      {"a2*a4 - a1*a5", ExprScope::EnInRightAnn,
       [](const FamilyParams& a) { return a[1] * a[3] - a[0] * a[4]; }},
      {"a3*a5 - a2*a6", ExprScope::EnNotInRightAnn,
       [](const FamilyParams& a) { return a[2] * a[4] - a[1] * a[5]; }},
      {"a3^2 - a3*a5 + a5^2 - a2*a6", ExprScope::EnNotInRightAnn,
       [](const FamilyParams& a) {
         return a[2] * a[2] - a[2] * a[4] + a[4] * a[4] - a[1] * a[5];
       }},
      {"a3 - a5", ExprScope::EnNotInRightAnn,
       [](const FamilyParams& a) { return a[2] - a[4]; }},
      {"Delta", ExprScope::EnNotInRightAnn, delta_expr},
      // Further scoped separators from the normal-form derivation.
      {"a5", ExprScope::EnInRightAnn, [](const FamilyParams& a) { return a[4]; }},
      {"a2", ExprScope::EnInRightAnnA5Zero, [](const FamilyParams& a) { return a[1]; }},
      {"a4", ExprScope::EnInRightAnnA5Zero, [](const FamilyParams& a) { return a[3]; }},
      {"a1 - 1", ExprScope::EnInRightAnnA5A4Zero,
       [](const FamilyParams& a) { return a[0] - Rational(1); }},
  };
  return kExprs;
}

namespace {

std::string params_str(const FamilyParams& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << p[i].str();
  os << ")";
  return os.str();
}

std::string change_str(const GeneratorChange& g) {
  std::ostringstream os;
  os << "P=(" << g.P1 << "," << g.Pn2 << "," << g.Pn << ") Q=(" << g.Q1 << "," << g.Qn2 << ","
     << g.Qn << ") R=(" << g.R1 << "," << g.Rn2 << "," << g.Rn << ")";
  return os.str();
}

// Draws a generator change satisfying the linear restriction exactly by
// solving it for (R_{n-2}, R_n); the two inequations are left to chance and
// reported as a skip when violated.
std::optional<GeneratorChange> sample_change(Rng& rng, const FamilyParams& a) {
  GeneratorChange g;
  g.P1 = rng.rational();
  g.Pn2 = rng.rational();
  g.Pn = rng.rational();
  g.Q1 = Rational(0);
  g.Qn2 = rng.rational();
  g.Qn = rng.rational();
  g.R1 = Rational(0);
  Rational u = g.P1 + a[1] * g.Pn2 + a[4] * g.Pn;  // coefficient of R_{n-2}
  Rational w = a[2] * g.Pn2 + a[5] * g.Pn;         // coefficient of R_n
  if (u.is_zero() && w.is_zero()) {
    g.Rn2 = rng.rational();
    g.Rn = rng.rational();
  } else {
    Rational t = rng.nonzero_rational();
    g.Rn2 = -w * t;
    g.Rn = u * t;
  }
  Rational denom = g.P1 * g.Qn2 + a[1] * g.Pn2 * g.Qn2 + a[2] * g.Pn2 * g.Qn +
                   a[4] * g.Pn * g.Qn2 + a[5] * g.Pn * g.Qn;
  if (denom.is_zero()) return std::nullopt;
  if ((g.P1 * (g.Qn2 * g.Rn - g.Qn * g.Rn2)).is_zero()) return std::nullopt;
  return g;
}

}  // namespace

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["op"] = op;
  j["seed"] = seed;
  j["samples"] = samples;
  j["passes"] = passes;
  auto arr = nlohmann::ordered_json::array();
  for (const Counterexample& c : failures)
    arr.push_back({{"params", params_str(c.params)},
                   {"change", change_str(c.change)},
                   {"detail", c.detail}});
  j["failures"] = std::move(arr);
  j["skipped"] = skipped;
  return j.dump(2) + "\n";
}

VerifyReport verify_change_formulas(
    int samples, std::uint64_t seed, int dim,
    const std::function<FamilyParams(const FamilyParams&, const GeneratorChange&)>& formulas) {
  VerifyReport rep;
  rep.op = "verify-change-formulas";
  rep.seed = seed;
  Rng rng(seed);
  long guard = 0;
  while (rep.samples < samples && guard < 50L * samples + 1000) {
    ++guard;
    FamilyParams a;
    for (auto& x : a) x = rng.rational();
    auto g = sample_change(rng, a);
    if (!g) {
      ++rep.skipped;
      continue;
    }
    ++rep.samples;
    Algebra alg = build_family6(dim, a);
    auto result = admissible_generator_change(alg, *g);
    if (std::holds_alternative<RejectedChange>(result)) {
      rep.failures.push_back({a, *g, "sampled change rejected: " +
                                         std::get<RejectedChange>(result).violated});
      continue;
    }
    const auto& applied = std::get<AppliedChange>(result);
    FamilyParams expect = formulas(a, *g);
    if (applied.params == expect) {
      ++rep.passes;
    } else {
      rep.failures.push_back({a, *g,
                              "transport gives " + params_str(applied.params) +
                                  " but formulas give " + params_str(expect)});
    }
  }
  return rep;
}

VerifyReport verify_nullity_invariants(int samples, std::uint64_t seed, int dim) {
  VerifyReport rep;
  rep.op = "verify-nullity-invariants";
  rep.seed = seed;
  Rng rng(seed);
  for (const InvariantExpr& expr : invariant_exprs()) {
    int done = 0;
    long guard = 0;
    while (done < samples && guard < 50L * samples + 1000) {
      ++guard;
      FamilyParams a;
      for (auto& x : a) x = rng.rational();
      switch (expr.scope) {
        case ExprScope::EnInRightAnnA5A4Zero:
          a[3] = Rational(0);
          [[fallthrough]];
        case ExprScope::EnInRightAnnA5Zero:
          a[4] = Rational(0);
          [[fallthrough]];
        case ExprScope::EnInRightAnn:
          a[2] = Rational(0);
          a[5] = Rational(0);
          break;
        case ExprScope::EnNotInRightAnn:
          if (a[2].is_zero() && a[5].is_zero()) a[2] = rng.nonzero_rational();
          break;
      }
      auto g = sample_change(rng, a);
      if (!g) {
        ++rep.skipped;
        continue;
      }
      auto result = admissible_generator_change(build_family6(dim, a), *g);
      if (std::holds_alternative<RejectedChange>(result)) {
        ++rep.skipped;
        continue;
      }
      ++done;
      ++rep.samples;
      const FamilyParams& ap = std::get<AppliedChange>(result).params;
      bool before = expr.eval(a).is_zero();
      bool after = expr.eval(ap).is_zero();
      if (before == after) {
        ++rep.passes;
      } else {
        rep.failures.push_back({a, *g,
                                expr.name + " nullity flip: " + params_str(a) + " -> " +
                                    params_str(ap)});
      }
    }
  }
  return rep;
}

namespace {

// First differing fingerprint field, coarsest first.
std::optional<std::string> fingerprint_difference(const Fingerprint& fa, const Fingerprint& fb) {
  if (fa.nilindex != fb.nilindex) return "nilindex";
  if (fa.power_dims != fb.power_dims) return "power_dims";
  if (fa.char_seq != fb.char_seq) return "char_seq";
  if (fa.dim_left_ann != fb.dim_left_ann) return "dim_left_ann";
  if (fa.dim_right_ann != fb.dim_right_ann) return "dim_right_ann";
  if (fa.dim_center != fb.dim_center) return "dim_center";
  if (fa.layer_dims != fb.layer_dims) return "layer_dims";
  return std::nullopt;
}

}  // namespace

SeparationResult separate_or_search(const Algebra& a, const Algebra& b, long budget,
                                    std::uint64_t seed) {
  if (a.dim() != b.dim()) throw DimensionMismatch("separate_or_search: dimensions differ");

  Fingerprint fa = fingerprint(a, 16, seed);
  Fingerprint fb = fingerprint(b, 16, seed);
  if (auto field = fingerprint_difference(fa, fb))
    return SeparatedBy{"fingerprint:" + *field, fa.to_json() + " vs " + fb.to_json()};

  auto pa = family6_params(a);
  auto pb = family6_params(b);
  if (pa && pb) {
    bool ca = pa->at(2).is_zero() && pa->at(5).is_zero();
    bool cb = pb->at(2).is_zero() && pb->at(5).is_zero();
    if (ca != cb)
      return SeparatedBy{"e_n right-annihilator membership",
                         "(a3, a6) = (0, 0) on one side only"};
    for (const InvariantExpr& expr : invariant_exprs()) {
      if (!expr.in_scope(*pa) || !expr.in_scope(*pb)) continue;
      bool za = expr.eval(*pa).is_zero();
      bool zb = expr.eval(*pb).is_zero();
      if (za != zb)
        return SeparatedBy{"nullity of " + expr.name,
                           expr.name + " = " + expr.eval(*pa).str() + " vs " +
                               expr.eval(*pb).str()};
    }
  }

  // Randomized search over admissible generator changes (identity first).
  if (a == b) return IsoFound{BasisChange(Matrix::identity(a.dim()))};
  if (pa && pb) {
    Rng rng(seed);
    for (long i = 0; i < budget; ++i) {
      auto g = sample_change(rng, *pa);
      if (!g) continue;
      if (change_of_basis_formulas(*pa, *g) != *pb) continue;
      auto result = admissible_generator_change(a, *g);
      if (!std::holds_alternative<AppliedChange>(result)) continue;
      auto& applied = std::get<AppliedChange>(result);
      if (applied.transported == b) return IsoFound{applied.change};
    }
  }
  return NoIsoFound{budget};
}

std::string separation_to_json(const Algebra& a, const Algebra& b, const SeparationResult& r,
                               long budget, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["op"] = "iso";
  j["a"] = a.label();
  j["b"] = b.label();
  j["budget"] = budget;
  j["seed"] = seed;
  if (const auto* s = std::get_if<SeparatedBy>(&r)) {
    j["result"] = "separated";
    j["invariant"] = s->invariant;
    j["detail"] = s->detail;
  } else if (const auto* n = std::get_if<NoIsoFound>(&r)) {
    j["result"] = "no_iso_found";
    j["searched"] = n->budget;
  } else {
    const auto& iso = std::get<IsoFound>(r);
    j["result"] = "iso_found";
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < iso.change.matrix().rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int c = 0; c < iso.change.matrix().cols(); ++c)
        row.push_back(iso.change.matrix().at(i, c).str());
      rows.push_back(std::move(row));
    }
    j["change"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace zinbiel
