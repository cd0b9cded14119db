#include "zinbiel/invariants.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "zinbiel/errors.hpp"
#include "zinbiel/sampling.hpp"
#include "zinbiel/transform.hpp"

namespace zinbiel {

std::vector<Subspace> power_series(const Algebra& a) {
  int n = a.dim();
  std::vector<Subspace> chain{Subspace::full(n)};
  while (chain.back().dim() > 0) {
    const Subspace& prev = chain.back();
    std::vector<Vec> prods;
    for (int i = 1; i <= n; ++i) {
      Vec ei = a.basis_vector(i);
      for (int r = 0; r < prev.basis().rows(); ++r) {
        Vec p = multiply(a, ei, prev.basis().row(r));
        if (!is_zero_vec(p)) prods.push_back(std::move(p));
      }
    }
    Subspace next = Subspace::span(n, prods);
    if (next.dim() == prev.dim()) {
      std::ostringstream os;
      os << "lower central series stabilizes at dimension " << next.dim()
         << " for \"" << a.label() << "\"";
      throw NotNilpotentError(os.str());
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

int nilindex(const Algebra& a) {
  return static_cast<int>(power_series(a).size()) - 1;
}

Annihilators annihilators(const Algebra& a) {
  int n = a.dim();
  // Right annihilator = common kernel of all left operators, stacked; left
  // annihilator likewise with right operators.
  Matrix stack_l(n * n, n), stack_r(n * n, n);
  for (int i = 1; i <= n; ++i) {
    Matrix li = left_operator(a, a.basis_vector(i));
    Matrix ri = right_operator(a, a.basis_vector(i));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        stack_l.at((i - 1) * n + r, c) = li.at(r, c);
        stack_r.at((i - 1) * n + r, c) = ri.at(r, c);
      }
  }
  Subspace right = Subspace::span(n, kernel_basis(stack_l));
  Subspace left = Subspace::span(n, kernel_basis(stack_r));
  Subspace center = left.intersect(right);
  return Annihilators{right, left, center};
}

std::string CharSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i];
  os << ")";
  return os.str();
}

CharSequence jordan_blocks_nilpotent(const Matrix& nmat) {
  if (nmat.rows() != nmat.cols()) throw DimensionMismatch("jordan blocks of non-square matrix");
  int n = nmat.rows();
  std::vector<int> ranks{n};
  Matrix power = nmat;
  while (true) {
    int r = rank(power);
    if (r == ranks.back() && r != 0) throw NotNilpotentError("operator is not nilpotent");
    ranks.push_back(r);
    if (r == 0) break;
    power = power * nmat;
  }
  CharSequence cs;
  int steps = static_cast<int>(ranks.size()) - 1;
  for (int k = 1; k <= steps; ++k) {
    int geq_k = ranks[k - 1] - ranks[k];
    int geq_k1 = (k + 1 <= steps) ? ranks[k] - ranks[k + 1] : 0;
    for (int t = 0; t < geq_k - geq_k1; ++t) cs.blocks.push_back(k);
  }
  std::sort(cs.blocks.begin(), cs.blocks.end(), std::greater<>());
  return cs;
}

CharSequence characteristic_sequence(const Algebra& a, int trials, std::uint64_t seed) {
  int n = a.dim();
  std::vector<Subspace> powers = power_series(a);
  Subspace l2 = powers.size() > 1 ? powers[1] : Subspace(n);
  if (l2.dim() == n)
    throw DegenerateError("no test vectors: l^2 equals the whole algebra");
  std::vector<Vec> candidates;
  for (int i = 1; i <= n; ++i) {
    Vec e = a.basis_vector(i);
    if (!l2.contains(e)) candidates.push_back(std::move(e));
  }
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    for (;;) {
      Vec v = rng.rational_vector(n);
      if (!l2.contains(v)) {
        candidates.push_back(std::move(v));
        break;
      }
    }
  }
  CharSequence best;
  for (const Vec& x : candidates) {
    CharSequence cs = jordan_blocks_nilpotent(left_operator(a, x));
    if (best.blocks.empty() || best < cs) best = cs;
  }
  return best;
}

Gradation natural_gradation(const Algebra& a) {
  int n = a.dim();
  std::vector<Subspace> powers = power_series(a);
  Gradation g;
  std::vector<Vec> adapted;
  for (std::size_t i = 0; i + 1 < powers.size(); ++i) {
    const Subspace& cur = powers[i];
    const Subspace& next = powers[i + 1];
    // Greedy pivot completion: walk cur's RREF rows in order, keep those
    // independent of next + already kept.
    std::vector<Vec> kept;
    for (int r = 0; r < cur.basis().rows(); ++r) {
      Vec v = cur.basis().row(r);
      std::vector<Vec> probe;
      for (int b = 0; b < next.basis().rows(); ++b) probe.push_back(next.basis().row(b));
      for (const Vec& k : kept) probe.push_back(k);
      probe.push_back(v);
      if (static_cast<int>(Subspace::span(n, probe).dim()) ==
          next.dim() + static_cast<int>(kept.size()) + 1)
        kept.push_back(std::move(v));
    }
    g.layers.push_back(Subspace::span(n, kept));
    g.layer_dims.push_back(static_cast<int>(kept.size()));
    for (auto& v : kept) {
      adapted.push_back(v);
      g.layer_of.push_back(static_cast<int>(i) + 1);
    }
  }
  g.adapted_basis = Matrix::from_rows(adapted, n);
  return g;
}

GradedTable graded_table(const Algebra& a) {
  Gradation g = natural_gradation(a);
  BasisChange change(g.adapted_basis);
  Algebra moved = transport(a, change);
  Algebra trunc(a.dim(), a.label() + " [graded]");
  bool equal = true;
  for (const auto& [ij, row] : moved.table()) {
    int li = g.layer_of[ij.first - 1], lj = g.layer_of[ij.second - 1];
    Algebra::Row keep;
    for (const auto& [k, c] : row) {
      if (g.layer_of[k - 1] == li + lj)
        keep.emplace_back(k, c);
      else
        equal = false;
    }
    trunc.set_product(ij.first, ij.second, std::move(keep));
  }
  return GradedTable{std::move(trunc), equal, std::move(g)};
}

std::string Fingerprint::to_json() const {
  nlohmann::ordered_json j;
  j["power_dims"] = power_dims;
  j["nilindex"] = nilindex;
  j["dim_left_ann"] = dim_left_ann;
  j["dim_right_ann"] = dim_right_ann;
  j["dim_center"] = dim_center;
  j["char_seq"] = char_seq.blocks;
  j["layer_dims"] = layer_dims;
  return j.dump();
}

Fingerprint fingerprint(const Algebra& a, int trials, std::uint64_t seed) {
  Fingerprint f;
  for (const Subspace& s : power_series(a)) f.power_dims.push_back(s.dim());
  for (int d : f.power_dims)
    if (d != 0) ++f.nilindex;
  for (std::size_t i = 0; i + 1 < f.power_dims.size(); ++i)
    f.layer_dims.push_back(f.power_dims[i] - f.power_dims[i + 1]);
  Annihilators ann = annihilators(a);
  f.dim_left_ann = ann.left.dim();
  f.dim_right_ann = ann.right.dim();
  f.dim_center = ann.center.dim();
  f.char_seq = a.dim() > 0 ? characteristic_sequence(a, trials, seed) : CharSequence{};
  return f;
}

}  // namespace zinbiel
