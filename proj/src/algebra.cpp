#include "zinbiel/algebra.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {
const Algebra::Row kEmptyRow;
}

void Algebra::check_indices(int i, int j, int k) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_) {
    std::ostringstream os;
    os << "structure constant index out of range: (" << i << "," << j << "," << k
       << ") with dim " << dim_;
    throw DimensionMismatch(os.str());
  }
}

void Algebra::set_product(int i, int j, Row comps) {
  Row keep;
  for (auto& [k, c] : comps) {
    check_indices(i, j, k);
    if (!c.is_zero()) keep.emplace_back(k, c);
  }
  std::sort(keep.begin(), keep.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t t = 1; t < keep.size(); ++t)
    if (keep[t].first == keep[t - 1].first)
      throw ParseError("duplicate component in product row");
  if (keep.empty())
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(keep);
}

void Algebra::add_term(int i, int j, int k, const Rational& c) {
  check_indices(i, j, k);
  if (c.is_zero()) return;
  Row row = product(i, j);
  bool found = false;
  for (auto& [kk, cc] : row)
    if (kk == k) {
      cc += c;
      found = true;
      break;
    }
  if (!found) row.emplace_back(k, c);
  set_product(i, j, std::move(row));
}

const Algebra::Row& Algebra::product(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? kEmptyRow : it->second;
}

Rational Algebra::coefficient(int i, int j, int k) const {
  for (const auto& [kk, c] : product(i, j))
    if (kk == k) return c;
  return Rational(0);
}

Vec Algebra::basis_vector(int i) const {
  Vec v(dim_, Rational(0));
  v[i - 1] = Rational(1);
  return v;
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != a.dim() || static_cast<int>(y.size()) != a.dim())
    throw DimensionMismatch("multiply: element length != algebra dimension");
  Vec out(a.dim(), Rational(0));
  for (const auto& [ij, row] : a.table()) {
    const Rational& xi = x[ij.first - 1];
    if (xi.is_zero()) continue;
    const Rational& yj = y[ij.second - 1];
    if (yj.is_zero()) continue;
    Rational c = xi * yj;
    for (const auto& [k, v] : row) out[k - 1] += c * v;
  }
  return out;
}

Vec zinbiel_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec lhs = multiply(a, multiply(a, x, y), z);
  Vec r1 = multiply(a, x, multiply(a, y, z));
  Vec r2 = multiply(a, x, multiply(a, z, y));
  for (int i = 0; i < a.dim(); ++i) lhs[i] -= r1[i] + r2[i];
  return lhs;
}

std::optional<ZinbielWitness> zinbiel_violation(const Algebra& a) {
  int n = a.dim();
  // (e_i o e_j) o e_k - e_i o (e_j o e_k) - e_i o (e_k o e_j), per table rows.
  auto expand_right = [&](const Algebra::Row& row, int k, Vec& acc, int sign) {
    for (const auto& [u, c] : row)
      for (const auto& [w, d] : a.product(u, k))
        acc[w - 1] += (sign > 0 ? c * d : -(c * d));
  };
  auto expand_left = [&](int i, const Algebra::Row& row, Vec& acc) {
    for (const auto& [u, c] : row)
      for (const auto& [w, d] : a.product(i, u)) acc[w - 1] -= c * d;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Vec acc(n, Rational(0));
        expand_right(a.product(i, j), k, acc, +1);
        expand_left(i, a.product(j, k), acc);
        expand_left(i, a.product(k, j), acc);
        if (!is_zero_vec(acc)) return ZinbielWitness{i, j, k, acc};
      }
  return std::nullopt;
}

bool is_zinbiel(const Algebra& a) { return !zinbiel_violation(a).has_value(); }

Matrix left_operator(const Algebra& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.dim()) throw DimensionMismatch("left_operator: bad length");
  int n = a.dim();
  Matrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    Vec col = multiply(a, x, a.basis_vector(j));
    for (int i = 0; i < n; ++i) m.at(i, j - 1) = col[i];
  }
  return m;
}

Matrix right_operator(const Algebra& a, const Vec& y) {
  if (static_cast<int>(y.size()) != a.dim()) throw DimensionMismatch("right_operator: bad length");
  int n = a.dim();
  Matrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    Vec col = multiply(a, a.basis_vector(j), y);
    for (int i = 0; i < n; ++i) m.at(i, j - 1) = col[i];
  }
  return m;
}

std::string to_json(const Algebra& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim();
  j["label"] = a.label();
  auto table = nlohmann::ordered_json::array();
  for (const auto& [ij, row] : a.table())
    for (const auto& [k, c] : row)
      table.push_back({ij.first, ij.second, k, c.str()});
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

Algebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("algebra file: top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "dim" && key != "label" && key != "table")
      throw ParseError("algebra file: unknown key \"" + key + "\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("algebra file: missing integer key \"dim\"");
  int dim = j["dim"].get<int>();
  if (dim < 0) throw ParseError("algebra file: negative \"dim\"");
  if (j.contains("label") && !j["label"].is_string())
    throw ParseError("algebra file: \"label\" must be a string");
  Algebra a(dim, j.value("label", std::string()));
  if (!j.contains("table") || !j["table"].is_array())
    throw ParseError("algebra file: missing array key \"table\"");
  for (const auto& entry : j["table"]) {
    if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer() || !entry[3].is_string())
      throw ParseError("algebra file: table entries must be [i, j, k, \"c\"]");
    int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
    Rational c = Rational::parse(entry[3].get<std::string>());
    if (c.is_zero()) throw ParseError("algebra file: zero coefficient stored in table");
    if (!a.coefficient(i, jj, k).is_zero()) throw ParseError("algebra file: duplicate (i,j,k) entry");
    a.add_term(i, jj, k, c);
  }
  return a;
}

}  // namespace zinbiel
