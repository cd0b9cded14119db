#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

// Null-filiform algebra: e_i o e_j = C(i+j-1, j) e_{i+j} for 2 <= i+j <= n.
// The unique one-generated algebra of maximal nilindex.
Algebra build_null_filiform(int n);

// Six-parameter naturally graded family at dimension n >= 8 (generators e_1,
// e_{n-2}, e_n all in the first gradation layer):
//   e_i o e_j = C(i+j-1, j) e_{i+j},  2 <= i+j <= n-3,
//   e_1 o e_{n-2} = e_{n-1},
//   e_{n-2} o e_1 = a1 e_{n-1},   e_{n-2} o e_{n-2} = a2 e_{n-1},
//   e_{n-2} o e_n = a3 e_{n-1},   e_n o e_1 = a4 e_{n-1},
//   e_n o e_{n-2} = a5 e_{n-1},   e_n o e_n = a6 e_{n-1}.
Algebra build_family6(int n, const std::array<Rational, 6>& a);

// Four-parameter family at dimension n >= 8 (e_{n-2} in layer 1, e_n in
// layer 2), with (gamma1, gamma2) != (0, 0):
//   core as above,
//   e_1 o e_{n-2} = e_{n-1},
//   e_{n-2} o e_1 = beta1 e_{n-1} + gamma1 e_n,
//   e_{n-2} o e_{n-2} = beta2 e_{n-1} + gamma2 e_n.
Algebra build_family4(int n, const std::array<Rational, 4>& p);

// Rigid algebra at dimension n >= 8 (e_{n-2} in layer 1, e_n in layer 3):
//   core, e_1 o e_{n-2} = e_{n-1}, e_{n-2} o e_1 = -e_{n-1},
//   e_{n-2} o e_{n-1} = e_n.
Algebra build_z21(int n);

struct CatalogEntry {
  std::string name;  // NF, Zfam6, Zfam4, Z1..Z21
  int dim = 0;
  std::map<std::string, Rational> params;
};

struct BuildResult {
  Algebra algebra;
  std::vector<std::string> warnings;  // accepted but flagged parameter values
};

// Builds a catalog entry; throws ParameterDomainError on out-of-domain
// parameters and RangeError on a dimension below the entry's floor.
BuildResult build_entry(const CatalogEntry& entry);

struct ParamSpec {
  std::string name;
  std::string domain;  // human-readable constraint, e.g. "lambda != 0"
};

struct CatalogEntryInfo {
  std::string name;
  std::string kind;  // "representative" or "family"
  int min_dim = 0;
  std::vector<ParamSpec> params;
  std::string description;
};

// Static listing of the 21 representatives and 3 parameterized families.
const std::vector<CatalogEntryInfo>& catalog_manifest();

std::string manifest_to_json();

}  // namespace zinbiel
