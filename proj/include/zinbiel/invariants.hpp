#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/subspace.hpp"

namespace zinbiel {

// Descending chain of ideals l^1 = l, l^{k+1} = l o l^k, down to zero.
// Throws NotNilpotentError if the chain stabilizes at a nonzero subspace.
std::vector<Subspace> power_series(const Algebra& a);

// Largest s with l^s != 0 (0 for the zero-dimensional algebra).
int nilindex(const Algebra& a);

struct Annihilators {
  Subspace right;   // {x : y o x = 0 for all y}
  Subspace left;    // {x : x o y = 0 for all y}
  Subspace center;  // left n right
};

Annihilators annihilators(const Algebra& a);

// Weakly decreasing Jordan block sizes, summing to the ambient dimension.
struct CharSequence {
  std::vector<int> blocks;

  friend std::strong_ordering operator<=>(const CharSequence& a, const CharSequence& b) {
    // Lexicographic: (n1, n2, ...) < (m1, m2, ...) iff some ni < mi with
    // earlier entries equal.
    std::size_t m = std::min(a.blocks.size(), b.blocks.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a.blocks[i] != b.blocks[i]) return a.blocks[i] <=> b.blocks[i];
    }
    return a.blocks.size() <=> b.blocks.size();
  }
  friend bool operator==(const CharSequence& a, const CharSequence& b) = default;

  std::string str() const;
};

// Block profile of a nilpotent matrix from its rank profile:
// #blocks of size >= k equals rank(N^{k-1}) - rank(N^k).
CharSequence jordan_blocks_nilpotent(const Matrix& n);

// Lexicographic maximum of the block profile of L_x over every basis vector
// outside l^2 plus `trials` seeded random rational vectors outside l^2.
// The sampled maximum is attained generically; the result is "best found".
CharSequence characteristic_sequence(const Algebra& a, int trials = 32,
                                     std::uint64_t seed = 0);

struct Gradation {
  // layers[i] spans a complement of l^{i+2} inside l^{i+1} (0-indexed).
  std::vector<Subspace> layers;
  std::vector<int> layer_dims;
  // Adapted basis rows, grouped layer 1 first; row r belongs to layer_of[r].
  Matrix adapted_basis;
  std::vector<int> layer_of;  // 1-based layer per adapted-basis row
};

// Complement bases chosen greedily from each power's RREF rows, in order.
Gradation natural_gradation(const Algebra& a);

struct GradedTable {
  Algebra graded;         // table in the adapted basis, truncated to the layer rule
  bool already_graded;    // transported table equals the truncated one
  Gradation gradation;
};

// Transports the algebra to the adapted basis and drops every product
// component outside layer(i)+layer(j).
GradedTable graded_table(const Algebra& a);

struct Fingerprint {
  std::vector<int> power_dims;  // dims of l^1, l^2, ..., final 0 included
  int nilindex = 0;
  int dim_left_ann = 0;
  int dim_right_ann = 0;
  int dim_center = 0;
  CharSequence char_seq;
  std::vector<int> layer_dims;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) = default;
  std::string to_json() const;  // stable key order
};

Fingerprint fingerprint(const Algebra& a, int trials = 32, std::uint64_t seed = 0);

}  // namespace zinbiel
