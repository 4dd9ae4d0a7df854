#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/index_set.hpp"
#include "tropical/matrix.hpp"
#include "tropical/permutation.hpp"
#include "tropical/value.hpp"

namespace tropical {

// adj(i, j) = per(m with row j and column i removed). Note the transposition.
// witness(i, j) maps {j}^c onto {i}^c and attains adj(i, j) in m; it is
// absent where adj(i, j) is -inf.
struct AdjointResult {
  TropMatrix adj;
  std::vector<std::optional<Bijection>> witnesses;  // row-major n*n

  const std::optional<Bijection>& witness(std::size_t i, std::size_t j) const {
    return witnesses[i * adj.cols() + j];
  }
};

// Requires a square matrix with n >= 2 (kInvalidArgument otherwise).
AdjointResult adjoint(const TropMatrix& m);

// A single adjoint entry together with its witness. Works for n >= 1; the
// 1x1 case yields 0 with an empty witness.
struct AdjointEntry {
  TropValue value;
  std::optional<Bijection> witness;
};
AdjointEntry adjoint_entry(const TropMatrix& m, std::size_t i, std::size_t j);

// adj(m) restricted to rows `rows` and columns `cols`, computing only the
// needed minors.
TropMatrix adjoint_submatrix(const TropMatrix& m, const IndexSet& rows,
                             const IndexSet& cols);

struct CompoundEntry {
  TropValue value;
  std::optional<Bijection> witness;  // rows -> cols, absent when -inf
};

// Best weight of a bijection from `rows` onto `cols`. Throws
// kIndexOutOfRange on universe mismatch and kInvalidArgument when the sizes
// differ. The empty selection has value 0.
CompoundEntry compound_entry(const TropMatrix& m, const IndexSet& rows,
                             const IndexSet& cols);

// All k-subsets of [n] in colex order: {0,1}, {0,2}, {1,2}, {0,3}, ...
std::vector<IndexSet> k_subsets_colex(std::size_t n, std::size_t k);

inline constexpr std::size_t kDefaultCompoundCap = 1'000'000;

struct CompoundMatrix {
  std::vector<IndexSet> row_subsets;
  std::vector<IndexSet> col_subsets;
  std::vector<CompoundEntry> entries;  // row-major

  const CompoundEntry& operator()(std::size_t r, std::size_t c) const {
    return entries[r * col_subsets.size() + c];
  }
  TropMatrix values() const;
};

// The k-th compound. Throws kSizeLimit when C(rows,k) * C(cols,k) exceeds
// `cap`, kInvalidArgument when k > min(rows, cols).
CompoundMatrix compound(const TropMatrix& m, std::size_t k,
                        std::size_t cap = kDefaultCompoundCap);

}  // namespace tropical
