#pragma once

#include <cstddef>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/permutation.hpp"
#include "tropical/value.hpp"

namespace tropical {

// Optimal assignment of a square matrix under max-plus weights.
//
// Invariants (when value is finite):
//   row_duals[i] + col_duals[j] >= m(i, j) for every finite entry,
//   row_duals[i] + col_duals[witness(i)] == m(i, witness(i)),
//   sum(row_duals) + sum(col_duals) == value.
struct AssignmentResult {
  TropValue value;
  Permutation witness;
  std::vector<double> row_duals;
  std::vector<double> col_duals;
};

// Maximization Hungarian method, O(n^3). Ties during the augmenting-path
// search go to the lowest column index, so the witness is deterministic.
// Throws kInvalidArgument for non-square or empty input and kSingularMatrix
// when no permutation has finite weight.
AssignmentResult solve(const TropMatrix& m);

// Like solve(), but an all -inf matrix yields value -inf and no witness
// instead of throwing. A 0x0 matrix has permanent 0.
struct MaybeAssignment {
  TropValue value;
  std::vector<std::size_t> witness;  // empty when value is -inf
};
MaybeAssignment try_solve(const TropMatrix& m);

// m rescaled by diagonal shifts so that every entry is <= 0 and the edges of
// optimal permutations are exactly 0: reduced(i, j) = m(i, j) - row_shift[i]
// - col_shift[j]. The shifts are the least non-negative column potentials
// compatible with the witness, so an already reduced matrix maps to itself.
//
// With `relocate` set, columns are additionally permuted by the witness pi0
// so that the identity is optimal and the diagonal is zero:
// reduced(i, c) = m(i, column_map(c)) - row_shift[i] - col_shift[column_map(c)].
struct Normalization {
  TropMatrix reduced;
  std::vector<double> row_shift;
  std::vector<double> col_shift;
  Permutation pi0;
  Permutation column_map;
};

struct NormalizeOptions {
  bool relocate = false;
};

Normalization normalize(const TropMatrix& m, NormalizeOptions options = {});

// Edges lying on at least one optimal permutation.
class OptimalEdgeSet {
 public:
  OptimalEdgeSet() = default;
  OptimalEdgeSet(std::size_t n, std::vector<Edge> edges);

  std::size_t dimension() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted
  std::size_t size() const { return edges_.size(); }
  bool contains(std::size_t row, std::size_t col) const {
    return mask_[row * n_ + col] != 0;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> mask_;
};

// A zero edge of the reduced matrix is optimal iff it is matched by the
// witness or closes an alternating cycle, i.e. its row and the row matched
// to its column share a strongly connected component.
OptimalEdgeSet optimal_edge_set(const TropMatrix& m,
                                double eps = kDefaultEpsilon);

// True iff at least two permutations attain per(m).
bool has_multiple_optima(const TropMatrix& m, double eps = kDefaultEpsilon);

// Up to `limit` optimal permutations in lexicographic order of their images.
std::vector<Permutation> enumerate_optima(const TropMatrix& m,
                                          std::size_t limit,
                                          double eps = kDefaultEpsilon);

}  // namespace tropical
