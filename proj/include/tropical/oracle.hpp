#pragma once

#include <vector>

#include "tropical/index_set.hpp"
#include "tropical/matrix.hpp"
#include "tropical/permutation.hpp"
#include "tropical/value.hpp"

// Exhaustive reference implementations for tests. Nothing here touches the
// Hungarian solver.
namespace tropical::oracle {

// Max over all of S_n. Throws kTooLarge for n > 9.
TropValue brute_permanent(const TropMatrix& m);

// Every optimal permutation, lexicographic. Throws kTooLarge for n > 9.
std::vector<Permutation> brute_optima(const TropMatrix& m,
                                      double eps = kDefaultEpsilon);

struct BruteCompound {
  TropValue value;
  std::vector<Bijection> optima;  // all attaining bijections rows -> cols
};

// Throws kTooLarge for |rows| > 8.
BruteCompound brute_compound_entry(const TropMatrix& m, const IndexSet& rows,
                                   const IndexSet& cols,
                                   double eps = kDefaultEpsilon);

// adj(i, j) = brute permanent of m without row j and column i. n <= 10.
TropMatrix brute_adjoint(const TropMatrix& m);

// Max over sigma: I -> J of sum over i of per(m without row i, column
// sigma(i)). Throws kTooLarge for n > 6 or k > 4.
TropValue brute_base_value(const TropMatrix& m, const IndexSet& workers,
                           const IndexSet& tasks);

}  // namespace tropical::oracle
