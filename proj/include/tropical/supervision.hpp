#pragma once

#include <optional>
#include <vector>

#include "tropical/bijection_graph.hpp"
#include "tropical/index_set.hpp"
#include "tropical/matching.hpp"
#include "tropical/matrix.hpp"
#include "tropical/permutation.hpp"

namespace tropical {

// k full assignments; assignments[t] carries the supervised edge of the t-th
// smallest source of `supervision`.
struct SupervisedAssignmentSet {
  Bijection supervision;  // workers I -> tasks J
  std::vector<Permutation> assignments;
  TropValue base_value;
  std::optional<TropValue> priority_value;

  RegularMultigraph multigraph() const;
};

// Best total weight of k assignments supervising workers I on tasks J, which
// is per(adj(m)[J, I]). Requires |I| = |J| >= 1 and n >= 2; throws
// kInfeasible when the value is -inf.
TropValue optimal_base_value(const TropMatrix& m, const IndexSet& workers,
                             const IndexSet& tasks);

// Checks the priority matrix c (rows ordered as I, columns as J): a finite
// c(r, s) needs (s, r) optimal in adj(m)[J, I], and some bijection must be
// finite in c. Returns the optimal edges of adj(m)[J, I] in (task position,
// worker position) coordinates. Throws EssentialEdgeError listing every
// offending (r, s), or kNoFiniteBijection.
OptimalEdgeSet validate_priority(const TropMatrix& c, const TropMatrix& m,
                                 const IndexSet& workers, const IndexSet& tasks);

// Among optimal supervisions, one of best priority; ties go to the
// lexicographically smallest image in worker order.
SupervisedAssignmentSet solve_supervised(const TropMatrix& m,
                                         const IndexSet& workers,
                                         const IndexSet& tasks,
                                         const TropMatrix& priority);

// For each supervised edge i -> j, the best permutation sending i to j.
// Throws kInfeasibleEdge when no such permutation is finite off the edge.
std::vector<Permutation> recover_assignments(const TropMatrix& m,
                                             const Bijection& supervision);

}  // namespace tropical
