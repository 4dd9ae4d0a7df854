#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tropical/bijection_graph.hpp"
#include "tropical/index_set.hpp"
#include "tropical/matrix.hpp"
#include "tropical/supervision.hpp"
#include "tropical/value.hpp"

namespace tropical {

// Both sides of the Jacobi identity for adj(m) rows `rows`, columns `cols`:
//   lhs       = adj(m)^k [rows, cols]
//   rhs_minor = m^(n-k) [cols^c, rows^c]
// equality holds when lhs = rhs_minor + (k - 1) per(m); multiplicity when at
// least two bijections rows -> cols attain lhs in adj(m).
struct JacobiReport {
  TropValue per_m;
  TropValue lhs;
  TropValue rhs_minor;
  bool equality = false;
  bool multiplicity = false;
  std::vector<Bijection> witnesses;  // two optimal bijections when multiplicity
};

// Throws kSingularMatrix when per(m) is -inf.
JacobiReport jacobi_check(const TropMatrix& m, const IndexSet& rows,
                          const IndexSet& cols, double eps = kDefaultEpsilon);

enum class RearrangeCase { kCase1, kCase2a, kCase2b, kCase2c };
std::string_view case_name(RearrangeCase c);

// Case 1 result: `tau` holds every distinguished cycle plus loops, and
// `complement` = tau minus the supervised edges, a bijection I^c -> J^c.
struct Case1Payload {
  Permutation tau;
  Bijection complement;
};

struct RearrangementOutcome {
  RearrangeCase tag = RearrangeCase::kCase1;
  RegularMultigraph multigraph;  // F itself for Case 1, F' otherwise
  std::optional<Case1Payload> case1;
};

// Replaces, in every layer, each cycle not carrying the supervised edge by
// loops. The base weight cannot drop when the identity is optimal in m.
RegularMultigraph isolate_supervised_cycles(const RegularMultigraph& f);

// One step. Requires the identity to be optimal in m (kIdentityNotOptimal),
// F optimal (kNotOptimalInput) and every non-loop cycle of a layer to carry
// its supervised edge (kPreconditionCycleCount). Path P_t runs along layer t
// from the supervised target to the supervised source. When the paths are
// node-disjoint the result is Case 1; otherwise two paths meeting at a node
// are recombined crosswise and their supervised edges swapped.
RearrangementOutcome rearrange(const RegularMultigraph& f, const TropMatrix& m,
                               double eps = kDefaultEpsilon);

struct FixpointResult {
  RearrangementOutcome outcome;
  std::size_t steps = 0;       // surgeries applied
  std::size_t overlap = 0;     // sum over path pairs of shared nodes, at exit
  bool hit_cap = false;
};

// Isolates supervised cycles, then repeats surgeries that strictly reduce
// the path overlap until the paths are disjoint (Case 1). When no surgery
// reduces the overlap, one surgery is applied and its case is reported.
// At most k*n steps.
FixpointResult rearrange_to_fixpoint(const RegularMultigraph& f,
                                     const TropMatrix& m,
                                     double eps = kDefaultEpsilon);

// Builds an optimal supervised assignment set for workers I on tasks J by
// closing the paths of an optimal bijection I^c -> J^c. Throws
// kNotEqualityCase unless the Jacobi equality holds for adj rows J, cols I.
SupervisedAssignmentSet equality_recover(const TropMatrix& m,
                                         const IndexSet& workers,
                                         const IndexSet& tasks,
                                         double eps = kDefaultEpsilon);

}  // namespace tropical
