#include "tropical/supervision.hpp"

#include <string>

#include "tropical/adjoint.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

void check_frame(const TropMatrix& m, const IndexSet& workers,
                 const IndexSet& tasks) {
  if (!m.is_square()) {
    throw Error(Errc::kInvalidArgument, "supervision needs a square matrix");
  }
  if (m.rows() < 2) throw Error(Errc::kInvalidArgument, "supervision needs n >= 2");
  if (workers.universe() != m.rows() || tasks.universe() != m.rows()) {
    throw Error(Errc::kIndexOutOfRange, "index set universe does not match");
  }
  if (workers.size() != tasks.size() || workers.empty()) {
    throw Error(Errc::kInvalidArgument, "need |I| = |J| >= 1");
  }
}

}  // namespace

RegularMultigraph SupervisedAssignmentSet::multigraph() const {
  return build_multigraph(assignments, supervision);
}

TropValue optimal_base_value(const TropMatrix& m, const IndexSet& workers,
                             const IndexSet& tasks) {
  check_frame(m, workers, tasks);
  const TropValue v = try_solve(adjoint_submatrix(m, tasks, workers)).value;
  if (v.is_neg_inf()) {
    throw Error(Errc::kInfeasible, "no finite set of supervised assignments");
  }
  return v;
}

OptimalEdgeSet validate_priority(const TropMatrix& c, const TropMatrix& m,
                                 const IndexSet& workers,
                                 const IndexSet& tasks) {
  check_frame(m, workers, tasks);
  const std::size_t k = workers.size();
  if (c.rows() != k || c.cols() != k) {
    throw Error(Errc::kInvalidArgument,
                "priority matrix must be " + std::to_string(k) + "x" +
                    std::to_string(k));
  }
  const TropMatrix adj_ji = adjoint_submatrix(m, tasks, workers);
  if (try_solve(adj_ji).value.is_neg_inf()) {
    throw Error(Errc::kInfeasible, "no finite set of supervised assignments");
  }
  OptimalEdgeSet edges = optimal_edge_set(adj_ji);

  std::vector<std::pair<std::size_t, std::size_t>> offending;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      if (c(r, s).is_finite() && !edges.contains(s, r)) offending.emplace_back(r, s);
    }
  }
  if (!offending.empty()) {
    std::string list;
    for (const auto& [r, s] : offending) {
      if (!list.empty()) list += ", ";
      list += "(" + std::to_string(workers[r] + 1) + "," +
              std::to_string(tasks[s] + 1) + ")";
    }
    throw EssentialEdgeError(std::move(offending),
                             "finite priority on non-optimal supervision " + list);
  }
  if (try_solve(c).value.is_neg_inf()) {
    throw Error(Errc::kNoFiniteBijection,
                "priority matrix has no finite bijection");
  }
  return edges;
}

SupervisedAssignmentSet solve_supervised(const TropMatrix& m,
                                         const IndexSet& workers,
                                         const IndexSet& tasks,
                                         const TropMatrix& priority) {
  validate_priority(priority, m, workers, tasks);
  const Permutation best = enumerate_optima(priority, 1).front();
  std::vector<std::size_t> image(workers.size());
  for (std::size_t r = 0; r < workers.size(); ++r) image[r] = tasks[best(r)];
  Bijection sigma(workers, tasks, std::move(image));

  SupervisedAssignmentSet out{sigma, recover_assignments(m, sigma),
                              optimal_base_value(m, workers, tasks),
                              best.weight(priority)};
  return out;
}

std::vector<Permutation> recover_assignments(const TropMatrix& m,
                                             const Bijection& supervision) {
  if (!m.is_square() || supervision.universe() != m.rows()) {
    throw Error(Errc::kInvalidArgument, "supervision does not fit the matrix");
  }
  std::vector<Permutation> out;
  out.reserve(supervision.size());
  for (const auto& [i, j] : supervision.edges()) {
    const AdjointEntry entry = adjoint_entry(m, j, i);
    if (!entry.witness) {
      throw Error(Errc::kInfeasibleEdge,
                  "no finite assignment sends " + std::to_string(i + 1) +
                      " to " + std::to_string(j + 1));
    }
    std::vector<std::size_t> image(m.rows());
    for (const auto& [s, t] : entry.witness->edges()) image[s] = t;
    image[i] = j;
    out.emplace_back(std::move(image));
  }
  return out;
}

}  // namespace tropical
