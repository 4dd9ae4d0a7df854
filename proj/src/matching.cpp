#include "tropical/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hungarian.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

std::vector<double> to_weights(const TropMatrix& m) {
  std::vector<double> w;
  w.reserve(m.rows() * m.cols());
  for (TropValue x : m.entries()) w.push_back(x.to_double());
  return w;
}

void require_square(const TropMatrix& m) {
  if (!m.is_square()) {
    throw Error(Errc::kInvalidArgument, "assignment needs a square matrix, got " +
                                            std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()));
  }
}

TropValue witness_weight(const TropMatrix& m,
                         const std::vector<std::size_t>& row_to_col) {
  TropValue w = TropValue::one();
  for (std::size_t i = 0; i < row_to_col.size(); ++i) {
    w = tmul(w, m(i, row_to_col[i]));
  }
  return w;
}

// Strongly connected component id per node (Kosaraju, iterative).
std::vector<std::size_t> scc_ids(
    const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> radj(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : adj[a]) radj[b].push_back(a);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < adj[node].size()) {
        const std::size_t to = adj[node][next++];
        if (!seen[to]) {
          seen[to] = 1;
          stack.emplace_back(to, 0);
        }
      } else {
        order.push_back(node);
        stack.pop_back();
      }
    }
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnset);
  std::size_t next_id = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != kUnset) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = next_id;
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t to : radj[node]) {
        if (comp[to] == kUnset) {
          comp[to] = next_id;
          stack.push_back(to);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

}  // namespace

AssignmentResult solve(const TropMatrix& m) {
  require_square(m);
  if (m.rows() == 0) throw Error(Errc::kInvalidArgument, "empty matrix");
  const auto weights = to_weights(m);
  auto r = detail::hungarian_max(weights, m.rows());
  if (!r.feasible) {
    throw Error(Errc::kSingularMatrix, "no permutation has finite weight");
  }
  AssignmentResult out{witness_weight(m, r.row_to_col),
                       Permutation(std::move(r.row_to_col)), std::move(r.u),
                       std::move(r.v)};
  return out;
}

MaybeAssignment try_solve(const TropMatrix& m) {
  require_square(m);
  if (m.rows() == 0) return {TropValue::one(), {}};
  const auto weights = to_weights(m);
  auto r = detail::hungarian_max(weights, m.rows());
  if (!r.feasible) return {kNegInf, {}};
  TropValue value = witness_weight(m, r.row_to_col);
  return {value, std::move(r.row_to_col)};
}

Normalization normalize(const TropMatrix& m, NormalizeOptions options) {
  const AssignmentResult sol = solve(m);
  const std::size_t n = m.rows();
  const Permutation& pi = sol.witness;

  // Least v >= 0 with v[j] >= v[pi(i)] + m(i, j) - m(i, pi(i)); a longest
  // path problem without positive cycles because pi is optimal.
  std::vector<double> col(n, 0.0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double tight = m(i, pi(i)).value();
      const double base = col[pi(i)];
      for (std::size_t j = 0; j < n; ++j) {
        const TropValue x = m(i, j);
        if (x.is_neg_inf()) continue;
        const double cand = base + x.value() - tight;
        if (cand > col[j]) {
          col[j] = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = m(i, pi(i)).value() - col[pi(i)];

  TropMatrix reduced(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const TropValue x = m(i, j);
      if (x.is_neg_inf()) continue;
      double b = x.value() - row[i] - col[j];
      if (j == pi(i) || (b > 0.0 && b <= kDefaultEpsilon)) b = 0.0;
      reduced(i, j) = b;
    }
  }

  Permutation column_map = Permutation::identity(n);
  if (options.relocate) {
    column_map = pi;
    TropMatrix moved(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) moved(i, c) = reduced(i, pi(c));
    }
    reduced = std::move(moved);
  }
  return {std::move(reduced), std::move(row), std::move(col), pi,
          std::move(column_map)};
}

OptimalEdgeSet::OptimalEdgeSet(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), mask_(n * n, 0) {
  std::sort(edges_.begin(), edges_.end());
  for (const auto& [r, c] : edges_) mask_[r * n_ + c] = 1;
}

OptimalEdgeSet optimal_edge_set(const TropMatrix& m, double eps) {
  const Normalization norm = normalize(m);
  const std::size_t n = m.rows();
  const Permutation owner = norm.pi0.inverse();  // column -> matched row
  const TropMatrix& b = norm.reduced;

  auto tight = [&](std::size_t i, std::size_t j) {
    const TropValue x = b(i, j);
    return x.is_finite() && std::fabs(x.value()) <= eps;
  };

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (tight(i, j) && owner(j) != i) adj[i].push_back(owner(j));
    }
  }
  const auto comp = scc_ids(adj);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!tight(i, j)) continue;
      if (owner(j) == i || comp[owner(j)] == comp[i]) edges.emplace_back(i, j);
    }
  }
  return OptimalEdgeSet(n, std::move(edges));
}

bool has_multiple_optima(const TropMatrix& m, double eps) {
  return optimal_edge_set(m, eps).size() > m.rows();
}

std::vector<Permutation> enumerate_optima(const TropMatrix& m,
                                          std::size_t limit, double eps) {
  if (limit == 0) throw Error(Errc::kInvalidArgument, "limit must be >= 1");
  const OptimalEdgeSet opt = optimal_edge_set(m, eps);
  const std::size_t n = m.rows();
  std::vector<std::vector<std::size_t>> allowed(n);
  for (const auto& [r, c] : opt.edges()) allowed[r].push_back(c);

  std::vector<char> col_used(n, 0);
  std::vector<std::size_t> image(n, 0);
  std::vector<Permutation> out;

  // Kuhn's algorithm: can rows [from, n) be matched into unused columns?
  auto completable = [&](std::size_t from) {
    std::vector<std::size_t> owner(n, n);
    std::vector<char> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t r) {
      for (std::size_t c : allowed[r]) {
        if (col_used[c] || visited[c]) continue;
        visited[c] = 1;
        if (owner[c] == n || augment(owner[c])) {
          owner[c] = r;
          return true;
        }
      }
      return false;
    };
    for (std::size_t r = from; r < n; ++r) {
      visited.assign(n, 0);
      if (!augment(r)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t row) {
    if (out.size() >= limit) return;
    if (row == n) {
      out.emplace_back(image);
      return;
    }
    for (std::size_t c : allowed[row]) {
      if (col_used[c]) continue;
      col_used[c] = 1;
      image[row] = c;
      if (completable(row + 1)) extend(row + 1);
      col_used[c] = 0;
      if (out.size() >= limit) return;
    }
  };
  extend(0);
  return out;
}

}  // namespace tropical
