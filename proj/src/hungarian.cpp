#include "hungarian.hpp"

#include <cmath>
#include <limits>

namespace tropical::detail {

// Shortest augmenting path formulation on costs -w, 1-based with column 0 as
// the virtual root.
HungarianResult hungarian_max(std::span<const double> weights, std::size_t n,
                              HungarianWorkspace& ws) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  HungarianResult result;
  ws.u.assign(n + 1, 0.0);
  ws.v.assign(n + 1, 0.0);
  ws.match.assign(n + 1, 0);
  ws.way.assign(n + 1, 0);
  ws.minv.resize(n + 1);
  ws.used.resize(n + 1);
  double* u = ws.u.data();
  double* v = ws.v.data();
  double* minv = ws.minv.data();
  std::size_t* match = ws.match.data();
  std::size_t* way = ws.way.data();
  char* used = ws.used.data();

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(minv, minv + n + 1, kInf);
    std::fill(used, used + n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      const double* row = weights.data() + (i0 - 1) * n;
      const double ui = u[i0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double w = row[j - 1];
        if (w != -HUGE_VAL) {
          const double cur = -w - ui - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0) return result;  // no finite augmenting path
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.feasible = true;
  result.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.row_to_col[match[j] - 1] = j - 1;
  result.u.resize(n);
  result.v.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    result.u[k] = -u[k + 1];
    result.v[k] = -v[k + 1];
  }
  return result;
}

}  // namespace tropical::detail
