#pragma once

// Internal dense kernel shared by the matching and adjoint modules.

#include <cstddef>
#include <span>
#include <vector>

namespace tropical::detail {

struct HungarianResult {
  bool feasible = false;
  std::vector<std::size_t> row_to_col;
  // Max-form potentials: u[i] + v[j] >= w(i, j).
  std::vector<double> u;
  std::vector<double> v;
};

// Reusable buffers so repeated solves (adjoint minors) do not reallocate.
struct HungarianWorkspace {
  std::vector<double> u, v, minv;
  std::vector<std::size_t> match, way;
  std::vector<char> used;
};

// `weights` is n*n row-major; -HUGE_VAL marks a forbidden entry.
HungarianResult hungarian_max(std::span<const double> weights, std::size_t n,
                              HungarianWorkspace& ws);

inline HungarianResult hungarian_max(std::span<const double> weights,
                                     std::size_t n) {
  HungarianWorkspace ws;
  return hungarian_max(weights, n, ws);
}

}  // namespace tropical::detail
