#include "tropical/bijection_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hungarian.hpp"
#include "tropical/error.hpp"

namespace tropical {

PathCycleDecomposition decompose(const Bijection& b) {
  const std::size_t n = b.universe();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(n, kNone);
  for (const auto& [s, t] : b.edges()) next[s] = t;

  PathCycleDecomposition out;
  std::vector<char> seen(n, 0);
  for (std::size_t s : b.domain()) {
    if (b.codomain().contains(s)) continue;
    NodeSeq path{s};
    seen[s] = 1;
    for (std::size_t x = next[s]; x != kNone; x = next[x]) {
      path.push_back(x);
      seen[x] = 1;
    }
    out.paths.push_back(std::move(path));
  }
  for (std::size_t s : b.domain()) {
    if (seen[s]) continue;
    NodeSeq cycle;
    for (std::size_t x = s; !seen[x]; x = next[x]) {
      cycle.push_back(x);
      seen[x] = 1;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Edge> path_edges(const NodeSeq& path) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a + 1 < path.size(); ++a) {
    out.emplace_back(path[a], path[a + 1]);
  }
  return out;
}

std::vector<Edge> cycle_edges(const NodeSeq& cycle) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < cycle.size(); ++a) {
    out.emplace_back(cycle[a], cycle[(a + 1) % cycle.size()]);
  }
  return out;
}

TropValue path_weight(const NodeSeq& path, const TropMatrix& m) {
  TropValue w = TropValue::one();
  for (const auto& [s, t] : path_edges(path)) w = tmul(w, m(s, t));
  return w;
}

TropValue cycle_weight(const NodeSeq& cycle, const TropMatrix& m) {
  TropValue w = TropValue::one();
  for (const auto& [s, t] : cycle_edges(cycle)) w = tmul(w, m(s, t));
  return w;
}

ClosedPath close_path(const NodeSeq& path, std::size_t n) {
  if (path.size() < 2) {
    throw Error(Errc::kInvalidArgument, "a path needs at least two nodes");
  }
  std::vector<std::size_t> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = x;
  std::vector<char> seen(n, 0);
  for (std::size_t x : path) {
    if (x >= n) throw Error(Errc::kIndexOutOfRange, "path node outside [n]");
    if (seen[x]) throw Error(Errc::kInvalidArgument, "path repeats a node");
    seen[x] = 1;
  }
  for (const auto& [s, t] : cycle_edges(path)) image[s] = t;
  return {Permutation(std::move(image)), {path.back(), path.front()}};
}

Bijection extend_to_permutation(const Bijection& b) {
  auto edges = b.edges();
  for (const auto& p : decompose(b).paths) edges.emplace_back(p.back(), p.front());
  return Bijection::from_edges(edges, b.universe());
}

RegularMultigraph build_multigraph(std::vector<Permutation> layers,
                                   const Bijection& supervision,
                                   std::vector<std::size_t> marked_sources) {
  const std::size_t n = supervision.universe();
  if (layers.size() != supervision.size() ||
      marked_sources.size() != layers.size()) {
    throw Error(Errc::kInvalidArgument,
                "need one layer and one marked source per supervised edge");
  }
  for (const auto& layer : layers) {
    if (layer.size() != n) {
      throw Error(Errc::kInvalidArgument, "layer size differs from n");
    }
  }
  std::vector<std::size_t> sorted = marked_sources;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted != supervision.domain().indices()) {
    throw Error(Errc::kDisjointnessViolation,
                "marked sources must hit each supervised source exactly once");
  }
  for (std::size_t t = 0; t < layers.size(); ++t) {
    const std::size_t s = marked_sources[t];
    if (layers[t](s) != supervision(s)) {
      throw Error(Errc::kMarkedEdgeMissing,
                  "layer " + std::to_string(t + 1) + " does not contain edge " +
                      std::to_string(s + 1) + "->" +
                      std::to_string(supervision(s) + 1));
    }
  }
  return {n, std::move(layers), supervision, std::move(marked_sources)};
}

RegularMultigraph build_multigraph(std::vector<Permutation> layers,
                                   const Bijection& supervision) {
  return build_multigraph(std::move(layers), supervision,
                          supervision.domain().indices());
}

TropValue base_weight(const RegularMultigraph& f, const TropMatrix& m) {
  TropValue total = TropValue::one();
  for (std::size_t t = 0; t < f.k(); ++t) {
    for (std::size_t i = 0; i < f.n; ++i) {
      if (i == f.marked_source[t]) continue;
      const TropValue x = m(i, f.layers[t](i));
      if (x.is_neg_inf()) {
        throw Error(Errc::kInfeasibleWeight,
                    "layer " + std::to_string(t + 1) + " uses -inf entry (" +
                        std::to_string(i + 1) + "," +
                        std::to_string(f.layers[t](i) + 1) + ")");
      }
      total = tmul(total, x);
    }
  }
  return total;
}

std::vector<Permutation> decompose_k_regular(const std::vector<Edge>& edges,
                                             std::size_t n) {
  if (n == 0) {
    if (!edges.empty()) throw Error(Errc::kNotRegular, "edges on zero nodes");
    return {};
  }
  if (edges.size() % n != 0) {
    throw Error(Errc::kNotRegular, "edge count is not a multiple of n");
  }
  const std::size_t k = edges.size() / n;
  std::vector<std::size_t> count(n * n, 0), out_deg(n, 0), in_deg(n, 0);
  for (const auto& [s, t] : edges) {
    if (s >= n || t >= n) throw Error(Errc::kIndexOutOfRange, "edge outside [n]");
    ++count[s * n + t];
    ++out_deg[s];
    ++in_deg[t];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (out_deg[x] != k || in_deg[x] != k) {
      throw Error(Errc::kNotRegular, "node " + std::to_string(x + 1) +
                                         " does not have in/out degree " +
                                         std::to_string(k));
    }
  }
  std::vector<Permutation> layers;
  std::vector<double> weights(n * n);
  detail::HungarianWorkspace ws;
  for (std::size_t layer = 0; layer < k; ++layer) {
    for (std::size_t e = 0; e < n * n; ++e) weights[e] = count[e] ? 0.0 : -HUGE_VAL;
    auto r = detail::hungarian_max(weights, n, ws);
    if (!r.feasible) {
      throw Error(Errc::kNotRegular, "no perfect matching left in the multigraph");
    }
    for (std::size_t i = 0; i < n; ++i) --count[i * n + r.row_to_col[i]];
    layers.emplace_back(std::move(r.row_to_col));
  }
  return layers;
}

}  // namespace tropical
