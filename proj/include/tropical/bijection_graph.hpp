#pragma once

#include <cstddef>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/permutation.hpp"
#include "tropical/value.hpp"

namespace tropical {

// Node sequence. A cycle closes from back() to front(); a loop is a cycle of
// one node. A path runs front() -> ... -> back() and has at least 2 nodes.
using NodeSeq = std::vector<std::size_t>;

// Edges i -> b(i) of a bijection split into node-disjoint cycles and maximal
// elementary paths. Paths start in domain \ codomain and end in
// codomain \ domain; they are sorted by source. Cycles are rotated to start
// at their smallest node and sorted by it.
struct PathCycleDecomposition {
  std::vector<NodeSeq> cycles;
  std::vector<NodeSeq> paths;
};

PathCycleDecomposition decompose(const Bijection& b);

std::vector<Edge> path_edges(const NodeSeq& path);
std::vector<Edge> cycle_edges(const NodeSeq& cycle);
TropValue path_weight(const NodeSeq& path, const TropMatrix& m);
TropValue cycle_weight(const NodeSeq& cycle, const TropMatrix& m);

// The path closed into a cycle by the edge (back, front), with loops on every
// other node of [n]. Throws kInvalidArgument for paths shorter than 2 nodes
// or with repeated nodes.
struct ClosedPath {
  Permutation permutation;
  Edge supervised;  // (target, source) of the path
};
ClosedPath close_path(const NodeSeq& path, std::size_t n);

// A bijection on domain ∪ codomain agreeing with b, sending each path target
// back to its source.
Bijection extend_to_permutation(const Bijection& b);

// k permutations of [n], each carrying one marked (supervised) edge. Layer t
// is marked at source marked_source[t]; the marked edges together form the
// bijection `supervision`.
struct RegularMultigraph {
  std::size_t n = 0;
  std::vector<Permutation> layers;
  Bijection supervision;
  std::vector<std::size_t> marked_source;

  std::size_t k() const { return layers.size(); }
  Edge supervised_edge(std::size_t t) const {
    return {marked_source[t], layers[t](marked_source[t])};
  }
};

// Validates and assembles. marked_sources[t] declares which supervision edge
// layer t carries. Throws kMarkedEdgeMissing when a layer does not contain
// its declared edge, kDisjointnessViolation when the declared sources repeat
// or do not cover the supervision domain, kInvalidArgument on size mismatch.
RegularMultigraph build_multigraph(std::vector<Permutation> layers,
                                   const Bijection& supervision,
                                   std::vector<std::size_t> marked_sources);

// Same, pairing layer t with the t-th smallest supervised source.
RegularMultigraph build_multigraph(std::vector<Permutation> layers,
                                   const Bijection& supervision);

// Sum over layers of the layer weight without its supervised edge. Throws
// kInfeasibleWeight when a counted entry is -inf.
TropValue base_weight(const RegularMultigraph& f, const TropMatrix& m);

// Splits a multiset of n*k edges with in- and out-degree k everywhere into k
// permutations, by repeated perfect matching on the edge-count graph. Throws
// kNotRegular when the degree condition fails.
std::vector<Permutation> decompose_k_regular(const std::vector<Edge>& edges,
                                             std::size_t n);

}  // namespace tropical
