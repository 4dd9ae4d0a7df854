#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "tropical/adjoint.hpp"
#include "tropical/error.hpp"
#include "tropical/jacobi.hpp"
#include "tropical/matching.hpp"

using namespace tropical;
using namespace tropical::testing;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

// Layers given 1-based; marked sources 1-based.
RegularMultigraph multigraph1(std::vector<std::vector<std::size_t>> layers,
                              std::vector<std::size_t> marked) {
  std::vector<Permutation> perms;
  std::vector<Edge> sup;
  for (std::size_t t = 0; t < layers.size(); ++t) {
    perms.push_back(perm1(layers[t]));
    --marked[t];
    sup.emplace_back(marked[t], perms.back()(marked[t]));
  }
  const std::size_t n = perms.front().size();
  return build_multigraph(perms, Bijection::from_edges(sup, n), marked);
}

std::vector<Edge> supervised_edges(const RegularMultigraph& f) {
  std::vector<Edge> out;
  for (std::size_t t = 0; t < f.k(); ++t) out.push_back(f.supervised_edge(t));
  return out;
}

}  // namespace

TEST(JacobiCheck, EqualityCase) {
  const JacobiReport r =
      jacobi_check(normalized_a(), one_based({2, 3, 4}, 4), one_based({1, 2, 3}, 4));
  EXPECT_EQ(r.per_m, TropValue(0));
  EXPECT_EQ(r.lhs, TropValue(-2));
  EXPECT_EQ(r.rhs_minor, TropValue(-2));
  EXPECT_TRUE(r.equality);
  EXPECT_FALSE(r.multiplicity);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(JacobiCheck, MultiplicityCase) {
  const TropMatrix a = normalized_a();
  const JacobiReport r = jacobi_check(a, one_based({1, 3, 4}, 4), one_based({1, 2, 3}, 4));
  EXPECT_EQ(r.lhs, TropValue(-3));
  EXPECT_EQ(r.rhs_minor, TropValue(-7));
  EXPECT_FALSE(r.equality);
  EXPECT_TRUE(r.multiplicity);
  ASSERT_EQ(r.witnesses.size(), 2u);
  const TropMatrix adj = adjoint(a).adj;
  EXPECT_NE(r.witnesses[0], r.witnesses[1]);
  for (const auto& w : r.witnesses) EXPECT_EQ(w.weight(adj), TropValue(-3));
}

TEST(JacobiCheck, BothHold) {
  const JacobiReport r =
      jacobi_check(normalized_a(), one_based({3, 4}, 4), one_based({1, 2}, 4));
  EXPECT_EQ(r.lhs, TropValue(-6));
  EXPECT_EQ(r.rhs_minor, TropValue(-6));
  EXPECT_TRUE(r.equality);
  EXPECT_TRUE(r.multiplicity);
}

TEST(JacobiCheck, EmptySelection) {
  const JacobiReport r = jacobi_check(supervision_example(), IndexSet({}, 4), IndexSet({}, 4));
  EXPECT_EQ(r.lhs, TropValue(0));
  EXPECT_EQ(r.rhs_minor, TropValue(11));
  EXPECT_TRUE(r.equality);
  EXPECT_FALSE(r.multiplicity);
}

TEST(JacobiCheck, FullSelectionScalesByPermanent) {
  const JacobiReport r = jacobi_check(supervision_example(), IndexSet::full(4), IndexSet::full(4));
  EXPECT_EQ(r.rhs_minor, TropValue(0));
  EXPECT_EQ(r.lhs, TropValue(33));
  EXPECT_TRUE(r.equality);
}

TEST(JacobiCheck, SingularMatrix) {
  EXPECT_EQ(code_of([] { jacobi_check(TropMatrix(3, 3), IndexSet({0}, 3), IndexSet({0}, 3)); }),
            Errc::kSingularMatrix);
}

TEST(Rearrange, DisjointPathsGiveComplementBijection) {
  // Workers {1,2,3} on tasks {2,3,4}.
  const RegularMultigraph f =
      multigraph1({{1, 2, 3, 4}, {1, 2, 3, 4}, {4, 2, 3, 1}}, {2, 3, 1});
  const RearrangementOutcome out = rearrange(f, normalized_a());
  EXPECT_EQ(out.tag, RearrangeCase::kCase1);
  ASSERT_TRUE(out.case1.has_value());
  EXPECT_EQ(out.case1->complement.edges(), edges1({{4, 1}}));
  EXPECT_EQ(out.case1->tau, perm1({4, 2, 3, 1}));
  EXPECT_EQ(out.multigraph.layers, f.layers);
}

TEST(Rearrange, SourceEqualsTarget) {
  // Workers {1,2,3} on tasks {1,3,4}: the path 1->2 of the first layer starts
  // where the path 4->1 of the third ends.
  const RegularMultigraph f =
      multigraph1({{2, 1, 3, 4}, {1, 2, 3, 4}, {4, 2, 3, 1}}, {2, 3, 1});
  const TropMatrix a = normalized_a();
  const RearrangementOutcome out = rearrange(f, a);
  EXPECT_EQ(out.tag, RearrangeCase::kCase2a);
  const RegularMultigraph& g = out.multigraph;
  EXPECT_EQ(g.layers[0], perm1({1, 2, 3, 4}));
  EXPECT_EQ(g.layers[1], perm1({1, 2, 3, 4}));
  EXPECT_EQ(g.layers[2], perm1({2, 4, 3, 1}));
  EXPECT_EQ(supervised_edges(g), edges1({{1, 1}, {3, 3}, {2, 4}}));
  EXPECT_EQ(base_weight(g, a), base_weight(f, a));
  EXPECT_EQ(base_weight(g, a), TropValue(-3));
  EXPECT_NE(g.supervision, f.supervision);
}

TEST(Rearrange, EndpointOnInteriorNode) {
  // Workers {1,2} on tasks {3,4}.
  const RegularMultigraph f = multigraph1({{3, 2, 1, 4}, {2, 4, 3, 1}}, {1, 2});
  const TropMatrix a = normalized_a();
  const RearrangementOutcome out = rearrange(f, a);
  EXPECT_EQ(out.tag, RearrangeCase::kCase2b);
  EXPECT_EQ(out.multigraph.layers[0], perm1({2, 3, 1, 4}));
  EXPECT_EQ(out.multigraph.layers[1], perm1({4, 2, 3, 1}));
  EXPECT_EQ(supervised_edges(out.multigraph), edges1({{2, 3}, {1, 4}}));
  EXPECT_EQ(base_weight(out.multigraph, a), TropValue(-6));
}

TEST(Rearrange, SharedInteriorNode) {
  const TropMatrix zeros(5, 5, 0);
  // Paths 3->5->1 and 4->5->2 meet inside at 5.
  const RegularMultigraph f = multigraph1({{3, 2, 5, 4, 1}, {1, 4, 3, 5, 2}}, {1, 2});
  const RearrangementOutcome out = rearrange(f, zeros);
  EXPECT_EQ(out.tag, RearrangeCase::kCase2c);
  EXPECT_EQ(out.multigraph.layers[0], perm1({1, 3, 5, 4, 2}));
  EXPECT_EQ(out.multigraph.layers[1], perm1({4, 2, 3, 5, 1}));
  EXPECT_EQ(supervised_edges(out.multigraph), edges1({{2, 3}, {1, 4}}));
}

TEST(Rearrange, IdentityLayersAreCase1) {
  const RegularMultigraph f =
      multigraph1({{1, 2, 3, 4}, {1, 2, 3, 4}}, {1, 3});
  const RearrangementOutcome out = rearrange(f, normalized_a());
  EXPECT_EQ(out.tag, RearrangeCase::kCase1);
  EXPECT_TRUE(out.case1->tau.is_identity());
  EXPECT_EQ(out.case1->complement.edges(), edges1({{2, 2}, {4, 4}}));
}

TEST(Rearrange, Preconditions) {
  const RegularMultigraph ids = multigraph1({{1, 2, 3, 4}}, {1});
  EXPECT_EQ(code_of([&] { rearrange(ids, supervision_example()); }), Errc::kIdentityNotOptimal);

  // Optimal for these tasks is -2, not -5.
  const RegularMultigraph poor = multigraph1({{2, 1, 3, 4}}, {1});
  EXPECT_EQ(code_of([&] { rearrange(poor, normalized_a()); }), Errc::kNotOptimalInput);

  // A 2-cycle on {3,4} beside the supervised loop at 1.
  const RegularMultigraph extra = multigraph1({{1, 2, 4, 3}}, {1});
  const TropMatrix zeros(4, 4, 0);
  EXPECT_EQ(code_of([&] { rearrange(extra, zeros); }), Errc::kPreconditionCycleCount);
  const RegularMultigraph cleaned = isolate_supervised_cycles(extra);
  EXPECT_TRUE(cleaned.layers[0].is_identity());
  EXPECT_EQ(rearrange(cleaned, zeros).tag, RearrangeCase::kCase1);
}

TEST(RearrangeToFixpoint, LoopErasureReachesCase1) {
  const TropMatrix zeros(6, 6, 0);
  // Paths 3->5->1 and 4->1->5->2 share 1 and 5.
  const RegularMultigraph f = multigraph1({{3, 2, 5, 4, 1, 6}, {5, 4, 3, 1, 2, 6}}, {1, 2});
  const FixpointResult r = rearrange_to_fixpoint(f, zeros);
  EXPECT_EQ(r.outcome.tag, RearrangeCase::kCase1);
  EXPECT_EQ(r.steps, 1u);
  EXPECT_EQ(r.overlap, 0u);
  EXPECT_FALSE(r.hit_cap);
  EXPECT_EQ(r.outcome.case1->complement.edges(), edges1({{3, 5}, {4, 1}, {5, 2}, {6, 6}}));
}

TEST(RearrangeToFixpoint, StopsWhenNoSurgeryShrinksOverlap) {
  const TropMatrix a = normalized_a();
  const RegularMultigraph f = multigraph1({{3, 2, 1, 4}, {2, 4, 3, 1}}, {1, 2});
  const FixpointResult r = rearrange_to_fixpoint(f, a);
  EXPECT_EQ(r.outcome.tag, RearrangeCase::kCase2b);
  EXPECT_EQ(r.steps, 1u);
  EXPECT_EQ(base_weight(r.outcome.multigraph, a), TropValue(-6));
}

TEST(RearrangeToFixpoint, Case1Directly) {
  const RegularMultigraph f =
      multigraph1({{1, 2, 3, 4}, {1, 2, 3, 4}, {4, 2, 3, 1}}, {2, 3, 1});
  const FixpointResult r = rearrange_to_fixpoint(f, normalized_a());
  EXPECT_EQ(r.outcome.tag, RearrangeCase::kCase1);
  EXPECT_EQ(r.steps, 0u);
}

TEST(EqualityRecover, ClosesComplementPaths) {
  const TropMatrix a = normalized_a();
  const SupervisedAssignmentSet s = equality_recover(a, one_based({1, 2}, 4), one_based({3, 4}, 4));
  EXPECT_EQ(s.supervision.edges(), edges1({{1, 4}, {2, 3}}));
  ASSERT_EQ(s.assignments.size(), 2u);
  EXPECT_EQ(s.assignments[0], perm1({4, 2, 3, 1}));
  EXPECT_EQ(s.assignments[1], perm1({1, 3, 2, 4}));
  EXPECT_EQ(s.base_value, TropValue(-6));
  EXPECT_EQ(s.base_value, optimal_base_value(a, one_based({1, 2}, 4), one_based({3, 4}, 4)));
  EXPECT_FALSE(s.priority_value.has_value());
}

TEST(EqualityRecover, SameWorkersAndTasksGivesIdentities) {
  const TropMatrix a = normalized_a();
  const IndexSet both = one_based({2, 4}, 4);
  const SupervisedAssignmentSet s = equality_recover(a, both, both);
  EXPECT_EQ(s.supervision.edges(), edges1({{2, 2}, {4, 4}}));
  for (const auto& p : s.assignments) EXPECT_TRUE(p.is_identity());
}

TEST(EqualityRecover, RejectsMultiplicityOnlyInstance) {
  EXPECT_EQ(code_of([] {
              equality_recover(normalized_a(), one_based({1, 2, 3}, 4), one_based({1, 3, 4}, 4));
            }),
            Errc::kNotEqualityCase);
}

TEST(EqualityRecover, UnnormalizedInput) {
  const TropMatrix m = supervision_example();
  int found = 0;
  for (std::size_t k = 1; k < 4; ++k) {
    for (const auto& workers : subsets(4, k)) {
      for (const auto& tasks : subsets(4, k)) {
        if (!jacobi_check(m, tasks, workers).equality) continue;
        ++found;
        const SupervisedAssignmentSet s = equality_recover(m, workers, tasks);
        EXPECT_EQ(s.base_value, optimal_base_value(m, workers, tasks));
        EXPECT_EQ(base_weight(s.multigraph(), m), s.base_value);
        EXPECT_EQ(s.supervision.domain(), workers);
        EXPECT_EQ(s.supervision.codomain(), tasks);
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(JacobiProperties, DisjunctionAndNormalizationInvariance) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const TropMatrix m = random_matrix(rng, n, -9, 9);
    const TropMatrix b = normalize(m).reduced;
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& rows : subsets(n, k)) {
        for (const auto& cols : subsets(n, k)) {
          const JacobiReport r = jacobi_check(m, rows, cols);
          ASSERT_TRUE(r.equality || r.multiplicity);
          const JacobiReport rb = jacobi_check(b, rows, cols);
          EXPECT_EQ(r.equality, rb.equality);
          EXPECT_EQ(r.multiplicity, rb.multiplicity);
        }
      }
    }
  }
}

TEST(JacobiProperties, RearrangementConservesWeight) {
  std::mt19937 rng(52);
  int case1 = 0, case2 = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const std::size_t k = 1 + rng() % (n - 1);
    const TropMatrix b = normalize(random_matrix(rng, n, -4, 4), {.relocate = true}).reduced;
    const IndexSet workers = random_subset(rng, n, k), tasks = random_subset(rng, n, k);
    const TropMatrix adj_ji = adjoint_submatrix(b, tasks, workers);
    const Permutation beta = solve(adj_ji).witness;  // task pos -> worker pos
    std::vector<Edge> sup;
    for (std::size_t s = 0; s < k; ++s) sup.emplace_back(workers[beta(s)], tasks[s]);
    const Bijection sigma = Bijection::from_edges(sup, n);
    const RegularMultigraph f = build_multigraph(recover_assignments(b, sigma), sigma);

    const FixpointResult r = rearrange_to_fixpoint(f, b);
    EXPECT_LE(r.steps, k * n);
    EXPECT_EQ(base_weight(r.outcome.multigraph, b), base_weight(f, b));
    if (r.outcome.tag == RearrangeCase::kCase1) {
      ++case1;
      const auto& c = r.outcome.case1->complement;
      EXPECT_EQ(c.weight(b), compound_entry(b, workers.complement(), tasks.complement()).value);
    } else {
      ++case2;
      EXPECT_FALSE(jacobi_check(b, tasks, workers).equality && r.overlap == 0);
    }
  }
  EXPECT_GT(case1, 0);
  EXPECT_GT(case2, 0);
}
