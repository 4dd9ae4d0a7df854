#include "tropical/jacobi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tropical/adjoint.hpp"
#include "tropical/error.hpp"
#include "tropical/matching.hpp"

namespace tropical {

std::string_view case_name(RearrangeCase c) {
  switch (c) {
    case RearrangeCase::kCase1: return "Case1";
    case RearrangeCase::kCase2a: return "Case2a";
    case RearrangeCase::kCase2b: return "Case2b";
    case RearrangeCase::kCase2c: return "Case2c";
  }
  return "?";
}

JacobiReport jacobi_check(const TropMatrix& m, const IndexSet& rows,
                          const IndexSet& cols, double eps) {
  if (!m.is_square()) throw Error(Errc::kInvalidArgument, "matrix must be square");
  if (rows.universe() != m.rows() || cols.universe() != m.rows()) {
    throw Error(Errc::kIndexOutOfRange, "index set universe does not match");
  }
  if (rows.size() != cols.size()) {
    throw Error(Errc::kInvalidArgument, "need |I| = |J|");
  }
  JacobiReport report;
  report.per_m = solve(m).value;
  const double per = report.per_m.value();
  const auto k = static_cast<double>(rows.size());

  const TropMatrix adj = adjoint_submatrix(m, rows, cols);
  report.lhs = try_solve(adj).value;
  report.rhs_minor = compound_entry(m, cols.complement(), rows.complement()).value;
  const TropValue shifted = report.rhs_minor.is_finite()
                                ? TropValue(report.rhs_minor.value() + (k - 1) * per)
                                : kNegInf;
  report.equality = approx_equal(report.lhs, shifted, eps);

  if (!rows.empty() && report.lhs.is_finite()) {
    report.multiplicity = has_multiple_optima(adj, eps);
    if (report.multiplicity) {
      for (const auto& p : enumerate_optima(adj, 2, eps)) {
        std::vector<std::size_t> image(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) image[r] = cols[p(r)];
        report.witnesses.emplace_back(rows, cols, std::move(image));
      }
    }
  }
  return report;
}

namespace {

struct Config {
  std::size_t i, j, node;
  RearrangeCase tag;
};

// Walks layer t from the supervised target back to the supervised source.
NodeSeq supervised_path(const RegularMultigraph& f, std::size_t t) {
  const auto [a, b] = f.supervised_edge(t);
  NodeSeq path{b};
  for (std::size_t x = b; x != a;) {
    x = f.layers[t](x);
    path.push_back(x);
  }
  return path;
}

std::vector<NodeSeq> supervised_paths(const RegularMultigraph& f) {
  std::vector<NodeSeq> out;
  for (std::size_t t = 0; t < f.k(); ++t) out.push_back(supervised_path(f, t));
  return out;
}

std::vector<char> membership(const NodeSeq& p, std::size_t n) {
  std::vector<char> in(n, 0);
  for (std::size_t x : p) in[x] = 1;
  return in;
}

std::size_t overlap(const std::vector<NodeSeq>& paths, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (const auto& p : paths) {
    for (std::size_t x : p) ++count[x];
  }
  std::size_t total = 0;
  for (std::size_t c : count) total += c > 1 ? c * (c - 1) / 2 : 0;
  return total;
}

RearrangeCase classify(const NodeSeq& pi, const NodeSeq& pj, std::size_t x) {
  const bool si = x == pi.front(), ti = x == pi.back();
  const bool sj = x == pj.front(), tj = x == pj.back();
  if ((si && tj) || (sj && ti)) return RearrangeCase::kCase2a;
  if (si || ti || sj || tj) return RearrangeCase::kCase2b;
  return RearrangeCase::kCase2c;
}

// Shared nodes for every pair i < j, pairs in order, nodes ascending.
std::vector<Config> configurations(const std::vector<NodeSeq>& paths,
                                   std::size_t n) {
  std::vector<Config> out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto in_i = membership(paths[i], n);
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      NodeSeq shared;
      for (std::size_t x : paths[j]) {
        if (in_i[x]) shared.push_back(x);
      }
      std::sort(shared.begin(), shared.end());
      for (std::size_t x : shared) {
        out.push_back({i, j, x, classify(paths[i], paths[j], x)});
      }
    }
  }
  return out;
}

NodeSeq loop_erase(const NodeSeq& walk, std::size_t n) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kAbsent);
  NodeSeq out;
  for (std::size_t x : walk) {
    if (pos[x] != kAbsent) {
      for (std::size_t q = pos[x] + 1; q < out.size(); ++q) pos[out[q]] = kAbsent;
      out.resize(pos[x] + 1);
    } else {
      pos[x] = out.size();
      out.push_back(x);
    }
  }
  return out;
}

// Layer whose only non-loop cycle is `path` closed by (back, front).
Permutation layer_from_path(const NodeSeq& path, std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = x;
  for (const auto& [s, t] : cycle_edges(path)) image[s] = t;
  return Permutation(std::move(image));
}

RegularMultigraph surgery(const RegularMultigraph& f,
                          const std::vector<NodeSeq>& paths, const Config& c) {
  const NodeSeq& pi = paths[c.i];
  const NodeSeq& pj = paths[c.j];
  const auto xi = static_cast<std::ptrdiff_t>(
      std::find(pi.begin(), pi.end(), c.node) - pi.begin());
  const auto xj = static_cast<std::ptrdiff_t>(
      std::find(pj.begin(), pj.end(), c.node) - pj.begin());

  NodeSeq a(pi.begin(), pi.begin() + xi + 1);
  a.insert(a.end(), pj.begin() + xj + 1, pj.end());
  NodeSeq b(pj.begin(), pj.begin() + xj + 1);
  b.insert(b.end(), pi.begin() + xi + 1, pi.end());
  a = loop_erase(a, f.n);
  b = loop_erase(b, f.n);

  auto layers = f.layers;
  auto marked = f.marked_source;
  layers[c.i] = layer_from_path(a, f.n);
  marked[c.i] = a.back();
  layers[c.j] = layer_from_path(b, f.n);
  marked[c.j] = b.back();

  std::vector<Edge> sup;
  for (std::size_t t = 0; t < layers.size(); ++t) {
    sup.emplace_back(marked[t], layers[t](marked[t]));
  }
  return build_multigraph(std::move(layers), Bijection::from_edges(sup, f.n),
                          std::move(marked));
}

void require_identity_optimal(const TropMatrix& m, double eps) {
  TropValue trace = TropValue::one();
  for (std::size_t i = 0; i < m.rows(); ++i) trace = tmul(trace, m(i, i));
  if (!approx_equal(solve(m).value, trace, eps)) {
    throw Error(Errc::kIdentityNotOptimal,
                "the identity must be an optimal permutation; normalize first");
  }
}

void require_cycle_precondition(const RegularMultigraph& f) {
  for (std::size_t t = 0; t < f.k(); ++t) {
    const auto cyc = membership(supervised_path(f, t), f.n);
    for (std::size_t x = 0; x < f.n; ++x) {
      if (!cyc[x] && f.layers[t](x) != x) {
        throw Error(Errc::kPreconditionCycleCount,
                    "layer " + std::to_string(t + 1) +
                        " has a non-loop cycle without its supervised edge");
      }
    }
  }
}

void require_optimal(const RegularMultigraph& f, const TropMatrix& m,
                     double eps) {
  const TropValue have = base_weight(f, m);
  const TropValue best =
      optimal_base_value(m, f.supervision.domain(), f.supervision.codomain());
  if (!approx_equal(have, best, eps)) {
    throw Error(Errc::kNotOptimalInput,
                "base weight " + to_string(have) + " differs from optimum " +
                    to_string(best));
  }
}

void check_conserved(TropValue before, TropValue after, double eps) {
  if (approx_equal(before, after, eps)) return;
  if (after > before) {
    throw Error(Errc::kNotOptimalInput,
                "rearrangement increased the base weight; input was not optimal");
  }
  throw std::logic_error("rearrangement decreased the base weight");
}

RearrangementOutcome case1_outcome(const RegularMultigraph& f,
                                   const std::vector<NodeSeq>& paths,
                                   const TropMatrix& m, double eps) {
  const std::size_t n = f.n;
  std::vector<std::size_t> tau(n);
  for (std::size_t x = 0; x < n; ++x) tau[x] = x;
  std::vector<Edge> comp;
  std::vector<char> covered(n, 0);
  for (const auto& p : paths) {
    for (const auto& [s, t] : cycle_edges(p)) tau[s] = t;
    for (const auto& e : path_edges(p)) comp.push_back(e);
    for (std::size_t x : p) covered[x] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!covered[x]) comp.emplace_back(x, x);
  }
  Bijection complement = Bijection::from_edges(comp, n);
  const TropValue best =
      compound_entry(m, complement.domain(), complement.codomain()).value;
  if (!approx_equal(complement.weight(m), best, eps)) {
    throw Error(Errc::kNotOptimalInput,
                "complement bijection is not optimal; input was not optimal");
  }
  return {RearrangeCase::kCase1, f,
          Case1Payload{Permutation(std::move(tau)), std::move(complement)}};
}

// Canonical choice: earliest configuration of the smallest case.
const Config& canonical(const std::vector<Config>& configs) {
  auto best = configs.begin();
  for (auto it = configs.begin(); it != configs.end(); ++it) {
    if (it->tag < best->tag) best = it;
  }
  return *best;
}

}  // namespace

RegularMultigraph isolate_supervised_cycles(const RegularMultigraph& f) {
  auto layers = f.layers;
  for (std::size_t t = 0; t < f.k(); ++t) {
    const auto cyc = membership(supervised_path(f, t), f.n);
    std::vector<std::size_t> image = layers[t].image();
    for (std::size_t x = 0; x < f.n; ++x) {
      if (!cyc[x]) image[x] = x;
    }
    layers[t] = Permutation(std::move(image));
  }
  return build_multigraph(std::move(layers), f.supervision, f.marked_source);
}

RearrangementOutcome rearrange(const RegularMultigraph& f, const TropMatrix& m,
                               double eps) {
  require_identity_optimal(m, eps);
  require_cycle_precondition(f);
  require_optimal(f, m, eps);
  const auto paths = supervised_paths(f);
  const auto configs = configurations(paths, f.n);
  if (configs.empty()) return case1_outcome(f, paths, m, eps);
  const Config& c = canonical(configs);
  RegularMultigraph next = surgery(f, paths, c);
  check_conserved(base_weight(f, m), base_weight(next, m), eps);
  return {c.tag, std::move(next), std::nullopt};
}

FixpointResult rearrange_to_fixpoint(const RegularMultigraph& f,
                                     const TropMatrix& m, double eps) {
  require_identity_optimal(m, eps);
  require_optimal(f, m, eps);
  RegularMultigraph cur = isolate_supervised_cycles(f);
  TropValue weight = base_weight(cur, m);
  check_conserved(base_weight(f, m), weight, eps);

  FixpointResult result;
  const std::size_t cap = f.k() * f.n;
  while (true) {
    const auto paths = supervised_paths(cur);
    result.overlap = overlap(paths, cur.n);
    const auto configs = configurations(paths, cur.n);
    if (configs.empty()) {
      result.outcome = case1_outcome(cur, paths, m, eps);
      return result;
    }
    if (result.steps >= cap) {
      result.hit_cap = true;
      result.outcome = {canonical(configs).tag, cur, std::nullopt};
      return result;
    }
    bool improved = false;
    for (const Config& c : configs) {
      RegularMultigraph next = surgery(cur, paths, c);
      if (overlap(supervised_paths(next), cur.n) < result.overlap) {
        const TropValue w = base_weight(next, m);
        check_conserved(weight, w, eps);
        cur = std::move(next);
        weight = w;
        ++result.steps;
        improved = true;
        break;
      }
    }
    if (improved) continue;

    const Config& c = canonical(configs);
    RegularMultigraph next = surgery(cur, paths, c);
    const TropValue w = base_weight(next, m);
    check_conserved(weight, w, eps);
    ++result.steps;
    result.overlap = overlap(supervised_paths(next), cur.n);
    result.outcome = {c.tag, std::move(next), std::nullopt};
    return result;
  }
}

SupervisedAssignmentSet equality_recover(const TropMatrix& m,
                                         const IndexSet& workers,
                                         const IndexSet& tasks, double eps) {
  const JacobiReport report = jacobi_check(m, tasks, workers, eps);
  if (!report.equality) {
    throw Error(Errc::kNotEqualityCase,
                "lhs " + to_string(report.lhs) + " differs from rhs " +
                    to_string(report.rhs_minor) + " scaled by per(M)");
  }
  const std::size_t n = m.rows();
  const Normalization norm = normalize(m, {.relocate = true});
  const Permutation& relabel = norm.column_map;  // reduced column c = m column relabel(c)
  const Permutation back = relabel.inverse();

  std::vector<std::size_t> moved_tasks;
  for (std::size_t j : tasks) moved_tasks.push_back(back(j));
  const IndexSet tasks_r(std::move(moved_tasks), n);

  const CompoundEntry tau =
      compound_entry(norm.reduced, workers.complement(), tasks_r.complement());
  if (!tau.witness) {
    throw Error(Errc::kInfeasible, "no finite bijection on the complements");
  }

  struct Layer {
    std::size_t source;
    Permutation perm;
  };
  std::vector<Layer> layers;
  for (const auto& p : decompose(*tau.witness).paths) {
    ClosedPath closed = close_path(p, n);
    layers.push_back({closed.supervised.first, std::move(closed.permutation)});
  }
  for (std::size_t v : workers.set_intersection(tasks_r)) {
    layers.push_back({v, Permutation::identity(n)});
  }
  std::sort(layers.begin(), layers.end(),
            [](const Layer& a, const Layer& b) { return a.source < b.source; });

  std::vector<Permutation> assignments;
  std::vector<std::size_t> image;
  for (const auto& layer : layers) {
    assignments.push_back(relabel.compose(layer.perm));
    image.push_back(assignments.back()(layer.source));
  }
  SupervisedAssignmentSet out{Bijection(workers, tasks, std::move(image)),
                              std::move(assignments), kNegInf, std::nullopt};
  out.base_value = base_weight(out.multigraph(), m);
  return out;
}

}  // namespace tropical
