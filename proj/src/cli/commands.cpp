#include "tropical/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "tropical/cli/matrix_file.hpp"
#include "tropical/jacobi.hpp"
#include "tropical/matching.hpp"
#include "tropical/supervision.hpp"

namespace tropical::cli {

using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kParseError:
      return kExitParse;
    case Errc::kSingularMatrix:
    case Errc::kInfeasible:
    case Errc::kInfeasibleEdge:
    case Errc::kInfeasibleWeight:
      return kExitInfeasible;
    case Errc::kSizeLimit:
    case Errc::kTooLarge:
      return kExitSizeLimit;
    default:
      return kExitValidation;
  }
}

namespace {

json jvalue(TropValue v) {
  if (v.is_neg_inf()) return "-inf";
  const double x = v.value();
  if (x == std::floor(x) && std::fabs(x) < 9e15) return static_cast<long long>(x);
  return x;
}

json jmatrix(const TropMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(jvalue(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json jset(const IndexSet& s) { return s.to_one_based(); }

json jedges(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [s, t] : edges) out.push_back({s + 1, t + 1});
  return out;
}

json jperm(const Permutation& p) {
  json out = json::array();
  for (std::size_t x : p.image()) out.push_back(x + 1);
  return out;
}

std::string edge_text(const std::vector<Edge>& edges) {
  std::string out = "{";
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (a) out += ", ";
    out += std::to_string(edges[a].first + 1) + "->" +
           std::to_string(edges[a].second + 1);
  }
  return out + "}";
}

json jsupervised(const SupervisedAssignmentSet& set) {
  json out;
  out["supervision"] = jedges(set.supervision.edges());
  out["base_value"] = jvalue(set.base_value);
  if (set.priority_value) out["priority_value"] = jvalue(*set.priority_value);
  json assignments = json::array();
  const auto sup = set.supervision.edges();
  for (std::size_t t = 0; t < set.assignments.size(); ++t) {
    assignments.push_back({{"supervised_edge", {sup[t].first + 1, sup[t].second + 1}},
                           {"permutation", jperm(set.assignments[t])},
                           {"edges", jedges(set.assignments[t].edges())}});
  }
  out["assignments"] = std::move(assignments);
  return out;
}

std::string supervised_text(const SupervisedAssignmentSet& set) {
  std::ostringstream out;
  out << "supervision " << edge_text(set.supervision.edges()) << "\n"
      << "base value  " << set.base_value << "\n";
  if (set.priority_value) out << "priority    " << *set.priority_value << "\n";
  const auto sup = set.supervision.edges();
  for (std::size_t t = 0; t < set.assignments.size(); ++t) {
    out << "  [" << sup[t].first + 1 << "->" << sup[t].second + 1 << "] "
        << edge_text(set.assignments[t].edges()) << "\n";
  }
  return out.str();
}

IndexSet index_set(const std::string& text, std::size_t n) {
  return IndexSet::from_one_based(parse_index_list(text), n);
}

template <typename Body>
CommandResult run(const char* name, const std::string& matrix_path,
                  const GlobalOptions& opt, Body&& body) {
  CommandResult res;
  res.report["command"] = name;
  res.report["inputs"]["matrix_file"] = matrix_path;
  const auto start = std::chrono::steady_clock::now();
  try {
    const TropMatrix m = read_matrix_file(matrix_path);
    res.report["inputs"]["matrix"] = jmatrix(m);
    body(m, res);
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.code());
    res.report["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    res.exit_code = kExitInvariant;
    res.report["error"] = {{"code", "Internal"}, {"message", e.what()}};
  }
  if (res.report.contains("error") && opt.verbose) {
    res.verbose_text += "error: " + res.report["error"]["message"].get<std::string>() + "\n";
  }
  res.report["exit_code"] = res.exit_code;
  res.report["timing"]["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

}  // namespace

CommandResult cmd_perm(const std::string& matrix_path, const GlobalOptions& opt) {
  return run("perm", matrix_path, opt, [&](const TropMatrix& m, CommandResult& res) {
    const AssignmentResult r = solve(m);
    res.report["value"] = jvalue(r.value);
    res.report["witness"] = jedges(r.witness.edges());
    if (opt.verbose) {
      res.verbose_text = "per = " + to_string(r.value) + "\nwitness " +
                         edge_text(r.witness.edges()) + "\n";
    }
  });
}

CommandResult cmd_adjoint(const std::string& matrix_path, bool witnesses,
                          const GlobalOptions& opt) {
  return run("adjoint", matrix_path, opt, [&](const TropMatrix& m, CommandResult& res) {
    const AdjointResult r = adjoint(m);
    res.report["adjoint"] = jmatrix(r.adj);
    res.report["matrix_file"] = format_matrix(r.adj);
    if (witnesses) {
      json list = json::array();
      for (std::size_t i = 0; i < r.adj.rows(); ++i) {
        for (std::size_t j = 0; j < r.adj.cols(); ++j) {
          const auto& w = r.witness(i, j);
          if (!w) continue;
          list.push_back({{"row", i + 1},
                          {"col", j + 1},
                          {"value", jvalue(r.adj(i, j))},
                          {"edges", jedges(w->edges())}});
        }
      }
      res.report["witnesses"] = std::move(list);
    }
    if (opt.verbose) res.verbose_text = "adj(M) =\n" + format_matrix(r.adj);
  });
}

CommandResult cmd_supervise(const std::string& matrix_path,
                            const std::string& rows, const std::string& cols,
                            const std::string& priority_path,
                            const GlobalOptions& opt) {
  return run("supervise", matrix_path, opt, [&](const TropMatrix& m, CommandResult& res) {
    const IndexSet workers = index_set(rows, m.rows());
    const IndexSet tasks = index_set(cols, m.rows());
    const TropMatrix c = read_matrix_file(priority_path);
    res.report["inputs"]["rows"] = jset(workers);
    res.report["inputs"]["cols"] = jset(tasks);
    res.report["inputs"]["priority_file"] = priority_path;
    res.report["inputs"]["priority"] = jmatrix(c);
    try {
      const SupervisedAssignmentSet set = solve_supervised(m, workers, tasks, c);
      res.report["result"] = jsupervised(set);
      if (opt.verbose) res.verbose_text = supervised_text(set);
    } catch (const EssentialEdgeError& e) {
      json offending = json::array();
      for (const auto& [r, s] : e.offending()) {
        offending.push_back({workers[r] + 1, tasks[s] + 1});
      }
      res.report["offending"] = std::move(offending);
      throw;
    }
  });
}

CommandResult cmd_jacobi(const std::string& matrix_path, const std::string& rows,
                         const std::string& cols, bool recover,
                         const GlobalOptions& opt) {
  return run("jacobi", matrix_path, opt, [&](const TropMatrix& m, CommandResult& res) {
    const IndexSet adj_rows = index_set(rows, m.rows());
    const IndexSet adj_cols = index_set(cols, m.rows());
    res.report["inputs"]["rows"] = jset(adj_rows);
    res.report["inputs"]["cols"] = jset(adj_cols);
    const JacobiReport r = jacobi_check(m, adj_rows, adj_cols, opt.epsilon);
    res.report["per"] = jvalue(r.per_m);
    res.report["lhs"] = jvalue(r.lhs);
    res.report["rhs_minor"] = jvalue(r.rhs_minor);
    res.report["equality"] = r.equality;
    res.report["multiplicity"] = r.multiplicity;
    json wit = json::array();
    for (const auto& w : r.witnesses) wit.push_back(jedges(w.edges()));
    res.report["witnesses"] = std::move(wit);
    std::ostringstream text;
    text << "per(M) = " << r.per_m << "\nlhs = " << r.lhs
         << "\nrhs_minor = " << r.rhs_minor << "\nequality = " << r.equality
         << "\nmultiplicity = " << r.multiplicity << "\n";
    if (recover) {
      if (r.equality) {
        // Supervision frame: workers are the adj columns, tasks the adj rows.
        const auto set = equality_recover(m, adj_cols, adj_rows, opt.epsilon);
        res.report["recovery"] = jsupervised(set);
        text << supervised_text(set);
      } else {
        res.report["recovery"] = nullptr;
      }
    }
    if (opt.verbose) res.verbose_text = text.str();
    if (r.per_m.is_finite() && !r.equality && !r.multiplicity) {
      res.exit_code = kExitInvariant;
      res.report["error"] = {{"code", "InvariantViolation"},
                             {"message", "neither equality nor multiplicity holds"}};
    }
  });
}

CommandResult cmd_compound(const std::string& matrix_path, std::size_t k,
                           const std::optional<std::string>& rows,
                           const std::optional<std::string>& cols,
                           const GlobalOptions& opt) {
  return run("compound", matrix_path, opt, [&](const TropMatrix& m, CommandResult& res) {
    res.report["inputs"]["k"] = k;
    if (rows.has_value() != cols.has_value()) {
      throw Error(Errc::kInvalidArgument, "--rows and --cols go together");
    }
    if (rows) {
      const IndexSet r = index_set(*rows, m.rows());
      const IndexSet c = index_set(*cols, m.cols());
      if (r.size() != k || c.size() != k) {
        throw Error(Errc::kInvalidArgument, "--rows and --cols need k entries each");
      }
      res.report["inputs"]["rows"] = jset(r);
      res.report["inputs"]["cols"] = jset(c);
      const CompoundEntry e = compound_entry(m, r, c);
      res.report["value"] = jvalue(e.value);
      res.report["witness"] = e.witness ? jedges(e.witness->edges()) : json(nullptr);
      if (opt.verbose) res.verbose_text = "value = " + to_string(e.value) + "\n";
      return;
    }
    const CompoundMatrix full = compound(m, k, opt.cap);
    json rs = json::array(), cs = json::array();
    for (const auto& s : full.row_subsets) rs.push_back(jset(s));
    for (const auto& s : full.col_subsets) cs.push_back(jset(s));
    res.report["row_subsets"] = std::move(rs);
    res.report["col_subsets"] = std::move(cs);
    const TropMatrix values = full.values();
    res.report["values"] = jmatrix(values);
    if (opt.verbose) res.verbose_text = format_matrix(values);
  });
}

}  // namespace tropical::cli
