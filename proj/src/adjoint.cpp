#include "tropical/adjoint.hpp"

#include <cmath>
#include <string>

#include "hungarian.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

// Dense double copy of m(rows, cols) with -HUGE_VAL for -inf.
void fill_weights(const TropMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols,
                  std::vector<double>& out) {
  const std::size_t k = rows.size();
  out.resize(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto src = m.row(rows[r]);
    double* dst = out.data() + r * k;
    for (std::size_t c = 0; c < k; ++c) dst[c] = src[cols[c]].to_double();
  }
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  out.reserve(n - 1);
  for (std::size_t x = 0; x < n; ++x) {
    if (x != skip) out.push_back(x);
  }
  return out;
}

// Solves the selection and packages the bijection. rows/cols hold original
// indices in ascending order.
CompoundEntry solve_selection(const TropMatrix& m,
                              const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols,
                              std::vector<double>& buffer,
                              detail::HungarianWorkspace& ws) {
  const std::size_t n = m.rows();
  const std::size_t k = rows.size();
  if (k == 0) {
    return {TropValue::one(), Bijection(IndexSet(std::vector<std::size_t>{}, n),
                                        IndexSet(std::vector<std::size_t>{}, m.cols()),
                                        {})};
  }
  fill_weights(m, rows, cols, buffer);
  auto r = detail::hungarian_max(buffer, k, ws);
  if (!r.feasible) return {kNegInf, std::nullopt};
  TropValue value = TropValue::one();
  std::vector<std::size_t> image(k);
  for (std::size_t a = 0; a < k; ++a) {
    image[a] = cols[r.row_to_col[a]];
    value = tmul(value, m(rows[a], image[a]));
  }
  return {value, Bijection(IndexSet(rows, n), IndexSet(cols, m.cols()),
                           std::move(image))};
}

void require_square(const TropMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(Errc::kInvalidArgument,
                std::string(what) + " needs a square matrix");
  }
}

std::size_t binomial_saturating(std::size_t n, std::size_t k,
                                std::size_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::size_t>(std::llround(static_cast<double>(acc)));
}

}  // namespace

AdjointResult adjoint(const TropMatrix& m) {
  require_square(m, "adjoint");
  const std::size_t n = m.rows();
  if (n < 2) throw Error(Errc::kInvalidArgument, "adjoint needs n >= 2");
  AdjointResult out{TropMatrix(n, n), std::vector<std::optional<Bijection>>(n * n)};
  std::vector<double> buffer;
  detail::HungarianWorkspace ws;
  for (std::size_t j = 0; j < n; ++j) {
    const auto rows = all_but(n, j);
    for (std::size_t i = 0; i < n; ++i) {
      auto entry = solve_selection(m, rows, all_but(n, i), buffer, ws);
      out.adj(i, j) = entry.value;
      out.witnesses[i * n + j] = std::move(entry.witness);
    }
  }
  return out;
}

AdjointEntry adjoint_entry(const TropMatrix& m, std::size_t i, std::size_t j) {
  require_square(m, "adjoint");
  const std::size_t n = m.rows();
  if (i >= n || j >= n) {
    throw Error(Errc::kIndexOutOfRange, "adjoint entry outside the matrix");
  }
  std::vector<double> buffer;
  detail::HungarianWorkspace ws;
  auto entry = solve_selection(m, all_but(n, j), all_but(n, i), buffer, ws);
  return {entry.value, std::move(entry.witness)};
}

TropMatrix adjoint_submatrix(const TropMatrix& m, const IndexSet& rows,
                             const IndexSet& cols) {
  require_square(m, "adjoint");
  const std::size_t n = m.rows();
  if (rows.universe() != n || cols.universe() != n) {
    throw Error(Errc::kIndexOutOfRange, "index set universe does not match");
  }
  TropMatrix out(rows.size(), cols.size());
  std::vector<double> buffer;
  detail::HungarianWorkspace ws;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto minor_rows = all_but(n, cols[c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out(r, c) =
          solve_selection(m, minor_rows, all_but(n, rows[r]), buffer, ws).value;
    }
  }
  return out;
}

CompoundEntry compound_entry(const TropMatrix& m, const IndexSet& rows,
                             const IndexSet& cols) {
  if (rows.universe() != m.rows() || cols.universe() != m.cols()) {
    throw Error(Errc::kIndexOutOfRange, "index set universe does not match");
  }
  if (rows.size() != cols.size()) {
    throw Error(Errc::kInvalidArgument, "compound entry needs |I| = |J|");
  }
  std::vector<double> buffer;
  detail::HungarianWorkspace ws;
  return solve_selection(m, rows.indices(), cols.indices(), buffer, ws);
}

std::vector<IndexSet> k_subsets_colex(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.emplace_back(cur, n);
    // Colex successor: bump the lowest position that can move up.
    std::size_t p = 0;
    while (p < k && cur[p] + 1 == (p + 1 < k ? cur[p + 1] : n)) ++p;
    if (p == k) break;
    ++cur[p];
    for (std::size_t q = 0; q < p; ++q) cur[q] = q;
  }
  return out;
}

TropMatrix CompoundMatrix::values() const {
  TropMatrix out(row_subsets.size(), col_subsets.size());
  for (std::size_t r = 0; r < row_subsets.size(); ++r) {
    for (std::size_t c = 0; c < col_subsets.size(); ++c) {
      out(r, c) = (*this)(r, c).value;
    }
  }
  return out;
}

CompoundMatrix compound(const TropMatrix& m, std::size_t k, std::size_t cap) {
  if (k > std::min(m.rows(), m.cols())) {
    throw Error(Errc::kInvalidArgument, "k exceeds the matrix dimensions");
  }
  const std::size_t nr = binomial_saturating(m.rows(), k, cap);
  const std::size_t nc = binomial_saturating(m.cols(), k, cap);
  if (nr > cap || nc > cap || (nc != 0 && nr > cap / nc)) {
    throw Error(Errc::kSizeLimit, "compound of order " + std::to_string(k) +
                                      " has more than " + std::to_string(cap) +
                                      " entries");
  }
  CompoundMatrix out;
  out.row_subsets = k_subsets_colex(m.rows(), k);
  out.col_subsets = k_subsets_colex(m.cols(), k);
  out.entries.reserve(nr * nc);
  std::vector<double> buffer;
  detail::HungarianWorkspace ws;
  for (const auto& rs : out.row_subsets) {
    for (const auto& cs : out.col_subsets) {
      out.entries.push_back(
          solve_selection(m, rs.indices(), cs.indices(), buffer, ws));
    }
  }
  return out;
}

}  // namespace tropical
