#include "tropical/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tropical/error.hpp"

namespace tropical::oracle {
namespace {

void guard(std::size_t size, std::size_t limit, const char* what) {
  if (size > limit) {
    throw Error(Errc::kTooLarge, std::string(what) + " limited to size " +
                                     std::to_string(limit) + ", got " +
                                     std::to_string(size));
  }
}

// Visits every bijection rows -> cols as a vector of column positions.
template <typename Visit>
void for_each_bijection(std::size_t k, Visit&& visit) {
  std::vector<std::size_t> image(k);
  std::iota(image.begin(), image.end(), 0);
  do {
    visit(image);
  } while (std::next_permutation(image.begin(), image.end()));
}

TropMatrix drop(const TropMatrix& m, std::size_t row, std::size_t col) {
  TropMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

TropValue brute_permanent(const TropMatrix& m) {
  if (!m.is_square()) throw Error(Errc::kInvalidArgument, "needs a square matrix");
  guard(m.rows(), 9, "brute_permanent");
  TropValue best = m.rows() == 0 ? TropValue::one() : kNegInf;
  for_each_bijection(m.rows(), [&](const std::vector<std::size_t>& p) {
    TropValue w = TropValue::one();
    for (std::size_t i = 0; i < p.size(); ++i) w = tmul(w, m(i, p[i]));
    best = tadd(best, w);
  });
  return best;
}

std::vector<Permutation> brute_optima(const TropMatrix& m, double eps) {
  const TropValue best = brute_permanent(m);
  std::vector<Permutation> out;
  if (best.is_neg_inf()) return out;
  for_each_bijection(m.rows(), [&](const std::vector<std::size_t>& p) {
    TropValue w = TropValue::one();
    for (std::size_t i = 0; i < p.size(); ++i) w = tmul(w, m(i, p[i]));
    if (approx_equal(w, best, eps)) out.emplace_back(p);
  });
  return out;
}

BruteCompound brute_compound_entry(const TropMatrix& m, const IndexSet& rows,
                                   const IndexSet& cols, double eps) {
  if (rows.size() != cols.size()) {
    throw Error(Errc::kInvalidArgument, "needs |I| = |J|");
  }
  if (rows.universe() != m.rows() || cols.universe() != m.cols()) {
    throw Error(Errc::kIndexOutOfRange, "index set universe does not match");
  }
  guard(rows.size(), 8, "brute_compound_entry");
  const std::size_t k = rows.size();
  std::vector<std::pair<TropValue, std::vector<std::size_t>>> all;
  TropValue best = k == 0 ? TropValue::one() : kNegInf;
  for_each_bijection(k, [&](const std::vector<std::size_t>& p) {
    TropValue w = TropValue::one();
    std::vector<std::size_t> image(k);
    for (std::size_t r = 0; r < k; ++r) {
      image[r] = cols[p[r]];
      w = tmul(w, m(rows[r], image[r]));
    }
    best = tadd(best, w);
    all.emplace_back(w, std::move(image));
  });
  BruteCompound out{best, {}};
  if (best.is_neg_inf()) return out;
  for (auto& [w, image] : all) {
    if (approx_equal(w, best, eps)) out.optima.emplace_back(rows, cols, image);
  }
  return out;
}

TropMatrix brute_adjoint(const TropMatrix& m) {
  if (!m.is_square()) throw Error(Errc::kInvalidArgument, "needs a square matrix");
  guard(m.rows(), 10, "brute_adjoint");
  const std::size_t n = m.rows();
  TropMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = brute_permanent(drop(m, j, i));
  }
  return out;
}

TropValue brute_base_value(const TropMatrix& m, const IndexSet& workers,
                           const IndexSet& tasks) {
  if (!m.is_square()) throw Error(Errc::kInvalidArgument, "needs a square matrix");
  guard(m.rows(), 6, "brute_base_value");
  guard(workers.size(), 4, "brute_base_value k");
  if (workers.size() != tasks.size()) {
    throw Error(Errc::kInvalidArgument, "needs |I| = |J|");
  }
  const std::size_t k = workers.size();
  TropValue best = kNegInf;
  for_each_bijection(k, [&](const std::vector<std::size_t>& p) {
    TropValue w = TropValue::one();
    for (std::size_t r = 0; r < k; ++r) {
      w = tmul(w, brute_permanent(drop(m, workers[r], tasks[p[r]])));
    }
    best = tadd(best, w);
  });
  return best;
}

}  // namespace tropical::oracle
