#include "tropical/matrix.hpp"

#include <string>

#include "tropical/error.hpp"

namespace tropical {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, TropValue fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

TropMatrix::TropMatrix(
    std::initializer_list<std::initializer_list<TropValue>> rows) {
  std::vector<std::vector<TropValue>> data;
  for (const auto& r : rows) data.emplace_back(r);
  *this = from_rows(data);
}

TropMatrix TropMatrix::from_rows(
    const std::vector<std::vector<TropValue>>& rows) {
  TropMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.entries_.reserve(m.rows_ * m.cols_);
  for (const auto& r : rows) {
    if (r.size() != m.cols_) {
      throw Error(Errc::kInvalidArgument, "ragged matrix rows");
    }
    m.entries_.insert(m.entries_.end(), r.begin(), r.end());
  }
  return m;
}

TropValue TropMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(Errc::kIndexOutOfRange,
                "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                    ") outside " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
  return (*this)(r, c);
}

TropMatrix TropMatrix::transposed() const {
  TropMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

TropMatrix submatrix(const TropMatrix& m, const IndexSet& rows,
                     const IndexSet& cols) {
  if (rows.universe() != m.rows() || cols.universe() != m.cols()) {
    throw Error(Errc::kIndexOutOfRange,
                "index set universe does not match matrix shape");
  }
  TropMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = m(rows[r], cols[c]);
    }
  }
  return out;
}

TropMatrix minor_matrix(const TropMatrix& m, std::size_t drop_row,
                        std::size_t drop_col) {
  if (drop_row >= m.rows() || drop_col >= m.cols()) {
    throw Error(Errc::kIndexOutOfRange, "minor index outside matrix");
  }
  TropMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == drop_row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == drop_col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace tropical
