#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropical/index_set.hpp"
#include "tropical/value.hpp"

namespace tropical {

// Dense row-major matrix over the max-plus semiring, 0-based.
class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, TropValue fill = kNegInf);
  // Throws kInvalidArgument when rows are ragged.
  TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows);
  static TropMatrix from_rows(const std::vector<std::vector<TropValue>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  TropValue operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  TropValue& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  // Bounds-checked access; throws kIndexOutOfRange.
  TropValue at(std::size_t r, std::size_t c) const;

  std::span<const TropValue> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const TropValue> entries() const { return entries_; }

  TropMatrix transposed() const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropValue> entries_;
};

// result(r, c) = m(rows[r], cols[c]). Throws kIndexOutOfRange when a set's
// universe does not match the matrix dimension.
TropMatrix submatrix(const TropMatrix& m, const IndexSet& rows,
                     const IndexSet& cols);

// The square matrix with row `drop_row` and column `drop_col` removed.
TropMatrix minor_matrix(const TropMatrix& m, std::size_t drop_row,
                        std::size_t drop_col);

}  // namespace tropical
