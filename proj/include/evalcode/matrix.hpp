#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evalcode/field.hpp"

namespace evalcode {

template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols);

  // Each inner vector is one row; all must have the same length.
  static Matrix from_rows(F field, const std::vector<std::vector<value_type>>& rows,
                          std::size_t cols);
  static Matrix identity(F field, std::size_t n);

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const value_type> values);

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_cols(std::span<const std::size_t> indices) const;

  // this * v
  std::vector<value_type> apply(std::span<const value_type> v) const;

  bool operator==(const Matrix& other) const;

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactField F>
struct EchelonForm {
  Matrix<F> reduced;                    // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivot_cols;  // strictly increasing

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

// Unique reduced row echelon form; pivots are the first nonzero entry per column scan.
template <ExactField F>
EchelonForm<F> rref(const Matrix<F>& m);

template <ExactField F>
std::size_t rank(const Matrix<F>& m);

// Rows form the canonical basis of {c : m * c = 0}: one row per free column of rref(m),
// in increasing free-column order, with a 1 in that column.
template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& m);

template <ExactField F>
bool in_row_space(std::span<const typename F::value_type> v, const Matrix<F>& m);

// Nonzero rows of rref(m); a basis of the row space.
template <ExactField F>
Matrix<F> row_space_basis(const Matrix<F>& m);

// Incremental row echelon basis with O(1) undo of the most recent insertion.
// Stored rows are reduced against earlier rows only and carry a unit pivot.
template <ExactField F>
class EchelonBuilder {
 public:
  using value_type = typename F::value_type;

  EchelonBuilder(F field, std::size_t cols);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  // Returns true when v was independent of the stored rows (rank grew).
  bool insert(std::span<const value_type> v);
  void pop_back();
  bool contains(std::span<const value_type> v) const;

 private:
  void reduce(std::vector<value_type>& v) const;

  F field_;
  std::size_t cols_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace evalcode
