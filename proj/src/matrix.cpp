#include "evalcode/matrix.hpp"

#include <algorithm>

namespace evalcode {

template <ExactField F>
Matrix<F>::Matrix(F field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

template <ExactField F>
Matrix<F> Matrix<F>::from_rows(F field, const std::vector<std::vector<value_type>>& rows,
                               std::size_t cols) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::dimension_mismatch, "ragged row " + std::to_string(r));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::identity(F field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <ExactField F>
void Matrix<F>::append_row(std::span<const value_type> values) {
  if (values.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "append_row: bad length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <ExactField F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <ExactField F>
Matrix<F> Matrix<F>::select_rows(std::span<const std::size_t> indices) const {
  Matrix m(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), m.row(i).begin());
  }
  return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::select_cols(std::span<const std::size_t> indices) const {
  Matrix m(field_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < indices.size(); ++j) m(r, j) = (*this)(r, indices[j]);
  return m;
}

template <ExactField F>
std::vector<typename Matrix<F>::value_type> Matrix<F>::apply(
    std::span<const value_type> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "apply: bad vector length");
  std::vector<value_type> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    value_type acc = field_.zero();
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = field_.add(acc, field_.mul((*this)(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

template <ExactField F>
bool Matrix<F>::operator==(const Matrix& other) const {
  if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!field_.equal(data_[i], other.data_[i])) return false;
  }
  return true;
}

template <ExactField F>
EchelonForm<F> rref(const Matrix<F>& m) {
  const F& f = m.field();
  Matrix<F> r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < r.cols() && lead_row < r.rows(); ++c) {
    std::size_t pr = lead_row;
    while (pr < r.rows() && f.is_zero(r(pr, c))) ++pr;
    if (pr == r.rows()) continue;
    if (pr != lead_row) {
      auto a = r.row(pr);
      auto b = r.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto pivot_row = r.row(lead_row);
    if (!f.equal(pivot_row[c], f.one())) {
      auto inv = f.inv(pivot_row[c]);
      for (std::size_t j = c; j < r.cols(); ++j) pivot_row[j] = f.mul(pivot_row[j], inv);
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row || f.is_zero(r(i, c))) continue;
      auto factor = r(i, c);
      auto target = r.row(i);
      for (std::size_t j = c; j < r.cols(); ++j) {
        if (!f.is_zero(pivot_row[j])) target[j] = f.sub_mul(target[j], factor, pivot_row[j]);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(r), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  EchelonBuilder<F> builder(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows() && builder.rank() < m.cols(); ++r) builder.insert(m.row(r));
  return builder.rank();
}

template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  Matrix<F> basis(f, 0, m.cols());
  std::vector<typename F::value_type> v(m.cols(), f.zero());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      v[ech.pivot_cols[i]] = f.neg(ech.reduced(i, free));
    }
    basis.append_row(v);
  }
  return basis;
}

template <ExactField F>
bool in_row_space(std::span<const typename F::value_type> v, const Matrix<F>& m) {
  if (v.size() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "in_row_space: bad length");
  EchelonBuilder<F> builder(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.insert(m.row(r));
  return builder.contains(v);
}

template <ExactField F>
Matrix<F> row_space_basis(const Matrix<F>& m) {
  auto ech = rref(m);
  std::vector<std::size_t> keep(ech.rank());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return ech.reduced.select_rows(keep);
}

template <ExactField F>
EchelonBuilder<F>::EchelonBuilder(F field, std::size_t cols)
    : field_(std::move(field)), cols_(cols) {}

template <ExactField F>
void EchelonBuilder<F>::reduce(std::vector<value_type>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivots_[i];
    if (field_.is_zero(v[p])) continue;
    auto factor = v[p];
    const auto& row = rows_[i];
    for (std::size_t j = p; j < cols_; ++j) {
      if (!field_.is_zero(row[j])) v[j] = field_.sub_mul(v[j], factor, row[j]);
    }
  }
}

template <ExactField F>
bool EchelonBuilder<F>::insert(std::span<const value_type> v) {
  if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "insert: bad length");
  std::vector<value_type> w(v.begin(), v.end());
  reduce(w);
  std::size_t p = 0;
  while (p < cols_ && field_.is_zero(w[p])) ++p;
  if (p == cols_) return false;
  if (!field_.equal(w[p], field_.one())) {
    auto inv = field_.inv(w[p]);
    for (std::size_t j = p; j < cols_; ++j) w[j] = field_.mul(w[j], inv);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

template <ExactField F>
void EchelonBuilder<F>::pop_back() {
  rows_.pop_back();
  pivots_.pop_back();
}

template <ExactField F>
bool EchelonBuilder<F>::contains(std::span<const value_type> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "contains: bad length");
  std::vector<value_type> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(),
                     [&](const value_type& x) { return field_.is_zero(x); });
}

#define EVALCODE_INSTANTIATE(F)                                                         \
  template class Matrix<F>;                                                             \
  template class EchelonBuilder<F>;                                                     \
  template EchelonForm<F> rref(const Matrix<F>&);                                       \
  template std::size_t rank(const Matrix<F>&);                                          \
  template Matrix<F> kernel_basis(const Matrix<F>&);                                    \
  template bool in_row_space(std::span<const F::value_type>, const Matrix<F>&);         \
  template Matrix<F> row_space_basis(const Matrix<F>&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
