#include "designcodes/matrix.hpp"

#include <algorithm>

namespace dcodes {

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Matrix m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw RaggedRows();
  for (auto v : values)
    if (v >= field_->q()) throw OutOfRange("matrix entry outside the field");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n < rows_) {
    rows_ = n;
    data_.resize(rows_ * cols_);
  }
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, j) = at(r, cols[j]);
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);

    auto prow = m.row(r);
    const Elem inv = f.inv(prow[c]);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (prow[j] == 0) continue;
      prow[j] = f.mul(prow[j], inv);
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      const Elem factor = row[c];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (auto j : support) row[j] = f.add(row[j], f.mul(nf, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  const Field& f = *m.field();
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;

  Matrix basis(m.field(), 0, n);
  std::vector<Elem> v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(a.at(i, free));
    basis.append_row(v);
  }
  rref(basis);
  return basis;
}

}  // namespace dcodes
