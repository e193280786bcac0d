#include "filtreg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace filtreg {

void Matrix::append_row(const std::vector<Coeff>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

void scale_row(Coeff* r, std::size_t from, std::size_t n, Coeff c, const PrimeField& f) {
  for (std::size_t j = from; j < n; ++j) r[j] = f.mul(r[j], c);
}

// r -= c * p on columns [from, n)
void axpy_row(Coeff* r, const Coeff* p, std::size_t from, std::size_t n, Coeff c,
              const PrimeField& f) {
  const Coeff nc = f.neg(c);
  for (std::size_t j = from; j < n; ++j)
    if (p[j]) r[j] = f.add(r[j], f.mul(nc, p[j]));
}

template <bool Parallel>
Echelon eliminate(Matrix m, const PrimeField& f) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m.at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    scale_row(m.row(r), c, cols, f.inv(m.at(r, c)), f);
    const Coeff* prow = m.row(r);
    const auto n_rows = static_cast<std::ptrdiff_t>(rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (rows * (cols - c) > 4096)
      for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (ui == r) continue;
        Coeff lead = m.at(ui, c);
        if (lead) axpy_row(m.row(ui), prow, c, cols, lead, f);
      }
    } else {
      for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (ui == r) continue;
        Coeff lead = m.at(ui, c);
        if (lead) axpy_row(m.row(ui), prow, c, cols, lead, f);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

Echelon rref_serial(Matrix m, const PrimeField& f) { return eliminate<false>(std::move(m), f); }

Echelon rref(Matrix m, const PrimeField& f) { return eliminate<true>(std::move(m), f); }

std::size_t rank(const Matrix& m, const PrimeField& f) { return rref(m, f).rank(); }

Matrix nullspace(const Matrix& m, const PrimeField& f) {
  const std::size_t n = m.cols();
  Echelon e = rref(m, f);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(n, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = f.neg(e.form.at(k, free));
    out.append_row(v);
  }
  return out;
}

std::vector<Coeff> reduce_by(const Echelon& e, std::vector<Coeff> v, const PrimeField& f) {
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    Coeff c = v[e.pivots[k]];
    if (c) axpy_row(v.data(), e.form.row(k), 0, v.size(), c, f);
  }
  return v;
}

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in multiply");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Coeff c = a.at(i, k);
      if (!c) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(c, b.at(k, j)));
    }
  return out;
}

}  // namespace filtreg
