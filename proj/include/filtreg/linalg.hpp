#pragma once

#include <cstddef>
#include <vector>

#include "filtreg/field.hpp"

namespace filtreg {

/// Dense row-major matrix over Z/p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Coeff at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Coeff* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Coeff* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

  void append_row(const std::vector<Coeff>& r);
  void truncate_rows(std::size_t n);
  Matrix transposed() const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

/// Reduced row echelon form: `form` keeps only the nonzero rows, one per
/// pivot column listed in `pivots` (increasing).
struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reference single-threaded elimination.
Echelon rref_serial(Matrix m, const PrimeField& f);
/// OpenMP elimination; bit-identical output to rref_serial.
Echelon rref(Matrix m, const PrimeField& f);

std::size_t rank(const Matrix& m, const PrimeField& f);
/// Rows form a basis of {v : m v = 0}.
Matrix nullspace(const Matrix& m, const PrimeField& f);
/// Reduces v against the row space of `e`; zero iff v lies in it.
std::vector<Coeff> reduce_by(const Echelon& e, std::vector<Coeff> v, const PrimeField& f);
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f);

}  // namespace filtreg
