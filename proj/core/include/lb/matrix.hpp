#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lb/ring.hpp"

namespace lb {

using Vector = std::vector<Scalar>;

Vector zero_vector(Ring ring, std::size_t n);

// Dense row-major matrix over a Ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<long>>& rows);
  static Matrix from_vectors(Ring ring, const std::vector<Vector>& rows, std::size_t cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Scalar& c);
  // col_i += c * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Scalar& c);
  void scale_row(std::size_t i, const Scalar& c);
  void scale_col(std::size_t i, const Scalar& c);

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Row echelon form. Over a field: reduced row echelon form (pivots 1, zero
// above and below). Over ℤ: Hermite normal form (positive pivots, entries
// above a pivot reduced into [0, pivot)). Zero rows are dropped from `form`;
// `transform` is invertible (unimodular over ℤ) with transform * M = [form; 0].
struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivots;
  Matrix transform;
};

Echelon echelon(const Matrix& m, bool with_transform = false);

std::size_t rank(const Matrix& m);

// Unique normal form of v modulo the row span of an echelon form.
Vector reduce_modulo(const Echelon& e, Vector v);

// Basis of {v : M v = 0}, itself in echelon form. Over ℤ this spans the full
// integer kernel, which is saturated.
std::vector<Vector> kernel_basis(const Matrix& m);

struct SmithForm {
  Matrix u, d, v;
  // Diagonal of d, length min(rows, cols); each divides the next.
  std::vector<mpz_class> divisors;
};

// U * M * V = D over ℤ with U, V unimodular.
SmithForm smith_form(const Matrix& m);

// Some x with M x = b, or nullopt when no solution exists in the ring.
std::optional<Vector> membership(const Matrix& m, const Vector& b);

// Integer determinant of a square matrix over ℤ (Bareiss).
mpz_class determinant(const Matrix& m);

}  // namespace lb
