#ifndef GORLEF_MATRIX_HPP
#define GORLEF_MATRIX_HPP

#include "gorlef/field.hpp"
#include "gorlef/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gorlef {

using Vector = std::vector<Scalar>;

// Dense exact matrix over a Field. Row and column labels are optional and, when
// present, name the monomials of the graded pieces the matrix maps between.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rational())
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

  static Matrix identity(std::size_t n, Field field = Field::rational());
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols,
                          Field field = Field::rational());
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows,
                             Field field = Field::rational());

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  void set_row_labels(std::vector<Monomial> labels);
  void set_col_labels(std::vector<Monomial> labels);
  const std::vector<Monomial>& row_labels() const noexcept { return row_labels_; }
  const std::vector<Monomial>& col_labels() const noexcept { return col_labels_; }

  Matrix transpose() const;
  bool is_zero() const;
  Vector apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
  std::vector<Monomial> row_labels_;
  std::vector<Monomial> col_labels_;
};

// Reduced row echelon form. Pivots are chosen as the leftmost column with a nonzero
// entry, taking the earliest remaining row; the reduced form itself is unique.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<Vector> rows;  // the nonzero rows of the RREF, pivot entry 1
};

struct KernelResult {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;
  std::vector<std::size_t> pivot_columns;
};

Echelon row_echelon(const Matrix& m);
KernelResult rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rank of the reduction of a rational matrix modulo p; a lower bound for the rational
// rank. nullopt when some denominator vanishes mod p.
std::optional<std::size_t> rank_mod_prime(const Matrix& m, std::uint64_t p);

// Determinant by fraction-free elimination (exact divisions only).
Scalar det_ff(const Matrix& m);

// Coordinates of v in the span of basis, or nullopt when v is outside it. With a
// dependent basis the free coordinates are set to zero.
std::optional<Vector> coords_in_span(std::span<const Scalar> v, const std::vector<Vector>& basis,
                                     Field field = Field::rational());

bool is_zero_vector(std::span<const Scalar> v);

// Matrix with polynomial entries (hessians, symbolic multiplication maps).
class PolynomialMatrix {
 public:
  PolynomialMatrix() = default;
  PolynomialMatrix(std::size_t rows, std::size_t cols, const Polynomial& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_symmetric() const;
  Matrix evaluate(std::span<const Scalar> point, Field field) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

inline constexpr std::size_t kMaxSymbolicDeterminant = 6;

// Symbolic determinant by Laplace expansion with memoized minors. Rejects matrices
// larger than kMaxSymbolicDeterminant.
Polynomial det_cofactor(const PolynomialMatrix& m);

}  // namespace gorlef

#endif  // GORLEF_MATRIX_HPP
