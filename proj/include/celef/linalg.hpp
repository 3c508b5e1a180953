#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "celef/scalar.hpp"

namespace celef {

struct Entry {
  std::size_t col;
  Scalar value;
};

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<Entry>;

/// Row-sparse matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Each element of `columns` must have length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Coords>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Coords>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& value);
  void add(std::size_t i, std::size_t j, const Scalar& value);

  const SparseRow& row(std::size_t i) const { return data_[i]; }
  void set_row(std::size_t i, SparseRow row);

  Coords dense_row(std::size_t i) const;
  Coords column(std::size_t j) const;
  std::vector<Coords> columns() const;

  Matrix transpose() const;
  Coords apply(const Coords& x) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& factor) const;

  /// [this | rhs]; row counts must agree.
  Matrix hstack(const Matrix& rhs) const;
  /// [this ; rhs]; column counts must agree.
  Matrix vstack(const Matrix& rhs) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

struct Echelon {
  Matrix reduced;                    ///< reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Within each column the pivot is the candidate
/// row with the smallest numerator magnitude (ties: smallest denominator,
/// sparsest row, lowest index), so output is deterministic.
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form the canonical basis of ker(m): one vector per free column,
/// with a 1 in that column.
Matrix nullspace(const Matrix& m);

/// Pivot columns of m (a basis of its column space taken from m itself).
Matrix column_space(const Matrix& m);

/// Canonical basis of the row space (nonzero rows of the rref).
Matrix row_space(const Matrix& m);

std::optional<Coords> solve(const Matrix& a, const Coords& b);
std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(const Matrix& a);

/// Coordinates with respect to a fixed basis given as the columns of a
/// matrix of full column rank.
class BasisSolver {
 public:
  BasisSolver() = default;
  explicit BasisSolver(const Matrix& basis);

  std::size_t dimension() const { return dim_; }
  std::size_t ambient() const { return ambient_; }

  /// Unique x with basis * x == v, or nullopt when v is outside the span.
  std::optional<Coords> coordinates(const Coords& v) const;
  bool contains(const Coords& v) const;

 private:
  std::size_t dim_ = 0;
  std::size_t ambient_ = 0;
  Matrix solve_;     // dim x ambient
  Matrix residual_;  // (ambient - dim) x ambient, annihilates the span
};

}  // namespace celef
