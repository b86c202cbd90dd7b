#pragma once

// Dense exact vectors and matrices over a FieldSpec.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "billiard/field.hpp"

namespace billiard {

class Vector {
 public:
  Vector() = default;
  Vector(std::size_t n, const FieldSpec& field);
  // Entries must all live in `field`.
  Vector(std::vector<Scalar> entries, const FieldSpec& field);

  static Vector from_ints(std::initializer_list<long> values, const FieldSpec& field);
  static Vector unit(std::size_t n, std::size_t i, const FieldSpec& field);

  std::size_t size() const noexcept { return entries_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  std::string to_string() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& c);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  void require_compatible(const Vector& rhs) const;

  std::vector<Scalar> entries_;
  FieldSpec field_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  // Zero matrix.
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static Matrix identity(std::size_t n, const FieldSpec& field);
  static Matrix diagonal(std::span<const Scalar> diag, const FieldSpec& field);
  // Throws DimensionMismatch on ragged input, FieldMismatch on foreign entries.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& field);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, const FieldSpec& field);
  // Rows of the result are the given vectors.
  static Matrix from_row_vectors(std::span<const Vector> rows, const FieldSpec& field);
  static Matrix from_columns(std::span<const Vector> columns, const FieldSpec& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const noexcept;
  std::string to_string() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& rhs) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
  FieldSpec field_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Rank over the matrix's field. Over Q the rows are cleared of denominators
// and reduced with fraction-free (Bareiss) elimination on integers; over
// GF(p) ordinary elimination is used. Pivot: first nonzero entry in column
// order.
std::size_t rank(const Matrix& m);

// Plain Gaussian elimination with field division, for any field. Kept public
// as an independent route for cross-checking rank().
std::size_t rank_by_elimination(const Matrix& m);

std::size_t rank_of(std::span<const Vector> vectors, const FieldSpec& field);

// Throws DivisionByZero when singular, DimensionMismatch when not square.
Matrix inverse(const Matrix& m);

// (m - r_1 I)(m - r_2 I)...(m - r_k I) v, applied right to left without ever
// forming the product matrix. An empty root list returns v.
Vector poly_apply(const Matrix& m, std::span<const Scalar> roots, const Vector& v);

// First nonzero column, or the zero vector if m == 0.
Vector first_nonzero_column(const Matrix& m);

// x in span(basis), decided by rank comparison.
bool in_span(std::span<const Vector> basis, const Vector& x, const FieldSpec& field);
// span(a) == span(b).
bool same_span(std::span<const Vector> a, std::span<const Vector> b, const FieldSpec& field);

// A multiplicity-free map with a chosen ordering of its spectrum and the
// matching primitive idempotents. Only obtainable through
// primitive_idempotents(), which certifies every invariant.
class EigStructure {
 public:
  const Matrix& matrix() const noexcept { return matrix_; }
  std::span<const Scalar> eigenvalues() const noexcept { return eigenvalues_; }
  std::span<const Matrix> idempotents() const noexcept { return idempotents_; }
  const Scalar& eigenvalue(std::size_t i) const { return eigenvalues_[i]; }
  const Matrix& idempotent(std::size_t i) const { return idempotents_[i]; }
  // d, with matrix size d + 1.
  std::size_t diameter() const noexcept { return eigenvalues_.size() - 1; }
  const FieldSpec& field() const noexcept { return matrix_.field(); }

  // Same map, eigenvalue ordering reversed.
  EigStructure reversed() const;

  friend bool operator==(const EigStructure&, const EigStructure&) = default;

 private:
  friend EigStructure primitive_idempotents(const Matrix& m, std::span<const Scalar> eigenvalues);

  Matrix matrix_;
  std::vector<Scalar> eigenvalues_;
  std::vector<Matrix> idempotents_;
};

// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j), then checks
// sum E_i = I, E_i E_j = delta_ij E_i, A E_i = E_i A = theta_i E_i and
// rank E_i = 1. Errors: DimensionMismatch, RepeatedEigenvalue,
// NotMultiplicityFree (any invariant fails).
EigStructure primitive_idempotents(const Matrix& m, std::span<const Scalar> eigenvalues);

}  // namespace billiard
