#include "billiard/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace billiard {

namespace {

void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t n, const FieldSpec& field) : entries_(n, Scalar::zero(field)), field_(field) {}

Vector::Vector(std::vector<Scalar> entries, const FieldSpec& field) : entries_(std::move(entries)), field_(field) {
  for (const Scalar& s : entries_) {
    require(s.field() == field_, ErrorKind::FieldMismatch,
            "vector entry in " + s.field().to_string() + " but vector field is " + field_.to_string());
  }
}

Vector Vector::from_ints(std::initializer_list<long> values, const FieldSpec& field) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (long v : values) entries.emplace_back(field, v);
  return Vector(std::move(entries), field);
}

Vector Vector::unit(std::size_t n, std::size_t i, const FieldSpec& field) {
  Vector v(n, field);
  v[i] = Scalar::one(field);
  return v;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].to_string();
  }
  return out + ")";
}

void Vector::require_compatible(const Vector& rhs) const {
  require(field_ == rhs.field_, ErrorKind::FieldMismatch, "vector field mismatch");
  require(size() == rhs.size(), ErrorKind::DimensionMismatch,
          "vector length " + std::to_string(size()) + " vs " + std::to_string(rhs.size()));
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  for (Scalar& s : entries_) s *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)), field_(field) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag, const FieldSpec& field) {
  Matrix m(diag.size(), diag.size(), field);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    require(diag[i].field() == field, ErrorKind::FieldMismatch, "diagonal entry field mismatch");
    m(i, i) = diag[i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "ragged matrix: row " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) {
      require(rows[i][j].field() == field, ErrorKind::FieldMismatch, "matrix entry field mismatch");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, const FieldSpec& field) {
  std::vector<std::vector<Scalar>> grid;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.emplace_back(field, v);
    grid.push_back(std::move(row));
  }
  return from_rows(grid, field);
}

Matrix Matrix::from_row_vectors(std::span<const Vector> rows, const FieldSpec& field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "vectors of unequal length");
    require(rows[i].field() == field, ErrorKind::FieldMismatch, "vector field mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, const FieldSpec& field) {
  return from_row_vectors(columns, field).transpose();
}

Vector Matrix::row(std::size_t i) const {
  return Vector(std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)),
                field_);
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ",";
    out += row(i).to_string();
  }
  return out + "]";
}

void Matrix::require_same_shape(const Matrix& rhs) const {
  require(field_ == rhs.field_, ErrorKind::FieldMismatch, "matrix field mismatch");
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::DimensionMismatch,
          "shape " + shape(*this) + " vs " + shape(rhs));
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (Scalar& s : data_) s *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_, ErrorKind::FieldMismatch, "matrix field mismatch");
  require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.field_ == v.field(), ErrorKind::FieldMismatch, "matrix/vector field mismatch");
  require(a.cols_ == v.size(), ErrorKind::DimensionMismatch,
          "cannot apply " + shape(a) + " to a vector of length " + std::to_string(v.size()));
  Vector out(a.rows_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

// ---------------------------------------------------------------- rank

namespace {

std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = p * a[i][j] - a[i][col] * a[rank][j];
        // Sylvester's identity: t is a minor times `previous`.
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_by_elimination(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    }
    const Scalar inv = a(rank, col).inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= factor * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.field().is_rational() ? bareiss_rank(m) : rank_by_elimination(m);
}

std::size_t rank_of(std::span<const Vector> vectors, const FieldSpec& field) {
  return rank(Matrix::from_row_vectors(vectors, field));
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "inverse of non-square " + shape(m));
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n, m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    require(pivot < n, ErrorKind::DivisionByZero, "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Scalar scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Vector poly_apply(const Matrix& m, std::span<const Scalar> roots, const Vector& v) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "poly_apply needs a square matrix, got " + shape(m));
  require(m.cols() == v.size(), ErrorKind::DimensionMismatch,
          "poly_apply: matrix " + shape(m) + " vs vector of length " + std::to_string(v.size()));
  Vector w = v;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    Vector shifted = w;
    shifted *= *it;
    w = m * w - shifted;
  }
  return w;
}

Vector first_nonzero_column(const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vector c = m.column(j);
    if (!c.is_zero()) return c;
  }
  return Vector(m.rows(), m.field());
}

bool in_span(std::span<const Vector> basis, const Vector& x, const FieldSpec& field) {
  std::vector<Vector> extended(basis.begin(), basis.end());
  const std::size_t before = rank_of(extended, field);
  extended.push_back(x);
  return rank_of(extended, field) == before;
}

bool same_span(std::span<const Vector> a, std::span<const Vector> b, const FieldSpec& field) {
  std::vector<Vector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t joint = rank_of(both, field);
  return rank_of(a, field) == joint && rank_of(b, field) == joint;
}

// ---------------------------------------------------------------- idempotents

EigStructure EigStructure::reversed() const {
  EigStructure out = *this;
  std::reverse(out.eigenvalues_.begin(), out.eigenvalues_.end());
  std::reverse(out.idempotents_.begin(), out.idempotents_.end());
  return out;
}

EigStructure primitive_idempotents(const Matrix& m, std::span<const Scalar> eigenvalues) {
  require(m.is_square(), ErrorKind::DimensionMismatch, "map must be square, got " + shape(m));
  require(m.rows() >= 1, ErrorKind::DimensionMismatch, "map must act on a nonzero space");
  require(eigenvalues.size() == m.rows(), ErrorKind::DimensionMismatch,
          "expected " + std::to_string(m.rows()) + " eigenvalues, got " + std::to_string(eigenvalues.size()));
  const FieldSpec& field = m.field();
  for (const Scalar& th : eigenvalues) require(th.field() == field, ErrorKind::FieldMismatch, "eigenvalue field mismatch");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (eigenvalues[i] == eigenvalues[j]) {
        throw Error(ErrorKind::RepeatedEigenvalue, "theta_" + std::to_string(i) + " = theta_" + std::to_string(j) +
                                                       " = " + eigenvalues[i].to_string());
      }
    }
  }

  const Matrix identity = Matrix::identity(n, field);
  EigStructure eig;
  eig.matrix_ = m;
  eig.eigenvalues_.assign(eigenvalues.begin(), eigenvalues.end());
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e = identity;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Matrix factor = m - eigenvalues[j] * identity;
      factor *= (eigenvalues[i] - eigenvalues[j]).inverse();
      e = e * factor;
    }
    eig.idempotents_.push_back(std::move(e));
  }

  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::NotMultiplicityFree, "map is not multiplicity-free with the given spectrum: " + what);
  };
  const auto& es = eig.idempotents_;
  Matrix sum(n, n, field);
  for (const Matrix& e : es) sum += e;
  if (sum != identity) fail("sum of idempotents is not I");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string tag = "E_" + std::to_string(i);
    if (es[i].is_zero()) fail(tag + " = 0");
    const Matrix ae = m * es[i];
    if (ae != eigenvalues[i] * es[i]) fail("A " + tag + " != theta_" + std::to_string(i) + " " + tag);
    if (es[i] * m != ae) fail(tag + " does not commute with A");
    if (rank(es[i]) != 1) fail("rank " + tag + " = " + std::to_string(rank(es[i])));
    for (std::size_t j = i; j < n; ++j) {
      const Matrix prod = es[i] * es[j];
      if (i == j ? prod != es[i] : !prod.is_zero())
        fail(tag + " E_" + std::to_string(j) + (i == j ? " != " + tag : " != 0"));
    }
  }
  return eig;
}

}  // namespace billiard
