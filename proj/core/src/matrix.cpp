#include "ffsync/matrix.hpp"

#include <string>

#include "ffsync/error.hpp"

namespace ffsync {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (a != b) {
    throw Error(Errc::FieldMismatch, "operands live in GF(" + std::to_string(a.modulus()) +
                                         ") and GF(" + std::to_string(b.modulus()) + ")");
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(Errc::ShapeError, "expected " + std::to_string(rows * cols) + " entries, got " +
                                      std::to_string(data_.size()));
  }
  for (auto e : data_) {
    if (e >= field_.modulus()) {
      throw Error(Errc::InvalidArgument, "entry " + std::to_string(e) + " outside [0, " +
                                             std::to_string(field_.modulus()) + ")");
    }
  }
}

Matrix Matrix::from_rows(Field field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::ShapeError, "ragged matrix literal");
    std::size_t j = 0;
    for (auto v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::zeros(Field field, std::size_t rows, std::size_t cols) {
  return Matrix(field, rows, cols);
}

Matrix Matrix::ones(Field field, std::size_t n) {
  Matrix m(field, n, 1);
  for (auto& e : m.data_) e = 1;
  return m;
}

Matrix Matrix::basis(Field field, std::size_t n, std::size_t i) {
  if (i >= n) throw Error(Errc::ShapeError, "basis index out of range");
  Matrix m(field, n, 1);
  m.data_[i] = 1;
  return m;
}

Matrix Matrix::column_vector(Field field, std::span<const Residue> v) {
  return Matrix(field, v.size(), 1, Vector(v.begin(), v.end()));
}

Matrix Matrix::row_vector(Field field, std::span<const Residue> v) {
  return Matrix(field, 1, v.size(), Vector(v.begin(), v.end()));
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw Error(Errc::ShapeError, "block exceeds " + shape(*this));
  }
  Matrix b(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b.data_[i * ncols + j] = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix m = *this;
  s = field_.reduce(s);
  for (auto& e : m.data_) e = field_.mul(e, s);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(Errc::ShapeError, "cannot add " + shape(a) + " and " + shape(b));
  }
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(Errc::ShapeError, "cannot subtract " + shape(b) + " from " + shape(a));
  }
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) {
    throw Error(Errc::ShapeError, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  const auto& f = a.field_;
  Matrix c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& cij = c.data_[i * c.cols_ + j];
        cij = f.add(cij, f.mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

Vector mul(const Matrix& m, std::span<const Residue> x) {
  if (x.size() != m.cols()) throw Error(Errc::ShapeError, "matrix-vector size mismatch");
  const auto& f = m.field();
  Vector y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] = f.add(y[i], f.mul(m(i, j), x[j]));
  return y;
}

Vector mul(std::span<const Residue> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::ShapeError, "vector-matrix size mismatch");
  const auto& f = m.field();
  Vector y(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] = f.add(y[j], f.mul(v[i], m(i, j)));
  return y;
}

Residue dot(const Field& f, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeError, "dot product size mismatch");
  Residue s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

CharPoly CharPoly::monomial(Field field, std::size_t n) {
  CharPoly c{field, Vector(n + 1, 0)};
  c.coeffs[0] = 1;
  return c;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  require_same_field(a.field, b.field);
  const auto& f = a.field;
  CharPoly c{f, Vector(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c.coeffs[i + j] = f.add(c.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  return c;
}

}  // namespace ffsync
