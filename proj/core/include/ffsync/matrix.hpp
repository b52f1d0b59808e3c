#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ffsync/field.hpp"

namespace ffsync {

/// Dense vector over GF(p). The owning field travels with the matrix it is
/// multiplied against.
using Vector = std::vector<Residue>;

/// Dense row-major matrix over GF(p). Every stored entry lies in [0, p).
class Matrix {
 public:
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries. Throws ShapeError on a size
  /// mismatch and InvalidArgument if any entry is outside [0, p).
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  /// Literal constructor for small matrices; entries are reduced mod p, so
  /// negative values are accepted (-1 becomes p-1).
  static Matrix from_rows(Field field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(Field field, std::size_t n);
  static Matrix zeros(Field field, std::size_t rows, std::size_t cols);
  /// All-ones column 1_n.
  static Matrix ones(Field field, std::size_t n);
  /// Standard basis column e_i (0-based i).
  static Matrix basis(Field field, std::size_t n, std::size_t i);
  static Matrix column_vector(Field field, std::span<const Residue> v);
  static Matrix row_vector(Field field, std::span<const Residue> v);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] std::span<const Residue> entries() const noexcept { return data_; }

  [[nodiscard]] Residue operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  /// Stores v mod p.
  void set(std::size_t i, std::size_t j, std::int64_t v) noexcept {
    data_[i * cols_ + j] = field_.reduce(v);
  }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector column(std::size_t j) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows,
                             std::size_t ncols) const;
  [[nodiscard]] Matrix scaled(Residue s) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// M·x for a column vector x.
[[nodiscard]] Vector mul(const Matrix& m, std::span<const Residue> x);
/// v·M for a row vector v.
[[nodiscard]] Vector mul(std::span<const Residue> v, const Matrix& m);
[[nodiscard]] Residue dot(const Field& f, std::span<const Residue> a, std::span<const Residue> b);

/// Monic characteristic polynomial det(λI − T), coefficients ordered from
/// λ^N down to λ^0.
struct CharPoly {
  Field field;
  std::vector<Residue> coeffs;

  /// λ^n.
  static CharPoly monomial(Field field, std::size_t n);

  [[nodiscard]] std::size_t degree() const noexcept { return coeffs.size() - 1; }

  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Structural flags of a square matrix.
struct MatrixClass {
  bool row_stochastic = false;
  bool invertible = false;
  bool permutation = false;
  bool nilpotent = false;
  bool identity = false;

  friend bool operator==(const MatrixClass&, const MatrixClass&) = default;
};

// Linear algebra over GF(p). Square-only operations throw ShapeError on
// non-square input; binary operations throw FieldMismatch across fields.

[[nodiscard]] Residue det(const Matrix& t);
/// Throws SingularMatrix when det(t) == 0.
[[nodiscard]] Matrix inverse(const Matrix& t);
[[nodiscard]] std::size_t rank(const Matrix& t);
[[nodiscard]] Matrix power(const Matrix& t, std::uint64_t exp);
/// Berkowitz algorithm: division-free, valid for every prime including 2.
[[nodiscard]] CharPoly char_poly(const Matrix& t);
/// Basis of {v : v·T = 0}; empty when T is nonsingular.
[[nodiscard]] std::vector<Vector> left_nullspace(const Matrix& t);
/// Basis of {x : T·x = 0}.
[[nodiscard]] std::vector<Vector> right_nullspace(const Matrix& t);
[[nodiscard]] Matrix kron(const Matrix& a, const Matrix& b);
[[nodiscard]] MatrixClass classify(const Matrix& t);

[[nodiscard]] bool is_zero(const Matrix& t) noexcept;
[[nodiscard]] bool is_identity(const Matrix& t) noexcept;
[[nodiscard]] bool is_row_stochastic(const Matrix& t) noexcept;
[[nodiscard]] bool is_permutation(const Matrix& t) noexcept;
/// T^k == 0 for k = N, decided by repeated squaring.
[[nodiscard]] bool is_nilpotent(const Matrix& t);
[[nodiscard]] bool is_upper_triangular(const Matrix& t) noexcept;
[[nodiscard]] bool is_lower_triangular(const Matrix& t) noexcept;

}  // namespace ffsync
