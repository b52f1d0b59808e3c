#include <utility>

#include "ffsync/error.hpp"
#include "ffsync/matrix.hpp"

namespace ffsync {

namespace {

void require_square(const Matrix& t, const char* op) {
  if (!t.is_square()) {
    throw Error(Errc::ShapeError, std::string(op) + " needs a square matrix, got " +
                                      std::to_string(t.rows()) + "x" + std::to_string(t.cols()));
  }
}

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination.
Echelon rref(Matrix m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto tmp = m(r, j);
        m.set(r, j, m(piv, j));
        m.set(piv, j, tmp);
      }
    }
    const Residue scale = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, f.mul(m(r, j), scale));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Residue factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, f.sub(m(i, j), f.mul(factor, m(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Vector berkowitz(const Matrix& m) {
  const auto& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return {1};
  if (n == 1) return {1, f.neg(m(0, 0))};

  const Matrix sub = m.block(1, 1, n - 1, n - 1);
  const Vector r = m.block(0, 1, 1, n - 1).row(0);
  Vector krylov = m.block(1, 0, n - 1, 1).column(0);

  // Toeplitz diagonal: 1, -a11, -R·C, -R·A·C, ..., -R·A^{n-2}·C
  Vector diag{1, f.neg(m(0, 0))};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diag.push_back(f.neg(dot(f, r, krylov)));
    if (i + 2 < n) krylov = mul(sub, krylov);
  }

  const Vector tail = berkowitz(sub);
  Vector out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j < n && j <= i; ++j) out[i] = f.add(out[i], f.mul(diag[i - j], tail[j]));
  return out;
}

}  // namespace

Residue det(const Matrix& t) {
  require_square(t, "det");
  const auto& f = t.field();
  Matrix m = t;
  const std::size_t n = m.rows();
  Residue d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) {
        const auto tmp = m(c, j);
        m.set(c, j, m(piv, j));
        m.set(piv, j, tmp);
      }
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const Residue inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Residue factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m.set(i, j, f.sub(m(i, j), f.mul(factor, m(c, j))));
    }
  }
  return d;
}

Matrix inverse(const Matrix& t) {
  require_square(t, "inverse");
  const std::size_t n = t.rows();
  Matrix aug(t.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, t(i, j));
    aug.set(i, n + i, 1);
  }
  auto [reduced, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(Errc::SingularMatrix, "matrix is singular over GF(" +
                                          std::to_string(t.field().modulus()) + ")");
  }
  return reduced.block(0, n, n, n);
}

std::size_t rank(const Matrix& t) { return rref(t).pivots.size(); }

Matrix power(const Matrix& t, std::uint64_t exp) {
  require_square(t, "power");
  Matrix acc = Matrix::identity(t.field(), t.rows());
  Matrix base = t;
  while (exp > 0) {
    if (exp & 1U) acc = acc * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return acc;
}

CharPoly char_poly(const Matrix& t) {
  require_square(t, "char_poly");
  return CharPoly{t.field(), berkowitz(t)};
}

std::vector<Vector> right_nullspace(const Matrix& t) {
  const auto& f = t.field();
  auto [reduced, pivots] = rref(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(t.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(reduced(r, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vector> left_nullspace(const Matrix& t) {
  require_square(t, "left_nullspace");
  return right_nullspace(t.transpose());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "kron operands over different fields");
  const auto& f = a.field();
  Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Residue aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k.set(i * b.rows() + r, j * b.cols() + c, f.mul(aij, b(r, c)));
    }
  return k;
}

bool is_zero(const Matrix& t) noexcept {
  for (auto e : t.entries())
    if (e != 0) return false;
  return true;
}

bool is_identity(const Matrix& t) noexcept {
  if (!t.is_square()) return false;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (t(i, j) != (i == j ? 1U : 0U)) return false;
  return true;
}

bool is_row_stochastic(const Matrix& t) noexcept {
  const auto& f = t.field();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Residue s = 0;
    for (std::size_t j = 0; j < t.cols(); ++j) s = f.add(s, t(i, j));
    if (s != 1) return false;
  }
  return true;
}

bool is_permutation(const Matrix& t) noexcept {
  if (!t.is_square()) return false;
  const std::size_t n = t.rows();
  std::vector<int> col_hits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = t(i, j);
      if (e > 1) return false;
      if (e == 1) {
        ++row_hits;
        ++col_hits[j];
      }
    }
    if (row_hits != 1) return false;
  }
  for (auto h : col_hits)
    if (h != 1) return false;
  return true;
}

bool is_nilpotent(const Matrix& t) {
  require_square(t, "is_nilpotent");
  // Nilpotency index is at most N, so T^(2^k) with 2^k >= N decides it.
  Matrix m = t;
  for (std::size_t e = 1; e < t.rows(); e *= 2) {
    if (is_zero(m)) return true;
    m = m * m;
  }
  return is_zero(m);
}

bool is_upper_triangular(const Matrix& t) noexcept {
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < i && j < t.cols(); ++j)
      if (t(i, j) != 0) return false;
  return true;
}

bool is_lower_triangular(const Matrix& t) noexcept {
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = i + 1; j < t.cols(); ++j)
      if (t(i, j) != 0) return false;
  return true;
}

MatrixClass classify(const Matrix& t) {
  require_square(t, "classify");
  return MatrixClass{
      .row_stochastic = is_row_stochastic(t),
      .invertible = det(t) != 0,
      .permutation = is_permutation(t),
      .nilpotent = is_nilpotent(t),
      .identity = is_identity(t),
  };
}

}  // namespace ffsync
