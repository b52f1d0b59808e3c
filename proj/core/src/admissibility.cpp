#include "ffsync/admissibility.hpp"

#include "ffsync/error.hpp"

namespace ffsync {

namespace {

// λ^N − λ^{N−1}
CharPoly consensus_charpoly(Field f, std::size_t n) {
  CharPoly c = CharPoly::monomial(f, n);
  if (n >= 1) c.coeffs[1] = f.neg(1);
  return c;
}

void normalize_leading(const Field& f, Vector& v) {
  for (auto e : v) {
    if (e == 0) continue;
    const Residue s = f.inv(e);
    for (auto& x : v) x = f.mul(x, s);
    return;
  }
}

}  // namespace

Matrix laplacian(const Matrix& e) {
  if (!e.is_square()) throw Error(Errc::ShapeError, "graph matrix must be square");
  return Matrix::identity(e.field(), e.rows()) - e;
}

AdmissibilityReport check_admissible(const Matrix& e) {
  if (!e.is_square()) throw Error(Errc::ShapeError, "graph matrix must be square");
  const auto& f = e.field();
  const std::size_t n = e.rows();

  AdmissibilityReport rep{
      .row_stochastic = is_row_stochastic(e),
      .charpoly_ok = false,
      .nilpotent = is_nilpotent(e),
      .left_eigvec = std::nullopt,
      .p_dot_one = 0,
      .admissible = false,
      .laplacian = laplacian(e),
      .char_poly = char_poly(e),
      .warning = std::nullopt,
  };
  rep.charpoly_ok = rep.char_poly == consensus_charpoly(f, n);

  // p·(E − I) = 0  ⟺  p·L = 0
  auto null = left_nullspace(rep.laplacian);
  if (null.size() == 1) {
    normalize_leading(f, null.front());
    Residue s = 0;
    for (auto x : null.front()) s = f.add(s, x);
    rep.p_dot_one = s;
    rep.left_eigvec = std::move(null.front());
  }

  rep.admissible = rep.row_stochastic && rep.charpoly_ok && rep.left_eigvec && rep.p_dot_one != 0;
  if (rep.row_stochastic && rep.charpoly_ok && rep.left_eigvec && rep.p_dot_one == 0) {
    rep.warning =
        "p.1 = 0: consensus only for initial states with p.x(0) = 0, and the final value is "
        "not determined by the conserved quantity";
  }
  return rep;
}

Residue consensus_alpha(const Matrix& e, std::span<const Residue> x0) {
  const auto rep = check_admissible(e);
  if (!rep.admissible) throw Error(Errc::NotAdmissible, "graph matrix is not admissible");
  if (x0.size() != e.rows()) throw Error(Errc::ShapeError, "initial state has wrong length");
  const auto& f = e.field();
  return f.mul(dot(f, *rep.left_eigvec, x0), f.inv(rep.p_dot_one));
}

Matrix similar_transform(const Matrix& e, const Matrix& t) {
  return inverse(t) * e * t;
}

Matrix seed_admissible(std::size_t n, Field field) {
  if (n < 2) throw Error(Errc::ShapeError, "seed graph needs at least two agents");
  Matrix jordan(field, n, n);
  jordan.set(n - 1, n - 1, 1);
  Matrix q = Matrix::identity(field, n);
  Matrix q_inv = Matrix::identity(field, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    q.set(i, n - 1, 1);
    q_inv.set(i, n - 1, -1);
  }
  return q * jordan * q_inv;
}

}  // namespace ffsync
