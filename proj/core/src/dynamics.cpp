#include "ffsync/dynamics.hpp"

#include <algorithm>
#include <string>

#include "ffsync/admissibility.hpp"
#include "ffsync/error.hpp"

namespace ffsync {

namespace {

void require_pair(const Matrix& a, const Matrix& b) {
  if (!a.is_square()) throw Error(Errc::ShapeError, "A must be square");
  if (b.rows() != a.rows()) throw Error(Errc::ShapeError, "B must have as many rows as A");
  if (a.field() != b.field()) throw Error(Errc::ShapeError, "A and B live in different fields");
}

void require_system(const Matrix& e, const AgentSystem& sys) {
  if (!e.is_square()) throw Error(Errc::ShapeError, "graph matrix must be square");
  require_pair(sys.a, sys.b);
  if (e.field() != sys.a.field()) throw Error(Errc::FieldMismatch, "graph and agents differ in field");
  if (!sys.k) throw Error(Errc::MissingGain, "agent system has no feedback gain");
  if (sys.k->rows() != sys.b.cols() || sys.k->cols() != sys.a.rows()) {
    throw Error(Errc::ShapeError, "K must be m x n");
  }
}

Matrix from_columns(const Field& f, std::size_t n, const std::vector<Vector>& cols) {
  Matrix m(f, n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, cols[j][i]);
  return m;
}

// Advances digits (last digit fastest); false after wrapping.
bool odometer_step(std::vector<Residue>& digits, Residue base) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < base) return true;
    digits[k] = 0;
  }
  return false;
}

// Smallest k < last such that every agent agrees at every step in [k, last];
// `constant` also demands states[k'] == states[last].
std::optional<std::size_t> find_sync(const SimulationTrace& tr, bool constant) {
  auto agreed = [&](std::size_t k) {
    for (std::size_t i = 1; i < tr.agents; ++i) {
      const auto xi = tr.state(k, i);
      const auto x0 = tr.state(k, 0);
      if (!std::equal(xi.begin(), xi.end(), x0.begin())) return false;
    }
    return !constant || tr.states[k] == tr.states.back();
  };
  const std::size_t last = tr.states.size() - 1;
  if (!agreed(last)) return std::nullopt;
  std::size_t k = last;
  while (k > 0 && agreed(k - 1)) --k;
  if (k == last) return std::nullopt;
  return k;
}

}  // namespace

Staircase staircase(const Matrix& a, const Matrix& b) {
  require_pair(a, b);
  const auto& f = a.field();
  const std::size_t n = a.rows();

  // Grow a basis of span[B, AB, …, A^{n−1}B], keeping only independent columns.
  std::vector<Vector> cols;
  auto try_add = [&](Vector v) {
    cols.push_back(std::move(v));
    if (rank(from_columns(f, n, cols)) < cols.size()) cols.pop_back();
  };
  Matrix block = b;
  for (std::size_t power = 0; power < n && cols.size() < n; ++power) {
    for (std::size_t j = 0; j < block.cols(); ++j) try_add(block.column(j));
    block = a * block;
  }
  const std::size_t r = cols.size();
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) try_add(Matrix::basis(f, n, i).column(0));

  Matrix s = from_columns(f, n, cols);
  const Matrix a_bar = inverse(s) * a * s;
  const bool nil = r == n || is_nilpotent(a_bar.block(r, r, n - r, n - r));

  StabilizabilityVerdict v{.controllable_dim = r, .stabilizable = nil, .reason = {}};
  if (r == n) {
    v.reason = "controllable";
  } else if (nil) {
    v.reason = "uncontrollable block is nilpotent";
  } else {
    v.reason = "uncontrollable block is not nilpotent";
  }
  return {std::move(v), std::move(s)};
}

std::vector<Matrix> nilpotent_gains(const Matrix& a, const Matrix& b, std::uint64_t budget) {
  require_pair(a, b);
  const auto& f = a.field();
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m * n; ++i) {
    if (count > budget / f.modulus()) {
      throw Error(Errc::BudgetExceeded, "gain search space exceeds budget");
    }
    count *= f.modulus();
  }

  std::vector<Matrix> gains;
  std::vector<Residue> digits(m * n, 0);
  do {
    Matrix k(f, m, n, digits);
    if (is_nilpotent(a - b * k)) gains.push_back(std::move(k));
  } while (odometer_step(digits, f.modulus()));
  return gains;
}

Matrix stabilizing_gain(const Matrix& a, const Matrix& b) {
  const auto [verdict, s] = staircase(a, b);
  if (!verdict.stabilizable) throw Error(Errc::NotStabilizable, verdict.reason);
  const auto& f = a.field();
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const std::size_t r = verdict.controllable_dim;

  if (r == 0) return Matrix::zeros(f, m, n);

  if (m > 1) {
    try {
      auto gains = nilpotent_gains(a, b);
      if (gains.empty()) throw Error(Errc::NotStabilizable, "no nilpotent-placing gain exists");
      return gains.front();
    } catch (const Error& err) {
      if (err.code() != Errc::BudgetExceeded) throw;
      throw Error(Errc::Unsupported, "multi-input gain search space too large");
    }
  }

  // Single input: work on the controllable block (A_c, b_c) of S^{-1}AS, S^{-1}b.
  const Matrix s_inv = inverse(s);
  const Matrix a_bar = s_inv * a * s;
  const Matrix b_bar = s_inv * b;
  const Matrix a_c = a_bar.block(0, 0, r, r);
  const Matrix b_c = b_bar.block(0, 0, r, 1);

  std::vector<Vector> ctrb;
  Vector v = b_c.column(0);
  for (std::size_t i = 0; i < r; ++i) {
    ctrb.push_back(v);
    v = mul(a_c, v);
  }
  // Ackermann with target λ^r: K_c = e_r^T · C^{-1} · A_c^r.
  const Matrix k_c = inverse(from_columns(f, r, ctrb)).block(r - 1, 0, 1, r) * power(a_c, r);

  Matrix k_bar(f, 1, n);
  for (std::size_t j = 0; j < r; ++j) k_bar.set(0, j, k_c(0, j));
  return k_bar * s_inv;
}

Matrix closed_loop(const Matrix& e, const AgentSystem& sys) {
  require_system(e, sys);
  const auto& f = e.field();
  const std::size_t agents = e.rows();
  return kron(Matrix::identity(f, agents), sys.a) - kron(laplacian(e), sys.b * *sys.k);
}

bool verify_closed_loop_spectrum(const Matrix& e, const AgentSystem& sys) {
  const Matrix cl = closed_loop(e, sys);
  const std::size_t n = sys.state_dim();
  const auto expected = char_poly(sys.a) * CharPoly::monomial(e.field(), (e.rows() - 1) * n);
  return char_poly(cl) == expected;
}

SimulationTrace simulate_scalar(const Matrix& e, std::span<const Residue> x0, std::size_t kmax) {
  if (!e.is_square()) throw Error(Errc::ShapeError, "graph matrix must be square");
  if (x0.size() != e.rows()) throw Error(Errc::ShapeError, "initial state has wrong length");
  if (kmax < e.rows()) throw Error(Errc::InvalidArgument, "kmax must be at least N");
  const auto& f = e.field();

  SimulationTrace tr;
  tr.agents = e.rows();
  tr.dim = 1;
  Vector x(x0.begin(), x0.end());
  for (auto& xi : x) xi = f.reduce(xi);
  tr.states.push_back(x);
  for (std::size_t k = 0; k < kmax; ++k) {
    x = mul(e, x);
    tr.states.push_back(x);
  }
  tr.sync_step = find_sync(tr, true);

  const auto rep = check_admissible(e);
  if (rep.admissible) {
    const Residue scale = f.inv(rep.p_dot_one);
    for (const auto& s : tr.states) tr.alpha.push_back({f.mul(dot(f, *rep.left_eigvec, s), scale)});
  }
  return tr;
}

SimulationTrace simulate_lti(const Matrix& e, const AgentSystem& sys, std::span<const Residue> x0,
                             std::optional<std::size_t> kmax) {
  require_system(e, sys);
  const auto rep = check_admissible(e);
  if (!rep.admissible) throw Error(Errc::NotAdmissible, "graph matrix is not admissible");
  if (!is_nilpotent(sys.a - sys.b * *sys.k)) {
    throw Error(Errc::BadGain, "A - BK is not nilpotent");
  }
  const auto& f = e.field();
  const std::size_t agents = e.rows();
  const std::size_t n = sys.state_dim();
  if (x0.size() != agents * n) throw Error(Errc::ShapeError, "stacked initial state has wrong length");
  const std::size_t steps = kmax.value_or(agents * n + 2);
  if (steps < agents * n) throw Error(Errc::InvalidArgument, "kmax must be at least N*n");

  const Matrix m = closed_loop(e, sys);
  const Vector& p = *rep.left_eigvec;
  const Residue scale = f.inv(rep.p_dot_one);
  auto alpha_of = [&](const Vector& x) {
    Vector acc(n, 0);
    for (std::size_t i = 0; i < agents; ++i)
      for (std::size_t d = 0; d < n; ++d) acc[d] = f.add(acc[d], f.mul(p[i], x[i * n + d]));
    for (auto& v : acc) v = f.mul(v, scale);
    return acc;
  };

  SimulationTrace tr;
  tr.agents = agents;
  tr.dim = n;
  Vector x(x0.begin(), x0.end());
  for (auto& xi : x) xi = f.reduce(xi);
  tr.states.push_back(x);
  tr.alpha.push_back(alpha_of(x));
  for (std::size_t k = 0; k < steps; ++k) {
    x = mul(m, x);
    tr.states.push_back(x);
    tr.alpha.push_back(alpha_of(x));
    if (tr.alpha.back() != mul(sys.a, tr.alpha[tr.alpha.size() - 2])) tr.alpha_recursion_ok = false;
  }
  tr.sync_step = find_sync(tr, false);
  return tr;
}

}  // namespace ffsync
