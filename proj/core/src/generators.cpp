#include <string>

#include "ffsync/error.hpp"
#include "ffsync/generators.hpp"

namespace ffsync {

namespace {

void validate(const GenConfig& cfg) {
  if (cfg.n < 2) throw Error(Errc::InvalidArgument, "generator dimension must be at least 2");
  if (cfg.max_attempts < 1) throw Error(Errc::InvalidArgument, "max_attempts must be positive");
}

[[noreturn]] void exhausted(const GenConfig& cfg) {
  throw Error(Errc::GenerationExhausted,
              "no acceptable matrix after " + std::to_string(cfg.max_attempts) + " attempts");
}

Matrix sample_row_stochastic(std::size_t n, const Field& f, Rng& rng) {
  Matrix t(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Residue sum = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const Residue v = rng.uniform(f);
      t.set(i, j, v);
      sum = f.add(sum, v);
    }
    t.set(i, n - 1, f.sub(1, sum));
  }
  return t;
}

Matrix sample_upper_triangular(std::size_t n, const Field& f, Rng& rng) {
  Matrix t(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) t.set(i, i, rng.nonzero(f));
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) t.set(i, j, rng.uniform(f));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Residue sum = 0;
    for (std::size_t j = i; j + 1 < n; ++j) sum = f.add(sum, t(i, j));
    t.set(i, n - 1, f.sub(1, sum));
  }
  t.set(n - 1, n - 1, 1);
  return t;
}

// Reverses row and column order; maps upper triangular to lower triangular
// and preserves row sums.
Matrix reverse_both(const Matrix& u) {
  const std::size_t n = u.rows();
  Matrix l(u.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l.set(i, j, u(n - 1 - i, n - 1 - j));
  return l;
}

}  // namespace

std::optional<Matrix> sar_attempt(std::size_t n, const Field& f, Rng& rng,
                                  bool strict_permutation) {
  Matrix t = sample_row_stochastic(n, f, rng);
  if (det(t) == 0) return std::nullopt;
  const bool rejected = strict_permutation ? is_permutation(t) : is_identity(t.transpose() * t);
  if (rejected) return std::nullopt;
  return t;
}

Matrix gen_sar(const GenConfig& cfg, Rng& rng) {
  validate(cfg);
  if (cfg.n == 2 && cfg.field.modulus() == 2) {
    throw Error(Errc::ImpossibleConfig, "every invertible row-stochastic 2x2 matrix over GF(2) "
                                        "is a permutation");
  }
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    if (auto t = sar_attempt(cfg.n, cfg.field, rng, cfg.strict_permutation)) return *std::move(t);
  }
  exhausted(cfg);
}

Matrix gen_tf(const GenConfig& cfg, Rng& rng) {
  validate(cfg);
  if (cfg.n == 2 && cfg.field.modulus() == 2) {
    throw Error(Errc::ImpossibleConfig, "the only triangular invertible row-stochastic 2x2 "
                                        "matrix over GF(2) is the identity");
  }
  // A rejected identity restarts from the diagonal draw, keeping the output
  // uniform over the non-identity triangular matrices.
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Matrix t = sample_upper_triangular(cfg.n, cfg.field, rng);
    if (is_identity(t)) continue;
    return cfg.method == GenMethod::TfLower ? reverse_both(t) : t;
  }
  exhausted(cfg);
}

StabilizerConstruction stabilizer_from(const Matrix& a_block, const Vector& c_row) {
  if (!a_block.is_square() || c_row.size() != a_block.rows()) {
    throw Error(Errc::ShapeError, "stabilizer parts must be (N-1)x(N-1) and length N-1");
  }
  if (det(a_block) == 0) throw Error(Errc::SingularMatrix, "A_{N-1} block is singular");
  const auto& f = a_block.field();
  const std::size_t n = a_block.rows() + 1;

  Matrix a(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) a.set(i, j, a_block(i, j));
    a.set(n - 1, i, f.reduce(c_row[i]));
  }
  a.set(n - 1, n - 1, 1);

  Matrix q = Matrix::identity(f, n);
  Matrix q_inv = Matrix::identity(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    q.set(i, n - 1, 1);
    q_inv.set(i, n - 1, -1);
  }
  Matrix t = q * a * q_inv;
  return {a_block, c_row, std::move(q), std::move(a), std::move(t)};
}

StabilizerConstruction gen_stabilizer(const GenConfig& cfg, Rng& rng) {
  validate(cfg);
  const auto& f = cfg.field;
  const std::size_t m = cfg.n - 1;
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Matrix block(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) block.set(i, j, rng.uniform(f));
    if (det(block) == 0) continue;
    Vector c(m);
    for (auto& x : c) x = rng.uniform(f);
    return stabilizer_from(block, c);
  }
  exhausted(cfg);
}

Matrix generate(const GenConfig& cfg, Rng& rng) {
  switch (cfg.method) {
    case GenMethod::Sar: return gen_sar(cfg, rng);
    case GenMethod::TfUpper:
    case GenMethod::TfLower: return gen_tf(cfg, rng);
    case GenMethod::Stabilizer: return gen_stabilizer(cfg, rng).t;
  }
  throw Error(Errc::InvalidArgument, "unknown generator method");
}

}  // namespace ffsync
