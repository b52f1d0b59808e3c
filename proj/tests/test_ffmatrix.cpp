#include <catch_amalgamated.hpp>

#include "ffsync/error.hpp"
#include "ffsync/matrix.hpp"
#include "oracle.hpp"

using namespace ffsync;

namespace {

Residue scan_inverse(const Field& f, Residue a) {
  for (Residue b = 1; b < f.modulus(); ++b)
    if (f.mul(a, b) == 1) return b;
  return 0;
}

}  // namespace

TEST_CASE("field construction rejects composite moduli", "[field]") {
  CHECK_NOTHROW(Field(2));
  CHECK_NOTHROW(Field(7919));
  for (std::uint32_t bad : {0U, 1U, 4U, 9U, 15U, 7917U}) {
    try {
      Field f(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotPrime);
    }
  }
}

TEST_CASE("field inverse", "[field]") {
  CHECK(Field(5).inv(1) == 1);
  CHECK(Field(3).inv(2) == 2);
  const Field f7(7);
  CHECK(f7.inv(3) == scan_inverse(f7, 3));
  CHECK(f7.inv(3) == 5);

  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 101U}) {
    const Field f(p);
    for (Residue a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }

  try {
    (void)Field(5).inv(0);
    FAIL("zero inverted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoInverse);
  }
}

TEST_CASE("matrix constructors", "[matrix]") {
  const Field f(5);
  const auto id = Matrix::identity(f, 3);
  const auto one = Matrix::ones(f, 3);
  CHECK(one.rows() == 3);
  CHECK(one.cols() == 1);
  CHECK(Matrix::basis(f, 3, 2).column(0) == Vector{0, 0, 1});
  CHECK(is_zero(Matrix::zeros(f, 3, 1)));

  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = oracle::random_matrix(f, 3, 4, rng);
    CHECK(id * m == m);
  }

  CHECK_THROWS_AS(Matrix(f, 2, 2, {0, 1, 5, 0}), Error);
  CHECK_THROWS_AS(Matrix(f, 2, 2, {0, 1, 2}), Error);
  CHECK(Matrix::from_rows(f, {{-1, 6}}) == Matrix(f, 1, 2, {4, 1}));
}

TEST_CASE("operations reject mismatched fields and shapes", "[matrix]") {
  const auto a = Matrix::identity(Field(3), 2);
  const auto b = Matrix::identity(Field(5), 2);
  try {
    (void)kron(a, b);
    FAIL("kron across fields");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  CHECK_THROWS_AS(a * b, Error);
  try {
    (void)det(Matrix::zeros(Field(3), 2, 3));
    FAIL("det of non-square");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ShapeError);
  }
  CHECK_THROWS_AS(char_poly(Matrix::zeros(Field(3), 1, 2)), Error);
  CHECK_THROWS_AS(classify(Matrix::zeros(Field(3), 3, 2)), Error);
}

TEST_CASE("determinant examples", "[det]") {
  const Field f3(3);
  CHECK(det(Matrix::identity(Field(5), 3)) == 1);
  const auto t = Matrix::from_rows(f3, {{2, 2}, {0, 1}});
  CHECK(det(t) == oracle::cofactor_det(t));
  CHECK(det(t) == 2);
  const auto s = Matrix::from_rows(f3, {{0, 1}, {0, 1}});
  CHECK(det(s) == oracle::cofactor_det(s));
  CHECK(det(s) == 0);
}

TEST_CASE("determinant agrees with cofactor expansion", "[det][property]") {
  for (std::uint32_t p : {2U, 3U}) {
    oracle::for_each_matrix(Field(p), 2, 2,
                            [](const Matrix& m) { CHECK(det(m) == oracle::cofactor_det(m)); });
  }
  oracle::for_each_matrix(Field(2), 3, 3,
                          [](const Matrix& m) { REQUIRE(det(m) == oracle::cofactor_det(m)); });
  Rng rng(42);
  for (std::uint32_t p : {5U, 7U, 13U}) {
    const Field f(p);
    for (std::size_t n = 2; n <= 5; ++n)
      for (int trial = 0; trial < 30; ++trial) {
        const auto m = oracle::random_matrix(f, n, n, rng);
        REQUIRE(det(m) == oracle::cofactor_det(m));
      }
  }
}

TEST_CASE("determinant is multiplicative", "[det][property]") {
  Rng rng(7);
  for (std::uint32_t p : {2U, 3U, 5U, 31U}) {
    const Field f(p);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 25; ++trial) {
        const auto a = oracle::random_matrix(f, n, n, rng);
        const auto b = oracle::random_matrix(f, n, n, rng);
        REQUIRE(det(a * b) == f.mul(det(a), det(b)));
      }
  }
}

TEST_CASE("inverse examples", "[inverse]") {
  const Field f3(3);
  CHECK(inverse(Matrix::identity(f3, 4)) == Matrix::identity(f3, 4));

  const auto t = Matrix::from_rows(f3, {{2, 2}, {0, 1}});
  const auto t_inv = inverse(t);
  CHECK(t_inv == Matrix::from_rows(f3, {{2, 2}, {0, 1}}));
  CHECK(t * t_inv == Matrix::identity(f3, 2));

  const auto s = Matrix::from_rows(f3, {{0, 1}, {2, 2}});
  const auto s_inv = inverse(s);
  CHECK(s_inv == Matrix::from_rows(f3, {{2, 2}, {1, 0}}));
  CHECK(s * s_inv == Matrix::identity(f3, 2));

  try {
    (void)inverse(Matrix::from_rows(f3, {{0, 1}, {0, 1}}));
    FAIL("inverted a singular matrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularMatrix);
  }
}

TEST_CASE("inverse is exact on both sides", "[inverse][property]") {
  Rng rng(11);
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 101U}) {
    const Field f(p);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 25; ++trial) {
        const auto m = oracle::random_matrix(f, n, n, rng);
        if (det(m) == 0) {
          CHECK_THROWS_AS(inverse(m), Error);
          continue;
        }
        const auto mi = inverse(m);
        REQUIRE(mi * m == Matrix::identity(f, n));
        REQUIRE(m * mi == Matrix::identity(f, n));
      }
  }
}

TEST_CASE("characteristic polynomial examples", "[charpoly]") {
  const Field f3(3);
  CHECK(char_poly(Matrix::zeros(f3, 2, 2)).coeffs == Vector{1, 0, 0});
  // λ² − Tr·λ + det
  CHECK(char_poly(Matrix::from_rows(f3, {{0, 1}, {0, 1}})).coeffs == Vector{1, 2, 0});
  CHECK(char_poly(Matrix::from_rows(f3, {{2, 2}, {2, 2}})).coeffs == Vector{1, 2, 0});
}

TEST_CASE("characteristic polynomial agrees with cofactor expansion", "[charpoly][property]") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    oracle::for_each_matrix(Field(p), 2, 2, [](const Matrix& m) {
      REQUIRE(char_poly(m).coeffs == oracle::cofactor_char_poly(m));
    });
  }
  oracle::for_each_matrix(Field(2), 3, 3, [](const Matrix& m) {
    REQUIRE(char_poly(m).coeffs == oracle::cofactor_char_poly(m));
  });
  Rng rng(3);
  for (std::uint32_t p : {3U, 5U}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = oracle::random_matrix(Field(p), 3, 3, rng);
      REQUIRE(char_poly(m).coeffs == oracle::cofactor_char_poly(m));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_matrix(Field(7), 5, 5, rng);
    REQUIRE(char_poly(m).coeffs == oracle::cofactor_char_poly(m));
  }
}

TEST_CASE("characteristic polynomial carries trace and determinant", "[charpoly][property]") {
  Rng rng(5);
  for (std::uint32_t p : {2U, 3U, 11U}) {
    const Field f(p);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto m = oracle::random_matrix(f, n, n, rng);
      const auto c = char_poly(m);
      REQUIRE(c.coeffs.size() == n + 1);
      CHECK(c.coeffs[0] == 1);
      Residue tr = 0;
      for (std::size_t i = 0; i < n; ++i) tr = f.add(tr, m(i, i));
      CHECK(c.coeffs[1] == f.neg(tr));
      const Residue d = det(m);
      CHECK(c.coeffs[n] == (n % 2 == 0 ? d : f.neg(d)));
    }
  }
}

TEST_CASE("left null space examples", "[nullspace]") {
  const Field f3(3);
  CHECK(left_nullspace(Matrix::zeros(f3, 2, 2)).size() == 2);
  const auto basis = left_nullspace(Matrix::from_rows(f3, {{2, 1}, {0, 0}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vector{0, 1});
  CHECK(left_nullspace(Matrix::identity(f3, 2)).empty());
}

TEST_CASE("left null space vectors annihilate and have full dimension", "[nullspace][property]") {
  Rng rng(9);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Field f(p);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 40; ++trial) {
        // Low-rank products make nontrivial null spaces common.
        const std::size_t inner = 1 + rng.below(n);
        const auto m = oracle::random_matrix(f, n, inner, rng) * oracle::random_matrix(f, inner, n, rng);
        const auto basis = left_nullspace(m);
        REQUIRE(basis.size() == n - rank(m));
        for (const auto& v : basis) REQUIRE(mul(v, m) == Vector(n, 0));
        if (!basis.empty()) {
          Matrix stacked(f, basis.size(), n);
          for (std::size_t r = 0; r < basis.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.set(r, c, basis[r][c]);
          CHECK(rank(stacked) == basis.size());
        }
      }
  }
}

TEST_CASE("kronecker product", "[kron]") {
  const Field f3(3);
  const auto a = Matrix::from_rows(f3, {{1, 2}, {0, 1}});
  const auto i2 = Matrix::identity(f3, 2);
  CHECK(kron(i2, a) == Matrix::from_rows(f3, {{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}}));

  const auto l = Matrix::from_rows(f3, {{1, 2}, {0, 0}});
  const auto bk = Matrix::from_rows(f3, {{0, 0}, {1, 0}});
  CHECK(kron(l, bk) == Matrix::from_rows(f3, {{0, 0, 0, 0}, {1, 0, 2, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));

  const auto m = Matrix::from_rows(f3, {{1, 2, 0}, {2, 2, 1}});
  CHECK(kron(Matrix::from_rows(f3, {{2}}), m) == m.scaled(2));

  Rng rng(13);
  const Field f5(5);
  const auto x = oracle::random_matrix(f5, 2, 3, rng);
  const auto y = oracle::random_matrix(f5, 3, 2, rng);
  const auto k = kron(x, y);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(k(i, j) == f5.mul(x(i / 3, j / 2), y(i % 3, j % 2)));
}

TEST_CASE("classification flags", "[classify]") {
  for (std::uint32_t p : {2U, 3U, 7U}) {
    const auto swap = Matrix::from_rows(Field(p), {{0, 1}, {1, 0}});
    CHECK(classify(swap) == MatrixClass{.row_stochastic = true, .invertible = true,
                                        .permutation = true, .nilpotent = false,
                                        .identity = false});
  }
  const Field f3(3);
  CHECK(classify(Matrix::from_rows(f3, {{2, 2}, {0, 1}})) ==
        MatrixClass{.row_stochastic = true, .invertible = true, .permutation = false,
                    .nilpotent = false, .identity = false});
  CHECK(classify(Matrix::from_rows(f3, {{1, 0}, {2, 2}})) ==
        MatrixClass{.row_stochastic = true, .invertible = true, .permutation = false,
                    .nilpotent = false, .identity = false});
  const auto strict = classify(Matrix::from_rows(f3, {{0, 1}, {0, 0}}));
  CHECK(strict.nilpotent);
  CHECK_FALSE(strict.row_stochastic);
  CHECK_FALSE(strict.invertible);
  CHECK(classify(Matrix::identity(f3, 3)).identity);
  // Entry 2 is not binary even though rows sum to 1 mod 3.
  CHECK_FALSE(classify(Matrix::from_rows(f3, {{2, 2}, {2, 2}})).permutation);
}

TEST_CASE("nilpotency by powers matches the characteristic polynomial", "[classify][property]") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Field f(p);
    oracle::for_each_matrix(f, 2, 2, [&](const Matrix& m) {
      REQUIRE(classify(m).nilpotent == (char_poly(m) == CharPoly::monomial(f, 2)));
    });
  }
  Rng rng(17);
  for (std::uint32_t p : {2U, 3U}) {
    const Field f(p);
    for (std::size_t n : {3U, 4U}) {
      for (int trial = 0; trial < 400; ++trial) {
        auto m = oracle::random_matrix(f, n, n, rng);
        // Bias towards nilpotent samples: conjugate a strictly upper triangular matrix.
        if (trial % 2 == 0) {
          Matrix u(f, n, n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) u.set(i, j, rng.uniform(f));
          if (det(m) != 0) m = inverse(m) * u * m;
        }
        REQUIRE(classify(m).nilpotent == (char_poly(m) == CharPoly::monomial(f, n)));
        REQUIRE(classify(m).nilpotent == oracle::naive_power_is_zero(m, n));
      }
    }
  }
}
