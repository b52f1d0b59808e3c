#include <algorithm>
#include <set>
#include <vector>

#include "ffsync/error.hpp"
#include "ffsync/generators.hpp"

namespace ffsync {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::ShapeError, "equivalence check needs equally shaped matrices");
  }
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "matrices over different fields");
}

bool columns_equal(const Matrix& a, std::size_t ca, const Matrix& b, std::size_t cb) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, ca) != b(i, cb)) return false;
  return true;
}

std::vector<Vector> sorted_columns(const Matrix& t) {
  std::vector<Vector> cols;
  cols.reserve(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) cols.push_back(t.column(j));
  std::sort(cols.begin(), cols.end());  // std::vector's operator< is lexicographic
  return cols;
}

}  // namespace

bool perm_equiv_naive(const Matrix& t1, const Matrix& t2) {
  require_same_shape(t1, t2);
  const std::size_t n = t1.cols();
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    bool match_found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && columns_equal(t2, j, t1, c)) {
        used[j] = true;
        match_found = true;
        break;
      }
    }
    if (!match_found) return false;
  }
  return true;
}

bool perm_equiv_lex(const Matrix& t1, const Matrix& t2) {
  require_same_shape(t1, t2);
  return sorted_columns(t1) == sorted_columns(t2);
}

bool row_perm_equiv(const Matrix& t1, const Matrix& t2) {
  return perm_equiv_lex(t1.transpose(), t2.transpose());
}

Matrix sort_columns(const Matrix& t) {
  const auto cols = sorted_columns(t);
  Matrix s(t.field(), t.rows(), t.cols());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < t.rows(); ++i) s.set(i, j, cols[j][i]);
  return s;
}

std::vector<Matrix> coset_representatives(const std::vector<Matrix>& mats) {
  // Two matrices are column-permutation equivalent iff their lex-sorted
  // column lists agree, so the sorted form keys the kept cosets.
  std::set<std::vector<Residue>> seen;
  std::vector<Matrix> kept;
  for (const auto& m : mats) {
    if (!kept.empty()) require_same_shape(kept.front(), m);
    const auto key = sort_columns(m);
    if (seen.emplace(key.entries().begin(), key.entries().end()).second) kept.push_back(m);
  }
  return kept;
}

}  // namespace ffsync
