#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multisep/error.hpp"
#include "multisep/exactalg.hpp"
#include "oracles.hpp"

using namespace multisep;

namespace {

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span, bool fractions) {
  std::uniform_int_distribution<int> d(-span, span), den(1, 4);
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Scalar(d(rng), fractions ? den(rng) : 1);
      m(r, c).canonicalize();
    }
  return m;
}

// Rank-deficient: rows are combinations of a few random rows.
DenseMatrix low_rank_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  const DenseMatrix base = random_matrix(rng, k, cols, 5, true);
  const DenseMatrix mix = random_matrix(rng, rows, k, 3, false);
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) += mix(r, j) * base(j, c);
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(DenseMatrix(0, 0)) == 0);
  CHECK(rank(DenseMatrix(3, 4)) == 0);
  CHECK(rank(DenseMatrix::identity(5)) == 5);
  const std::vector<Vector> rows{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(DenseMatrix::from_rows(rows, 3)) == 2);
}

TEST_CASE("rank agrees with the largest nonzero minor") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const DenseMatrix m = t % 2 ? random_matrix(rng, r, c, 3, t % 3 == 0) : low_rank_matrix(rng, r, c, 1 + rng() % 2);
    CHECK(rank(m) == oracle::rank_by_minors(m));
  }
}

TEST_CASE("integer_rank matches rank") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    const DenseMatrix m = low_rank_matrix(rng, 6, 7, 1 + rng() % 5);
    const DenseMatrix z = random_matrix(rng, 5, 5, 9, false);
    std::vector<std::vector<Integer>> rows(z.rows(), std::vector<Integer>(z.cols()));
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j) rows[i][j] = z(i, j).get_num();
    CHECK(integer_rank(rows) == rank(z));
    (void)m;
  }
  CHECK(integer_rank({}) == 0);
  CHECK_THROWS_AS(integer_rank({{Integer(1), Integer(2)}, {Integer(1)}}), Error);
}

TEST_CASE("reduced row echelon form") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const DenseMatrix m = low_rank_matrix(rng, 5, 7, 1 + rng() % 4);
    const RowEchelon e = reduced_row_echelon(m);
    REQUIRE(e.rank() == rank(m));
    for (std::size_t k = 0; k < e.rank(); ++k) {
      CHECK(e.rows[k][e.pivots[k]] == 1);
      for (std::size_t j = 0; j < e.rank(); ++j)
        if (j != k) CHECK(sgn(e.rows[j][e.pivots[k]]) == 0);
      // entries left of the pivot vanish
      for (std::size_t c = 0; c < e.pivots[k]; ++c) CHECK(sgn(e.rows[k][c]) == 0);
    }
    for (std::size_t k = 1; k < e.rank(); ++k) CHECK(e.pivots[k - 1] < e.pivots[k]);
    // same row space
    std::vector<Vector> both(e.rows);
    for (std::size_t r = 0; r < m.rows(); ++r) both.emplace_back(m.row(r).begin(), m.row(r).end());
    CHECK(span_dim(both) == e.rank());
    CHECK(e.free_columns().size() == m.cols() - e.rank());
  }
}

TEST_CASE("kernel basis") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 40; ++t) {
    const DenseMatrix m = low_rank_matrix(rng, 4, 6, 1 + rng() % 4);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == m.cols() - rank(m));
    for (const auto& v : ker) {
      const Vector mv = m.apply(v);
      for (const auto& x : mv) CHECK(sgn(x) == 0);
    }
    if (!ker.empty()) CHECK(span_dim(ker) == ker.size());
    // unit entry at its own free column, zero at the others
    const auto free = reduced_row_echelon(m).free_columns();
    for (std::size_t k = 0; k < ker.size(); ++k)
      for (std::size_t j = 0; j < free.size(); ++j) CHECK(ker[k][free[j]] == (j == k ? 1 : 0));
  }
  CHECK(kernel_basis(DenseMatrix(0, 3)).size() == 3);
  CHECK(kernel_basis(DenseMatrix::identity(3)).empty());
}

TEST_CASE("span_dim") {
  CHECK(span_dim({}) == 0);
  const std::vector<Vector> v{{1, 1, 0}, {0, 1, 1}, {1, 2, 1}};
  CHECK(span_dim(v) == 2);
  const std::vector<Vector> bad{{1, 2}, {1, 2, 3}};
  CHECK_THROWS_AS(span_dim(bad), Error);
  try {
    span_dim(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
}

TEST_CASE("from_rows, transpose and apply") {
  const std::vector<Vector> rows{{1, 2}, {3, 4}, {5, 6}};
  const DenseMatrix m = DenseMatrix::from_rows(rows, 2);
  CHECK(m.transpose().rows() == 2);
  CHECK(m.transpose()(1, 2) == 6);
  CHECK(m.apply(Vector{1, -1}) == Vector{-1, -1, -1});
  CHECK_THROWS_AS(DenseMatrix::from_rows(rows, 3), Error);
  CHECK_THROWS_AS(DenseMatrix(2, 2, std::vector<Scalar>(3)), Error);
}

TEST_CASE("rational entries") {
  const std::vector<Vector> rows{{Scalar(1, 2), Scalar(1, 3)}, {Scalar(3, 2), Scalar(1)}};
  CHECK(rank(DenseMatrix::from_rows(rows, 2)) == 1);
  const auto ker = kernel_basis(DenseMatrix::from_rows(rows, 2));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vector{Scalar(-2, 3), 1});
}

TEST_CASE("sparse conversion round trip") {
  const Vector v{0, 3, 0, Scalar(-1, 2)};
  const SparseVector s = to_sparse(v);
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == 1);
  CHECK(s[1].first == 3);
  CHECK(to_dense(s, 4) == v);
}

TEST_CASE("EchelonBasis agrees with dense span_dim") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    const std::size_t dim = 2 + rng() % 9;
    EchelonBasis eb(dim);
    std::vector<Vector> seen;
    const int count = 1 + static_cast<int>(rng() % 14);
    for (int k = 0; k < count; ++k) {
      Vector v(dim);
      // sparse random vectors, sometimes combinations of earlier ones
      if (!seen.empty() && rng() % 3 == 0) {
        for (const auto& w : seen)
          for (std::size_t c = 0; c < dim; ++c) v[c] += Scalar(static_cast<long>(rng() % 5) - 2) * w[c];
      } else {
        for (std::size_t c = 0; c < dim; ++c)
          if (rng() % 3 == 0) v[c] = Scalar(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        for (auto& c : v) c.canonicalize();
      }
      const std::size_t before = seen.empty() ? 0 : span_dim(seen);
      seen.push_back(v);
      const bool grew = eb.insert(std::span<const Scalar>(v));
      CHECK(grew == (span_dim(seen) > before));
      CHECK(eb.rank() == span_dim(seen));
    }
    for (const auto& w : seen) CHECK(eb.contains(to_sparse(w)));
  }
}

TEST_CASE("EchelonBasis membership") {
  EchelonBasis eb(3);
  CHECK(eb.insert(to_sparse(Vector{1, 1, 0})));
  CHECK_FALSE(eb.insert(to_sparse(Vector{2, 2, 0})));
  CHECK(eb.contains(to_sparse(Vector{-1, -1, 0})));
  CHECK_FALSE(eb.contains(to_sparse(Vector{0, 0, 1})));
  CHECK(eb.contains(SparseVector{}));
  CHECK(eb.rank() == 1);
}
