#include "multisep/exactalg.hpp"

#include <algorithm>

#include "multisep/error.hpp"

namespace multisep {

namespace {

// Bareiss forward elimination on integer rows. Returns pivot columns; the
// first pivots.size() rows of `m` end up in (unnormalised) echelon form.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t n = m.size();
  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) continue;
    if (p != r) std::swap(m[p], m[r]);
    const Integer& piv = m[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      auto& row = m[i];
      const Integer lead = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (piv * row[j] - lead * m[r][j]) / prev, exact by Sylvester's identity
        tmp = piv * row[j];
        tmp -= lead * m[r][j];
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Scales each row by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const DenseMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  Integer l;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    l = 1;
    for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& q = m(r, c);
      if (sgn(q) == 0) continue;
      out[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(Errc::LengthMismatch, "entries length != rows * cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  DenseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::LengthMismatch, "row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector DenseMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(Errc::LengthMismatch, "vector length != cols");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::size_t rank(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto rows = integer_rows(m);
  return bareiss_echelon(rows, m.cols()).size();
}

std::size_t integer_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(Errc::LengthMismatch, "rows of different lengths");
  return bareiss_echelon(rows, cols).size();
}

RowEchelon reduced_row_echelon(const DenseMatrix& m) {
  RowEchelon out;
  out.cols = m.cols();
  if (m.rows() == 0 || m.cols() == 0) return out;
  auto rows = integer_rows(m);
  out.pivots = bareiss_echelon(rows, m.cols());
  const std::size_t rk = out.pivots.size();
  rows.resize(rk);
  // Fraction-free back substitution: clear each pivot column above its row,
  // dividing rows by their content to keep entries small.
  Integer g, a, b;
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(rows[i][pc]) == 0) continue;
      a = rows[k][pc];
      b = rows[i][pc];
      g = gcd(a, b);
      a /= g;
      b /= g;
      auto& ri = rows[i];
      for (std::size_t c = out.pivots[i]; c < m.cols(); ++c) {
        ri[c] *= a;
        if (sgn(rows[k][c]) != 0) ri[c] -= b * rows[k][c];
      }
      g = 0;
      for (const auto& e : ri) {
        if (sgn(e) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) break;
      }
      if (g > 1)
        for (auto& e : ri)
          if (sgn(e) != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    }
  }
  out.rows.resize(rk);
  for (std::size_t k = 0; k < rk; ++k) {
    const Integer& piv = rows[k][out.pivots[k]];
    Vector v(m.cols());
    for (std::size_t c = out.pivots[k]; c < m.cols(); ++c)
      if (sgn(rows[k][c]) != 0) {
        v[c] = Scalar(rows[k][c], piv);
        v[c].canonicalize();
      }
    out.rows[k] = std::move(v);
  }
  return out;
}

std::vector<Vector> kernel_basis(const DenseMatrix& m) {
  const auto ech = reduced_row_echelon(m);
  std::vector<Vector> basis;
  for (std::size_t f : ech.free_columns()) {
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < ech.rank(); ++k) {
      const Scalar& e = ech.rows[k][f];
      if (sgn(e) != 0) v[ech.pivots[k]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n) throw Error(Errc::LengthMismatch, "span_dim: vectors of different lengths");
  return rank(DenseMatrix::from_rows(vectors, n));
}

SparseVector to_sparse(std::span<const Scalar> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim);
  for (const auto& [i, x] : v) {
    if (i >= dim) throw Error(Errc::LengthMismatch, "sparse index outside dimension");
    out[i] = x;
  }
  return out;
}

void EchelonBasis::reduce(const SparseVector& v, std::vector<Scalar>& acc,
                          std::vector<std::size_t>& touched) const {
  for (const auto& [i, x] : v) {
    if (i >= dim_) throw Error(Errc::LengthMismatch, "vector longer than basis dimension");
    acc[i] = x;
    touched.push_back(i);
  }
  Scalar f;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    if (sgn(acc[pc]) == 0) continue;
    // stored rows are normalised to 1 at their pivot
    f = acc[pc];
    for (const auto& [j, y] : rows_[k]) {
      if (sgn(acc[j]) == 0) touched.push_back(j);
      acc[j] -= f * y;
    }
  }
}

bool EchelonBasis::insert(const SparseVector& v) {
  scratch_.resize(dim_);
  touched_.clear();
  reduce(v, scratch_, touched_);
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
  SparseVector row;
  for (std::size_t j : touched_) {
    if (sgn(scratch_[j]) != 0) row.emplace_back(j, scratch_[j]);
    scratch_[j] = 0;
  }
  if (row.empty()) return false;
  const std::size_t pc = row.back().first;
  const Scalar inv = 1 / row.back().second;
  for (auto& [j, y] : row) y *= inv;
  pivots_.push_back(pc);
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBasis::contains(const SparseVector& v) const {
  std::vector<Scalar> acc(dim_);
  std::vector<std::size_t> touched;
  reduce(v, acc, touched);
  return std::all_of(touched.begin(), touched.end(), [&](std::size_t j) { return sgn(acc[j]) == 0; });
}

}  // namespace multisep
