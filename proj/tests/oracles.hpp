#pragma once

// Slow, independent reference computations for the unit tests. None of these
// reuse the elimination, Gram or laziness code paths of the library.

#include <algorithm>
#include <functional>
#include <vector>

#include "multisep/exactalg.hpp"
#include "multisep/hilbert.hpp"
#include "multisep/mgraded.hpp"
#include "multisep/points.hpp"
#include "multisep/separators.hpp"

namespace oracle {

using namespace multisep;

// Laplace expansion along the first row.
inline Scalar det(const std::vector<Vector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Scalar acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m[0][c]) == 0) continue;
    std::vector<Vector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Scalar term = m[0][c] * det(minor);
    acc += (c % 2 == 0) ? term : Scalar(-term);
  }
  return acc;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  if (k > n) return;
  while (true) {
    if (f(idx)) return;
    std::size_t j = k;
    while (j-- > 0 && idx[j] == n - k + j) {
    }
    if (j == static_cast<std::size_t>(-1)) return;
    ++idx[j];
    for (std::size_t t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const DenseMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<Vector> sub;
        for (auto r : rows) {
          Vector v;
          for (auto c : cols) v.push_back(m(r, c));
          sub.push_back(v);
        }
        found = sgn(det(sub)) != 0;
        return found;
      });
      return found;
    });
    if (found) return k;
  }
  return 0;
}

// Exponent vectors of degree i by recursive enumeration (any order).
inline std::vector<Exponents> monomials(const SpaceShape& shape, const MultiDegree& i) {
  std::vector<Exponents> out{Exponents{}};
  for (std::size_t k = 0; k < shape.factors(); ++k) {
    std::vector<Exponents> factor;
    std::function<void(Exponents&, unsigned, unsigned)> rec = [&](Exponents& e, unsigned v, unsigned left) {
      if (v == shape.dim(k)) {
        e.push_back(left);
        factor.push_back(e);
        e.pop_back();
        return;
      }
      for (unsigned a = 0; a <= left; ++a) {
        e.push_back(a);
        rec(e, v + 1, left - a);
        e.pop_back();
      }
    };
    Exponents e;
    rec(e, 0, i[k]);
    std::vector<Exponents> next;
    for (const auto& a : out)
      for (const auto& b : factor) {
        Exponents c = a;
        c.insert(c.end(), b.begin(), b.end());
        next.push_back(c);
      }
    out = next;
  }
  return out;
}

inline Scalar monomial_value(const Exponents& e, const ProjPoint& p) {
  const auto ic = p.integer_coords();
  Scalar acc = 1;
  std::size_t v = 0;
  for (const auto& f : ic)
    for (const auto& c : f) {
      for (unsigned t = 0; t < e[v]; ++t) acc *= c;
      ++v;
    }
  return acc;
}

// Rank of the directly evaluated monomial matrix, via the library's dense
// elimination (no Gram matrix).
inline std::size_t hilbert_direct(const PointSet& x, const MultiDegree& i) {
  if (x.empty()) return 0;
  return rank(evaluation_matrix(x, i));
}

// Degrees of the box in which some element of (I_Y) is nonzero at P, read
// off a kernel basis of the evaluation matrix of Y.
inline std::vector<MultiDegree> separator_degrees(const PointSet& x, std::size_t k, const DegreeBox& box) {
  const PointSet y = remove_point(x, x[k]);
  std::vector<MultiDegree> found;
  for (const auto& i : box.degrees()) {
    const std::size_t n = monomial_count(x.shape(), i);
    const auto basis = y.empty() ? kernel_basis(DenseMatrix(0, n)) : kernel_basis(evaluation_matrix(y, i));
    const Vector at_p = evaluation_row(x.shape(), x[k], i);
    const bool hit = std::any_of(basis.begin(), basis.end(), [&](const Vector& v) {
      Scalar acc;
      for (std::size_t c = 0; c < n; ++c) acc += at_p[c] * v[c];
      return sgn(acc) != 0;
    });
    if (hit) found.push_back(i);
  }
  return found;
}

inline std::vector<MultiDegree> minimal(const std::vector<MultiDegree>& s) {
  std::vector<MultiDegree> out;
  for (const auto& a : s) {
    bool min = true;
    for (const auto& b : s)
      if (b != a && leq(b, a)) min = false;
    if (min && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// H of a Ferrers set: cells (a,b) of the diagram with a <= i and b <= j.
inline std::size_t ferrers_hilbert(const Partition& lambda, unsigned i, unsigned j) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < lambda.length() && a <= i; ++a) n += std::min<std::size_t>(lambda[a], j + 1);
  return n;
}

// (I_X, F_1..F_s)_i = (I_Y)_i through reduced row echelon forms of the
// evaluation matrices and explicit monomial multiples.
inline bool ideal_sum_by_elimination(const PointSet& x, std::size_t k, const std::vector<MultiForm>& seps,
                                     const DegreeBox& box) {
  const SpaceShape& shape = x.shape();
  const PointSet y = remove_point(x, x[k]);
  for (const auto& i : box.degrees()) {
    const std::size_t n = monomial_count(shape, i);
    std::vector<Vector> gens = kernel_basis(evaluation_matrix(x, i));
    const std::size_t ix = gens.size();
    for (const auto& f : seps) {
      if (!leq(f.degree, i)) continue;
      for (const auto& m : monomials(shape, i - f.degree)) {
        MultiForm mono{i - f.degree, Vector(monomial_count(shape, i - f.degree))};
        mono.coeffs[monomial_index(shape, m)] = 1;
        gens.push_back(multiply(shape, mono, f).coeffs);
      }
    }
    const std::size_t iy = y.empty() ? n : kernel_basis(evaluation_matrix(y, i)).size();
    const std::size_t sum = gens.empty() ? 0 : span_dim(gens);
    if (sum != iy) return false;
    // containment in I_Y
    for (std::size_t g = ix; g < gens.size(); ++g)
      for (const auto& q : y)
        if (sgn(evaluate(shape, MultiForm{i, gens[g]}, q)) != 0) return false;
  }
  return true;
}

// (I_X : F)_i = (I_P)_i: a basis of R_i, products with F reduced modulo
// (I_X) by testing membership through evaluation at X.
inline bool colon_by_elimination(const PointSet& x, std::size_t k, const MultiForm& f, const DegreeBox& box) {
  const SpaceShape& shape = x.shape();
  for (const auto& i : box.degrees()) {
    const auto mons = monomials(shape, i);
    // matrix whose kernel is the colon piece: rows q, column m holds (m F)(q)
    DenseMatrix c(x.size(), mons.size());
    for (std::size_t col = 0; col < mons.size(); ++col) {
      MultiForm mono{i, Vector(mons.size())};
      mono.coeffs[monomial_index(shape, mons[col])] = 1;
      const MultiForm mf = multiply(shape, mono, f);
      for (std::size_t q = 0; q < x.size(); ++q) c(q, col) = evaluate(shape, mf, x[q]);
    }
    const auto colon = kernel_basis(c);
    Vector at_p(mons.size());
    for (std::size_t col = 0; col < mons.size(); ++col) at_p[col] = monomial_value(mons[col], x[k]);
    const auto ip = kernel_basis(DenseMatrix::from_rows(std::vector<Vector>{at_p}, mons.size()));
    if (colon.size() != ip.size()) return false;
    std::vector<Vector> both = colon;
    both.insert(both.end(), ip.begin(), ip.end());
    if (!both.empty() && span_dim(both) != colon.size()) return false;
  }
  return true;
}

}  // namespace oracle
