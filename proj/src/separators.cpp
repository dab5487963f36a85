#include "multisep/separators.hpp"

#include <algorithm>

#include "multisep/error.hpp"
#include "multisep/parallel.hpp"

namespace multisep {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[v] + b[v];
  return out;
}

}  // namespace

bool MultiForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& q) { return sgn(q) == 0; });
}

Scalar evaluate(const SpaceShape& shape, const MultiForm& f, const ProjPoint& p) {
  const Vector row = evaluation_row(shape, p, f.degree);
  if (row.size() != f.coeffs.size()) throw Error(Errc::LengthMismatch, "form coefficients do not match its degree");
  Scalar acc;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (sgn(f.coeffs[c]) != 0) acc += row[c] * f.coeffs[c];
  return acc;
}

MultiForm multiply(const SpaceShape& shape, const MultiForm& a, const MultiForm& b) {
  const MultiDegree deg = a.degree + b.degree;
  const auto ea = monomial_basis(shape, a.degree);
  const auto eb = monomial_basis(shape, b.degree);
  if (ea.size() != a.coeffs.size() || eb.size() != b.coeffs.size())
    throw Error(Errc::LengthMismatch, "form coefficients do not match its degree");
  MultiForm out{deg, Vector(monomial_count(shape, deg))};
  for (std::size_t s = 0; s < ea.size(); ++s) {
    if (sgn(a.coeffs[s]) == 0) continue;
    for (std::size_t t = 0; t < eb.size(); ++t) {
      if (sgn(b.coeffs[t]) == 0) continue;
      out.coeffs[monomial_index(shape, add_exponents(ea[s], eb[t]))] += a.coeffs[s] * b.coeffs[t];
    }
  }
  return out;
}

MultiForm linear_form(const SpaceShape& shape, std::size_t k, const Vector& coeffs) {
  if (k >= shape.factors() || coeffs.size() != shape.dim(k) + 1)
    throw Error(Errc::LengthMismatch, "linear form coefficients do not match factor " + std::to_string(k));
  // degree e_k monomials are x_{k,0}, ..., x_{k,n_k} in basis order
  return MultiForm{MultiDegree::unit(shape.factors(), k), coeffs};
}

MultiForm normalized(const MultiForm& f) {
  MultiForm out = f;
  const auto lead = std::find_if(out.coeffs.begin(), out.coeffs.end(), [](const Scalar& q) { return sgn(q) != 0; });
  if (lead == out.coeffs.end()) return out;
  const Scalar inv = 1 / *lead;
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

bool proportional(const MultiForm& a, const MultiForm& b) {
  return a.degree == b.degree && normalized(a).coeffs == normalized(b).coeffs;
}

bool is_separator(const PointSet& x, std::size_t point_index, const MultiForm& f) {
  for (std::size_t q = 0; q < x.size(); ++q) {
    const bool zero = sgn(evaluate(x.shape(), f, x[q])) == 0;
    if (zero == (q == point_index)) return false;
  }
  return true;
}

DegreeBox default_box(const PointSet& x) {
  const unsigned s = static_cast<unsigned>(x.size());
  return DegreeBox(MultiDegree::constant(x.shape().factors(), s == 0 ? 0 : s - 1));
}

HilbertTable difference_table(const PointSet& x, const ProjPoint& p, const DegreeBox& box) {
  const std::size_t pi = x.require_index(p);
  const HilbertTable hx = hilbert_table(x, box);
  const auto degs = box.degrees();
  std::vector<std::size_t> diff(degs.size(), 1);
  std::vector<std::size_t> pending;
  for (std::size_t k = 0; k < degs.size(); ++k)
    if (hx.values()[k] < x.size()) pending.push_back(k);
  if (pending.empty()) return HilbertTable(box, std::move(diff));
  // the Gram matrix of Y is that of X without the row and column of P
  const GramFactors gram(x, box.upper());
  parallel_for(pending.size(), [&](std::size_t n) {
    const std::size_t k = pending[n];
    diff[k] = hx.values()[k] - gram.rank_at(degs[k], pi);
  });
  return HilbertTable(box, std::move(diff));
}

DegreeSet degree_set(const PointSet& x, const ProjPoint& p, const std::optional<DegreeBox>& box) {
  x.require_index(p);
  const DegreeBox b = box.value_or(default_box(x));
  const HilbertTable diff = difference_table(x, p, b);
  const auto degs = b.degrees();
  std::vector<MultiDegree> hits;
  for (std::size_t k = 0; k < degs.size(); ++k)
    if (diff.values()[k] == 1) hits.push_back(degs[k]);
  if (hits.empty())
    throw Error(Errc::BoxTooSmall, "no separator degree inside box " + b.upper().str() + " for point " + p.str());
  return DegreeSet{min_elements(hits)};
}

std::size_t separator_space_dim(const PointSet& x, const ProjPoint& p, const MultiDegree& alpha) {
  const PointSet y = remove_point(x, p);
  return hilbert_value(x, alpha) - hilbert_value(y, alpha);
}

MultiForm minimal_separator(const PointSet& x, const ProjPoint& p, const MultiDegree& alpha) {
  const std::size_t pi = x.require_index(p);
  const PointSet y = remove_point(x, p);
  const std::size_t n = monomial_count(x.shape(), alpha);
  const RowEchelon ex = reduced_row_echelon(evaluation_matrix(x, alpha));
  const auto iy = y.empty() ? kernel_basis(DenseMatrix(0, n)) : kernel_basis(evaluation_matrix(y, alpha));
  if (iy.size() != n - ex.rank() + 1)
    throw Error(Errc::NotASeparatorDegree, alpha.str() + " is not a separator degree of " + p.str());
  const Vector at_p = evaluation_row(x.shape(), x[pi], alpha);
  for (const auto& v : iy) {
    Scalar val;
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(v[c]) != 0) val += at_p[c] * v[c];
    if (sgn(val) == 0) continue;
    // Normal form modulo (I_X)_alpha: the kernel vector of free column f has
    // a 1 there and zeros at other free columns, so subtracting v[f] times
    // it for every free f leaves a vector supported on pivot columns.
    Vector nf(n);
    for (std::size_t k = 0; k < ex.rank(); ++k) {
      Scalar acc;
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(v[c]) != 0 && sgn(ex.rows[k][c]) != 0) acc += ex.rows[k][c] * v[c];
      nf[ex.pivots[k]] = acc;
    }
    return normalized(MultiForm{alpha, std::move(nf)});
  }
  throw Error(Errc::NotASeparatorDegree, "no element of (I_Y) is nonzero at " + p.str());
}

MultiForm lifting_form(const PointSet& x, const ProjPoint& p, std::size_t k) {
  const SpaceShape& shape = x.shape();
  const int bound = std::max<int>(1, static_cast<int>(x.size()));
  const std::size_t len = shape.dim(k) + 1;
  auto value_at = [&](const Vector& c, const ProjPoint& q) {
    Scalar acc;
    for (std::size_t v = 0; v < len; ++v) acc += c[v] * q.factor(k)[v];
    return acc;
  };
  std::optional<Vector> fallback;
  std::vector<int> digits(len, -bound);
  while (true) {
    Vector c(len);
    bool nonzero = false;
    for (std::size_t v = 0; v < len; ++v) {
      c[v] = digits[v];
      nonzero = nonzero || digits[v] != 0;
    }
    if (nonzero && sgn(value_at(c, p)) != 0) {
      const bool misses_all =
          std::all_of(x.begin(), x.end(), [&](const ProjPoint& q) { return sgn(value_at(c, q)) != 0; });
      if (misses_all) return linear_form(shape, k, c);
      if (!fallback) fallback = c;
    }
    std::size_t v = len;
    while (v-- > 0) {
      if (digits[v] < bound) {
        ++digits[v];
        break;
      }
      digits[v] = -bound;
    }
    if (v == static_cast<std::size_t>(-1)) break;
  }
  // a coordinate of P is nonzero, so some unit-vector form qualifies
  return linear_form(shape, k, *fallback);
}

MultiForm lift_separator(const PointSet& x, const ProjPoint& p, const MultiForm& f, const MultiDegree& i) {
  x.require_index(p);
  if (!leq(f.degree, i)) throw Error(Errc::DegreeNotAbove, i.str() + " is not above " + f.degree.str());
  MultiForm out = f;
  for (std::size_t k = 0; k < i.size(); ++k) {
    const unsigned extra = i[k] - f.degree[k];
    if (extra == 0) continue;
    const MultiForm l = lifting_form(x, p, k);
    for (unsigned e = 0; e < extra; ++e) out = multiply(x.shape(), out, l);
  }
  return out;
}

// Forms of degree j modulo (I_X)_j are identified with their value vectors
// (G(q))_q at the points, since (I_X)_j is the kernel of evaluation. A set
// of forms then spans a space of dimension rank(A) = rank(A A^T), A holding
// the value vectors as columns; A A^T is assembled from Gram matrices.

bool verify_ideal_sum(const PointSet& x, const ProjPoint& p, std::span<const MultiForm> seps, const DegreeBox& box) {
  const std::size_t pi = x.require_index(p);
  const std::size_t s = x.size();
  const SpaceShape& shape = x.shape();
  std::vector<Vector> values;
  std::vector<std::vector<std::size_t>> support;
  for (const auto& f : seps) {
    Vector v(s);
    std::vector<std::size_t> nz;
    for (std::size_t q = 0; q < s; ++q) {
      v[q] = evaluate(shape, f, x[q]);
      if (sgn(v[q]) != 0) nz.push_back(q);
    }
    // (I_X, F_1, ..., F_s) ⊆ I_Y needs every F_j to vanish on Y
    if (std::any_of(nz.begin(), nz.end(), [&](std::size_t q) { return q != pi; })) return false;
    values.push_back(std::move(v));
    support.push_back(std::move(nz));
  }
  // dim (I_Y)_i - dim (I_X)_i = H_X(i) - H_Y(i)
  const HilbertTable diff = difference_table(x, p, box);
  const GramFactors gram(x, box.upper());
  const auto degs = box.degrees();
  std::vector<char> ok(degs.size(), 0);
  parallel_for(degs.size(), [&](std::size_t n) {
    const MultiDegree& i = degs[n];
    // multiples m * F_j, m of degree i - deg F_j, have values m(q) F_j(q):
    // A A^T = sum_j diag(F_j) G_{i - deg F_j} diag(F_j)
    DenseMatrix aat(s, s);
    for (std::size_t j = 0; j < seps.size(); ++j) {
      if (!leq(seps[j].degree, i)) continue;
      const MultiDegree low = i - seps[j].degree;
      for (std::size_t a : support[j])
        for (std::size_t b : support[j]) aat(a, b) += values[j][a] * gram.entry(low, a, b) * values[j][b];
    }
    ok[n] = rank(aat) == diff.values()[n];
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool verify_colon(const PointSet& x, const ProjPoint& p, const MultiForm& f, const DegreeBox& box) {
  const std::size_t pi = x.require_index(p);
  const std::size_t s = x.size();
  Vector fv(s);
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < s; ++q) {
    fv[q] = evaluate(x.shape(), f, x[q]);
    if (sgn(fv[q]) != 0) support.push_back(q);
  }
  const GramFactors gram(x, box.upper());
  const auto degs = box.degrees();
  std::vector<char> ok(degs.size(), 0);
  parallel_for(degs.size(), [&](std::size_t n) {
    // G * F lies in I_X iff G(q) F(q) = 0 for every q, so the colon piece is
    // the kernel of the rows F(q) * ev_q. The stacked matrix adds ev_P,
    // whose kernel is (I_P)_i, as row 0.
    const MultiDegree& i = degs[n];
    DenseMatrix colon_only(s, s), stacked(s + 1, s + 1);
    stacked(0, 0) = gram.entry(i, pi, pi);
    for (std::size_t a : support) {
      stacked(0, a + 1) = stacked(a + 1, 0) = fv[a] * gram.entry(i, pi, a);
      for (std::size_t b : support) {
        colon_only(a, b) = fv[a] * gram.entry(i, a, b) * fv[b];
        stacked(a + 1, b + 1) = colon_only(a, b);
      }
    }
    // equal dimensions need rank 1, containment (I_P)_i ⊆ colon needs the
    // stacked rank to stay 1
    ok[n] = rank(colon_only) == 1 && rank(stacked) == 1;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool box_stability_check(const PointSet& x, const ProjPoint& p, const DegreeBox& box) {
  return degree_set(x, p, box) == degree_set(x, p, box.doubled());
}

}  // namespace multisep
