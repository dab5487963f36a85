#include "multisep/hilbert.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "multisep/error.hpp"
#include "multisep/parallel.hpp"

namespace multisep {

namespace {

// Monomial values of one factor, in the factor's descending-lex order.
std::vector<Integer> factor_values(const std::vector<Integer>& c, unsigned d) {
  const unsigned n = static_cast<unsigned>(c.size() - 1);
  const auto basis = monomial_basis(SpaceShape{n}, MultiDegree{d});
  std::vector<Integer> out;
  out.reserve(basis.size());
  Integer acc, pw;
  for (const auto& e : basis) {
    acc = 1;
    for (std::size_t v = 0; v <= n; ++v) {
      if (e[v] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), c[v].get_mpz_t(), e[v]);
      acc *= pw;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<Integer> integer_row(const SpaceShape& shape, const ProjPoint& p, const MultiDegree& i) {
  if (i.size() != shape.factors()) throw Error(Errc::LengthMismatch, "degree length != number of factors");
  const auto ic = p.integer_coords();
  std::vector<Integer> row{Integer(1)};
  for (std::size_t k = 0; k < shape.factors(); ++k) {
    const auto fv = factor_values(ic[k], i[k]);
    std::vector<Integer> next;
    next.reserve(row.size() * fv.size());
    for (const auto& a : row)
      for (const auto& b : fv) next.push_back(a * b);
    row = std::move(next);
  }
  return row;
}

}  // namespace

Vector evaluation_row(const SpaceShape& shape, const ProjPoint& p, const MultiDegree& i) {
  const auto row = integer_row(shape, p, i);
  return Vector(row.begin(), row.end());
}

DenseMatrix evaluation_matrix(const PointSet& x, const MultiDegree& i) {
  const std::size_t cols = monomial_count(x.shape(), i);
  DenseMatrix m(x.size(), cols);
  for (std::size_t p = 0; p < x.size(); ++p) {
    const auto row = integer_row(x.shape(), x[p], i);
    for (std::size_t c = 0; c < cols; ++c) m(p, c) = row[c];
  }
  return m;
}

Integer complete_homogeneous(const std::vector<Integer>& z, unsigned d) {
  std::vector<Integer> h(d + 1, Integer(0));
  h[0] = 1;
  for (const auto& zv : z)
    for (unsigned e = 1; e <= d; ++e) mpz_addmul(h[e].get_mpz_t(), zv.get_mpz_t(), h[e - 1].get_mpz_t());
  return h[d];
}

DenseMatrix gram_matrix(const PointSet& x, const MultiDegree& i) {
  if (i.size() != x.shape().factors()) throw Error(Errc::LengthMismatch, "degree length != number of factors");
  const std::size_t s = x.size();
  std::vector<std::vector<std::vector<Integer>>> ic;
  for (const auto& p : x) ic.push_back(p.integer_coords());
  DenseMatrix g(s, s);
  std::vector<Integer> z;
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = p; q < s; ++q) {
      Integer acc = 1;
      for (std::size_t k = 0; k < i.size(); ++k) {
        z.resize(ic[p][k].size());
        for (std::size_t v = 0; v < z.size(); ++v) z[v] = ic[p][k][v] * ic[q][k][v];
        acc *= complete_homogeneous(z, i[k]);
      }
      g(p, q) = acc;
      g(q, p) = acc;
    }
  return g;
}

GramFactors::GramFactors(const PointSet& x, const MultiDegree& bound) : s_(x.size()), bound_(bound) {
  if (bound.size() != x.shape().factors()) throw Error(Errc::LengthMismatch, "degree length != number of factors");
  std::vector<std::vector<std::vector<Integer>>> ic;
  for (const auto& p : x) ic.push_back(p.integer_coords());
  values_.resize(bound.size());
  Integer z;
  for (std::size_t k = 0; k < bound.size(); ++k) {
    const unsigned top = bound[k];
    auto& table = values_[k];
    table.resize(s_ * s_);
    for (std::size_t p = 0; p < s_; ++p)
      for (std::size_t q = p; q < s_; ++q) {
        std::vector<Integer> h(top + 1, Integer(0));
        h[0] = 1;
        for (std::size_t v = 0; v < ic[p][k].size(); ++v) {
          z = ic[p][k][v] * ic[q][k][v];
          for (unsigned e = 1; e <= top; ++e) mpz_addmul(h[e].get_mpz_t(), z.get_mpz_t(), h[e - 1].get_mpz_t());
        }
        table[q * s_ + p] = h;
        table[p * s_ + q] = std::move(h);
      }
  }
}

Integer GramFactors::entry(const MultiDegree& i, std::size_t a, std::size_t b) const {
  const std::size_t pair = a * s_ + b;
  Integer acc = values_[0][pair][i[0]];
  for (std::size_t k = 1; k < i.size(); ++k) acc *= values_[k][pair][i[k]];
  return acc;
}

std::vector<std::vector<Integer>> GramFactors::matrix_at(const MultiDegree& i) const {
  if (!leq(i, bound_)) throw Error(Errc::BoxTooSmall, i.str() + " exceeds " + bound_.str());
  std::vector<std::vector<Integer>> g(s_, std::vector<Integer>(s_));
  for (std::size_t a = 0; a < s_; ++a)
    for (std::size_t b = a; b < s_; ++b) {
      g[a][b] = entry(i, a, b);
      g[b][a] = g[a][b];
    }
  return g;
}

std::size_t GramFactors::rank_at(const MultiDegree& i, std::size_t skip) const {
  auto g = matrix_at(i);
  if (skip < s_) {
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(skip));
    for (auto& row : g) row.erase(row.begin() + static_cast<std::ptrdiff_t>(skip));
  }
  return integer_rank(std::move(g));
}

std::size_t hilbert_value(const PointSet& x, const MultiDegree& i) {
  if (x.empty()) return 0;
  return GramFactors(x, i).rank_at(i);
}

HilbertTable::HilbertTable(DegreeBox box, std::vector<std::size_t> values)
    : box_(std::move(box)), values_(std::move(values)) {
  if (values_.size() != box_.count()) throw Error(Errc::LengthMismatch, "table size does not match box");
}

std::string HilbertTable::str() const {
  std::ostringstream os;
  if (box_.factors() == 2) {
    std::size_t width = 1;
    for (std::size_t v : values_) width = std::max(width, std::to_string(v).size());
    const unsigned rows = box_.upper()[0] + 1, cols = box_.upper()[1] + 1;
    for (unsigned a = 0; a < rows; ++a) {
      for (unsigned b = 0; b < cols; ++b) os << (b ? " " : "") << std::setw(static_cast<int>(width)) << values_[a * cols + b];
      os << '\n';
    }
    return os.str();
  }
  const auto degs = box_.degrees();
  for (std::size_t k = 0; k < degs.size(); ++k) os << degs[k] << ' ' << values_[k] << '\n';
  return os.str();
}

HilbertTable hilbert_table(const PointSet& x, const DegreeBox& box) {
  const auto degs = box.degrees();
  std::vector<std::size_t> values(degs.size(), 0);
  std::map<unsigned, std::vector<std::size_t>> by_total;
  for (std::size_t k = 0; k < degs.size(); ++k) by_total[degs[k].total()].push_back(k);
  const std::size_t s = x.size();
  if (s == 0) return HilbertTable(box, std::move(values));
  const GramFactors gram(x, box.upper());
  for (const auto& [total, idxs] : by_total) {
    parallel_for(idxs.size(), [&](std::size_t n) {
      const std::size_t k = idxs[n];
      const MultiDegree& i = degs[k];
      for (std::size_t f = 0; f < i.size(); ++f) {
        if (i[f] == 0) continue;
        MultiDegree pred = i;
        --pred[f];
        if (values[box.index_of(pred)] == s) {
          values[k] = s;
          return;
        }
      }
      values[k] = gram.rank_at(i);
    });
  }
  return HilbertTable(box, std::move(values));
}

GradedPiece ideal_piece(const PointSet& x, const MultiDegree& i) {
  if (x.empty()) {
    // every form vanishes on the empty set
    const std::size_t n = monomial_count(x.shape(), i);
    return {i, kernel_basis(DenseMatrix(0, n))};
  }
  return {i, kernel_basis(evaluation_matrix(x, i))};
}

bool kpoly_check(const PointSet& x, const BettiTable& betti, const DegreeBox& box) {
  if (!(x.shape() == SpaceShape{1, 1})) throw Error(Errc::ShapeMismatch, "kpoly_check requires P^1 x P^1");
  if (betti.factors() != 2 || box.factors() != 2) throw Error(Errc::ShapeMismatch, "table and box must be bigraded");
  const auto table = hilbert_table(x, box);
  const auto degs = box.degrees();
  for (std::size_t k = 0; k < degs.size(); ++k)
    if (alternating_hilbert(betti, x.shape(), degs[k]) != static_cast<long long>(table.values()[k])) return false;
  return true;
}

}  // namespace multisep
