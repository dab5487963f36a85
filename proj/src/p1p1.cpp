#include "multisep/p1p1.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multisep/error.hpp"
#include "multisep/parallel.hpp"

namespace multisep {

namespace {

void require_p1p1(const PointSet& x) {
  if (!(x.shape() == SpaceShape{1, 1}))
    throw Error(Errc::ShapeMismatch, "expected points of P^1 x P^1, got " + x.shape().str());
}

// Distinct canonical coordinate vectors in order of first occurrence, plus
// the class of every point.
std::pair<std::vector<Vector>, std::vector<std::size_t>> classes(const PointSet& x, std::size_t k) {
  std::vector<Vector> distinct;
  std::vector<std::size_t> of;
  for (const auto& p : x) {
    const Vector c = p.canonical().factor(k);
    auto it = std::find(distinct.begin(), distinct.end(), c);
    if (it == distinct.end()) {
      distinct.push_back(c);
      it = distinct.end() - 1;
    }
    of.push_back(static_cast<std::size_t>(it - distinct.begin()));
  }
  return {distinct, of};
}

// Permutation sorting classes by descending count, stable in first occurrence.
std::vector<std::size_t> by_count(const std::vector<std::size_t>& of, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (std::size_t c : of) ++count[c];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return count[a] > count[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;
  return rank;
}

LabeledGrid require_ferrers(const PointSet& x) {
  require_p1p1(x);
  if (!star_property(x).holds) throw Error(Errc::NotACM, "point set does not satisfy property (*)");
  LabeledGrid g = labeled_grid(x);
  if (!g.is_ferrers()) throw std::logic_error("ACM point set did not relabel to a Ferrers diagram");
  return g;
}

MultiForm product(const SpaceShape& shape, const std::vector<MultiForm>& factors) {
  MultiForm acc{MultiDegree::zero(2), Vector{Scalar(1)}};
  for (const auto& f : factors) acc = multiply(shape, acc, f);
  return acc;
}

}  // namespace

std::size_t LabeledGrid::row_count(std::size_t r) const {
  return static_cast<std::size_t>(std::count_if(members.begin(), members.end(), [&](const auto& m) { return m.first == r; }));
}

std::size_t LabeledGrid::col_count(std::size_t c) const {
  return static_cast<std::size_t>(std::count_if(members.begin(), members.end(), [&](const auto& m) { return m.second == c; }));
}

bool LabeledGrid::is_ferrers() const {
  for (const auto& [r, c] : members) {
    if (r > 0 && !members.contains({r - 1, c})) return false;
    if (c > 0 && !members.contains({r, c - 1})) return false;
  }
  return true;
}

std::string LabeledGrid::ascii() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << 'P' << r + 1 << (r + 1 < 10 ? "  " : " ");
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? " " : "") << (members.contains({r, c}) ? '*' : '.');
    os << '\n';
  }
  return os.str();
}

LabeledGrid labeled_grid(const PointSet& x) {
  require_p1p1(x);
  auto [rows, row_of] = classes(x, 0);
  auto [cols, col_of] = classes(x, 1);
  const auto rrank = by_count(row_of, rows.size());
  const auto crank = by_count(col_of, cols.size());
  LabeledGrid g;
  g.rows.resize(rows.size());
  g.cols.resize(cols.size());
  for (std::size_t k = 0; k < rows.size(); ++k) g.rows[rrank[k]] = rows[k];
  for (std::size_t k = 0; k < cols.size(); ++k) g.cols[crank[k]] = cols[k];
  for (std::size_t p = 0; p < x.size(); ++p) {
    const std::pair<std::size_t, std::size_t> cell{rrank[row_of[p]], crank[col_of[p]]};
    g.members.insert(cell);
    g.cell_of.push_back(cell);
  }
  return g;
}

Partition partition_of(const PointSet& x) {
  const LabeledGrid g = labeled_grid(x);
  std::vector<unsigned> parts;
  for (std::size_t r = 0; r < g.rows.size(); ++r) parts.push_back(static_cast<unsigned>(g.row_count(r)));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<unsigned> out;
  for (unsigned i = 1; !lambda.empty() && i <= lambda[0]; ++i)
    out.push_back(static_cast<unsigned>(
        std::count_if(lambda.parts().begin(), lambda.parts().end(), [&](unsigned l) { return l >= i; })));
  return Partition(std::move(out));
}

StarResult star_property(const PointSet& x) {
  const LabeledGrid g = labeled_grid(x);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      const auto [ra, ca] = g.cell_of[a];
      const auto [rb, cb] = g.cell_of[b];
      if (ra == rb || ca == cb) continue;
      if (!g.members.contains({ra, cb}) && !g.members.contains({rb, ca}))
        return {false, StarWitness{x[a], x[b]}};
    }
  return {};
}

bool is_acm(const PointSet& x) { return star_property(x).holds; }

BettiTable acm_resolution(const Partition& lambda) {
  BettiTable t(2);
  if (lambda.empty()) return t;
  const unsigned r = static_cast<unsigned>(lambda.length());
  t.add(1, MultiDegree{r, 0});
  t.add(1, MultiDegree{0, lambda[0]});
  t.add(2, MultiDegree{r, lambda[r - 1]});
  // 1-based row i has a drop when lambda_i < lambda_{i-1}
  for (unsigned i = 2; i <= r; ++i) {
    if (lambda[i - 1] == lambda[i - 2]) continue;
    t.add(1, MultiDegree{i - 1, lambda[i - 1]});
    t.add(2, MultiDegree{i - 1, lambda[i - 2]});
  }
  return t;
}

MultiForm point_linear_form(std::size_t k, const Vector& p) {
  if (p.size() != 2) throw Error(Errc::LengthMismatch, "expected a point of P^1");
  return linear_form(SpaceShape{1, 1}, k, Vector{p[1], -p[0]});
}

std::vector<MultiForm> acm_generators(const PointSet& x) {
  const LabeledGrid g = require_ferrers(x);
  const SpaceShape& shape = x.shape();
  std::vector<MultiForm> lp, lq;
  for (const auto& v : g.rows) lp.push_back(point_linear_form(0, v));
  for (const auto& v : g.cols) lq.push_back(point_linear_form(1, v));
  auto prefix = [](const std::vector<MultiForm>& v, std::size_t n) { return std::vector<MultiForm>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); };

  std::vector<MultiForm> out{product(shape, lp), product(shape, lq)};
  for (std::size_t i = 1; i < g.rows.size(); ++i) {
    const std::size_t li = g.row_count(i);
    if (li == g.row_count(i - 1)) continue;
    auto fs = prefix(lp, i);
    const auto qs = prefix(lq, li);
    fs.insert(fs.end(), qs.begin(), qs.end());
    out.push_back(product(shape, fs));
  }
  return out;
}

MultiDegree point_degree_acm(const PointSet& x, const ProjPoint& p) {
  const std::size_t idx = x.require_index(p);
  const LabeledGrid g = require_ferrers(x);
  const auto [r, c] = g.cell_of[idx];
  return MultiDegree{static_cast<unsigned>(g.col_count(c) - 1), static_cast<unsigned>(g.row_count(r) - 1)};
}

const char* removal_name(Removal r) noexcept { return r == Removal::AcmPreserved ? "ACM_PRESERVED" : "ACM_LOST"; }

Removal removal_classification(const PointSet& x, const ProjPoint& p) {
  const MultiDegree alpha = point_degree_acm(x, p);
  const BettiTable t = acm_resolution(partition_of(x));
  const bool by_shift = t.multiplicity(2, alpha + MultiDegree{1, 1}) > 0;
  const bool by_star = is_acm(remove_point(x, p));
  if (by_shift != by_star)
    throw std::logic_error("removal criteria disagree for " + p.str());
  return by_shift ? Removal::AcmPreserved : Removal::AcmLost;
}

BettiTable removed_resolution(const PointSet& x, const ProjPoint& p) {
  if (removal_classification(x, p) == Removal::AcmPreserved) return acm_resolution(partition_of(remove_point(x, p)));
  const MultiDegree a = point_degree_acm(x, p);
  BettiTable t = acm_resolution(partition_of(x));
  t.add(1, a);
  t.add(2, a + MultiDegree{1, 0});
  t.add(2, a + MultiDegree{0, 1});
  t.add(3, a + MultiDegree{1, 1});
  return t;
}

GeneratorCount nu_bruteforce(const PointSet& x, const std::optional<DegreeBox>& box) {
  const SpaceShape& shape = x.shape();
  const std::size_t r = shape.factors();
  const DegreeBox b = box.value_or(DegreeBox(MultiDegree::constant(r, static_cast<unsigned>(x.size()))));
  const auto degs = b.degrees();

  std::vector<std::vector<SparseVector>> ideal(degs.size());
  parallel_for(degs.size(), [&](std::size_t n) {
    for (const auto& v : ideal_piece(x, degs[n]).basis) ideal[n].push_back(to_sparse(v));
  });

  std::vector<std::size_t> fresh(degs.size(), 0);
  parallel_for(degs.size(), [&](std::size_t n) {
    const MultiDegree& i = degs[n];
    const std::size_t target = ideal[n].size();
    if (target == 0) return;
    EchelonBasis span(monomial_count(shape, i));
    std::size_t var_offset = 0;
    for (std::size_t k = 0; k < r && span.rank() < target; var_offset += shape.dim(k) + 1, ++k) {
      if (i[k] == 0) continue;
      MultiDegree lower = i;
      --lower[k];
      const auto& low = ideal[b.index_of(lower)];
      if (low.empty()) continue;
      const auto exps = monomial_basis(shape, lower);
      for (unsigned l = 0; l <= shape.dim(k) && span.rank() < target; ++l) {
        // index of x_{k,l} * m for every monomial m of the lower degree
        std::vector<std::size_t> up(exps.size());
        for (std::size_t m = 0; m < exps.size(); ++m) {
          Exponents e = exps[m];
          ++e[var_offset + l];
          up[m] = monomial_index(shape, e);
        }
        for (const auto& v : low) {
          SparseVector w;
          w.reserve(v.size());
          for (const auto& [j, c] : v) w.emplace_back(up[j], c);
          span.insert(w);
          if (span.rank() == target) break;
        }
      }
    }
    fresh[n] = target - span.rank();
  });

  GeneratorCount out;
  for (std::size_t n = 0; n < degs.size(); ++n) {
    if (fresh[n] == 0) continue;
    out.total += fresh[n];
    out.per_degree.emplace_back(degs[n], fresh[n]);
  }
  return out;
}

}  // namespace multisep
