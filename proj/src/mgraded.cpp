#include "multisep/mgraded.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "multisep/error.hpp"

namespace multisep {

namespace {

void check_same_length(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size())
    throw Error(Errc::LengthMismatch, "multidegrees " + a.str() + " and " + b.str() + " differ in length");
}

// Compositions of d into parts+1 nonnegative entries, descending lex.
void factor_monomials(unsigned parts, unsigned d, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> cur(parts + 1, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
    if (pos == parts) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (unsigned v = rem + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, d);
}

// Rank of a composition (length n+1, sum d) in descending lex order.
std::size_t factor_rank(std::span<const unsigned> e) {
  const std::size_t n = e.size() - 1;
  unsigned rem = std::accumulate(e.begin(), e.end(), 0u);
  std::size_t idx = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const unsigned tail = static_cast<unsigned>(n - t - 1);
    // compositions with a larger entry at position t
    for (unsigned v = rem; v > e[t]; --v) idx += binomial(rem - v + tail, tail);
    rem -= e[t];
  }
  return idx;
}

}  // namespace

MultiDegree MultiDegree::unit(std::size_t r, std::size_t k) {
  MultiDegree d(r);
  d.c_.at(k) = 1;
  return d;
}

unsigned MultiDegree::total() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0u); }

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  check_same_length(*this, o);
  MultiDegree out = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] += o.c_[k];
  return out;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  if (!leq(o, *this)) throw Error(Errc::DegreeNotAbove, str() + " is not above " + o.str());
  MultiDegree out = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] -= o.c_[k];
  return out;
}

std::string MultiDegree::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiDegree& d) {
  os << '(';
  for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
  return os << ')';
}

bool leq(const MultiDegree& a, const MultiDegree& b) {
  check_same_length(a, b);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool less(const MultiDegree& a, const MultiDegree& b) { return leq(a, b) && a != b; }

std::vector<MultiDegree> min_elements(std::span<const MultiDegree> s) {
  std::vector<MultiDegree> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<MultiDegree> out;
  for (const auto& a : sorted) {
    const bool dominated =
        std::any_of(sorted.begin(), sorted.end(), [&](const MultiDegree& b) { return less(b, a); });
    if (!dominated) out.push_back(a);
  }
  return out;
}

bool in_upset(const MultiDegree& i, std::span<const MultiDegree> s) {
  return std::any_of(s.begin(), s.end(), [&](const MultiDegree& a) { return leq(a, i); });
}

SpaceShape::SpaceShape(std::initializer_list<unsigned> dims) : SpaceShape(std::vector<unsigned>(dims)) {}

SpaceShape::SpaceShape(std::vector<unsigned> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(Errc::ShapeMismatch, "shape needs at least one factor");
  for (unsigned n : dims_)
    if (n == 0) throw Error(Errc::ShapeMismatch, "projective factors must have dimension >= 1");
}

unsigned SpaceShape::total_dim() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), 0u); }

std::size_t SpaceShape::variables() const noexcept { return total_dim() + dims_.size(); }

std::string SpaceShape::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dims_.size(); ++k) os << (k ? " x " : "") << "P^" << dims_[k];
  return os.str();
}

std::size_t DegreeBox::count() const noexcept {
  std::size_t n = 1;
  for (unsigned u : upper_.components()) n *= u + 1;
  return n;
}

std::size_t DegreeBox::index_of(const MultiDegree& i) const {
  if (!contains(i)) throw Error(Errc::BoxTooSmall, i.str() + " outside box " + upper_.str());
  std::size_t idx = 0;
  for (std::size_t k = 0; k < upper_.size(); ++k) idx = idx * (upper_[k] + 1) + i[k];
  return idx;
}

std::vector<MultiDegree> DegreeBox::degrees() const {
  std::vector<MultiDegree> out;
  out.reserve(count());
  MultiDegree cur(upper_.size());
  const std::size_t r = upper_.size();
  while (true) {
    out.push_back(cur);
    std::size_t k = r;
    while (k-- > 0) {
      if (cur[k] < upper_[k]) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

DegreeBox DegreeBox::doubled() const {
  MultiDegree u = upper_;
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = 2 * u[k];
  return DegreeBox(u);
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::vector<Exponents> monomial_basis(const SpaceShape& shape, const MultiDegree& i) {
  if (i.size() != shape.factors()) throw Error(Errc::LengthMismatch, "degree length != number of factors");
  std::vector<std::vector<std::vector<unsigned>>> per_factor(shape.factors());
  for (std::size_t k = 0; k < shape.factors(); ++k) factor_monomials(shape.dim(k), i[k], per_factor[k]);
  std::vector<Exponents> out{Exponents{}};
  for (const auto& fm : per_factor) {
    std::vector<Exponents> next;
    next.reserve(out.size() * fm.size());
    for (const auto& head : out)
      for (const auto& m : fm) {
        Exponents e = head;
        e.insert(e.end(), m.begin(), m.end());
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::size_t monomial_count(const SpaceShape& shape, const MultiDegree& i) {
  if (i.size() != shape.factors()) throw Error(Errc::LengthMismatch, "degree length != number of factors");
  std::size_t n = 1;
  for (std::size_t k = 0; k < shape.factors(); ++k) n *= binomial(shape.dim(k) + i[k], shape.dim(k));
  return n;
}

MultiDegree degree_of(const SpaceShape& shape, const Exponents& e) {
  if (e.size() != shape.variables()) throw Error(Errc::LengthMismatch, "exponent vector length mismatch");
  MultiDegree d(shape.factors());
  std::size_t off = 0;
  for (std::size_t k = 0; k < shape.factors(); ++k) {
    for (unsigned v = 0; v <= shape.dim(k); ++v) d[k] += e[off + v];
    off += shape.dim(k) + 1;
  }
  return d;
}

std::size_t monomial_index(const SpaceShape& shape, const Exponents& e) {
  const MultiDegree d = degree_of(shape, e);
  std::size_t idx = 0;
  std::size_t off = 0;
  for (std::size_t k = 0; k < shape.factors(); ++k) {
    const std::size_t len = shape.dim(k) + 1;
    const std::size_t count = binomial(shape.dim(k) + d[k], shape.dim(k));
    idx = idx * count + factor_rank(std::span<const unsigned>(e).subspan(off, len));
    off += len;
  }
  return idx;
}

}  // namespace multisep
