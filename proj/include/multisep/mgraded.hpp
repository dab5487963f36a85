#pragma once

// Multidegrees in N^r, the componentwise partial order, finite up-sets and
// the monomial bases of graded pieces R_i of the multigraded polynomial ring.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace multisep {

class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t r) : c_(r, 0) {}
  MultiDegree(std::initializer_list<unsigned> c) : c_(c) {}
  explicit MultiDegree(std::vector<unsigned> c) : c_(std::move(c)) {}

  static MultiDegree zero(std::size_t r) { return MultiDegree(r); }
  static MultiDegree unit(std::size_t r, std::size_t k);
  static MultiDegree constant(std::size_t r, unsigned v) { return MultiDegree(std::vector<unsigned>(r, v)); }

  std::size_t size() const noexcept { return c_.size(); }
  unsigned operator[](std::size_t k) const { return c_[k]; }
  unsigned& operator[](std::size_t k) { return c_[k]; }
  const std::vector<unsigned>& components() const noexcept { return c_; }
  unsigned total() const noexcept;

  // Lexicographic; used for containers and deterministic output only.
  auto operator<=>(const MultiDegree&) const = default;
  bool operator==(const MultiDegree&) const = default;

  MultiDegree operator+(const MultiDegree& o) const;
  /// Componentwise difference; throws DegreeNotAbove if o is not below *this.
  MultiDegree operator-(const MultiDegree& o) const;

  std::string str() const;

 private:
  std::vector<unsigned> c_;
};

std::ostream& operator<<(std::ostream& os, const MultiDegree& d);

/// a ⪯ b componentwise. Throws LengthMismatch.
bool leq(const MultiDegree& a, const MultiDegree& b);
/// a ≺ b: a ⪯ b and a ≠ b.
bool less(const MultiDegree& a, const MultiDegree& b);

/// Minimal elements under ⪯, deduplicated, in lexicographic order.
std::vector<MultiDegree> min_elements(std::span<const MultiDegree> s);

/// True iff some a ∈ s satisfies a ⪯ i.
bool in_upset(const MultiDegree& i, std::span<const MultiDegree> s);

/// Dimensions (n_1, ..., n_r) of P^{n_1} x ... x P^{n_r}.
class SpaceShape {
 public:
  SpaceShape() = default;
  SpaceShape(std::initializer_list<unsigned> dims);
  explicit SpaceShape(std::vector<unsigned> dims);

  std::size_t factors() const noexcept { return dims_.size(); }
  unsigned dim(std::size_t k) const { return dims_[k]; }
  const std::vector<unsigned>& dims() const noexcept { return dims_; }
  /// Sum of the n_k: the projective dimension of R/I_P.
  unsigned total_dim() const noexcept;
  /// Number of variables, sum of (n_k + 1).
  std::size_t variables() const noexcept;
  MultiDegree as_degree() const { return MultiDegree(dims_); }

  bool operator==(const SpaceShape&) const = default;
  std::string str() const;

 private:
  std::vector<unsigned> dims_;
};

/// The finite region {i : i ⪯ upper}, iterated lexicographically.
class DegreeBox {
 public:
  DegreeBox() = default;
  explicit DegreeBox(MultiDegree upper) : upper_(std::move(upper)) {}

  const MultiDegree& upper() const noexcept { return upper_; }
  std::size_t factors() const noexcept { return upper_.size(); }
  bool contains(const MultiDegree& i) const { return leq(i, upper_); }
  std::size_t count() const noexcept;
  /// Position of i in lexicographic iteration order.
  std::size_t index_of(const MultiDegree& i) const;
  std::vector<MultiDegree> degrees() const;
  DegreeBox doubled() const;
  bool operator==(const DegreeBox&) const = default;

 private:
  MultiDegree upper_;
};

std::uint64_t binomial(unsigned n, unsigned k);

/// Exponent vector over all variables, groups concatenated in factor order.
using Exponents = std::vector<unsigned>;

/// Monomials of multidegree i: lexicographic (x_{k,0} highest) within each
/// factor, factors concatenated with the first factor varying slowest.
std::vector<Exponents> monomial_basis(const SpaceShape& shape, const MultiDegree& i);

/// prod_k C(n_k + i_k, n_k).
std::size_t monomial_count(const SpaceShape& shape, const MultiDegree& i);

/// Position of an exponent vector inside monomial_basis(shape, degree_of(e)).
std::size_t monomial_index(const SpaceShape& shape, const Exponents& e);

MultiDegree degree_of(const SpaceShape& shape, const Exponents& e);

}  // namespace multisep
