#pragma once

// Multigraded Hilbert functions of point sets via evaluation matrices:
// H_X(i) = rank of (monomials of degree i) evaluated at the points of X.

#include <cstddef>
#include <string>
#include <vector>

#include "multisep/betti.hpp"
#include "multisep/exactalg.hpp"
#include "multisep/mgraded.hpp"
#include "multisep/points.hpp"

namespace multisep {

/// s x dim R_i matrix; row p holds every monomial of degree i evaluated at
/// the primitive integer representative of point p.
DenseMatrix evaluation_matrix(const PointSet& x, const MultiDegree& i);

/// Values of all degree-i monomials at one point (one evaluation row).
Vector evaluation_row(const SpaceShape& shape, const ProjPoint& p, const MultiDegree& i);

/// h_d(z_0, ..., z_n).
Integer complete_homogeneous(const std::vector<Integer>& z, unsigned d);

/// E E^T for E = evaluation_matrix(x, i), built without E: entry (p,q) is
/// prod_k h_{i_k}(p_k * q_k) with h_d the complete homogeneous polynomial
/// and p_k * q_k the coordinatewise product of primitive representatives.
/// Over Q its rank equals the rank of E since the entries are real.
DenseMatrix gram_matrix(const PointSet& x, const MultiDegree& i);

/// The factor values h_d(p_k * q_k) for every pair of points and every
/// d up to a bound, so Gram matrices of X and of X minus one point can be
/// formed for many degrees without recomputation.
class GramFactors {
 public:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  GramFactors(const PointSet& x, const MultiDegree& bound);

  std::size_t size() const noexcept { return s_; }
  const MultiDegree& bound() const noexcept { return bound_; }

  /// Entry (a, b) of the Gram matrix at degree i ⪯ bound (unchecked).
  Integer entry(const MultiDegree& i, std::size_t a, std::size_t b) const;
  /// Gram matrix at degree i ⪯ bound. Throws BoxTooSmall.
  std::vector<std::vector<Integer>> matrix_at(const MultiDegree& i) const;
  /// Rank of the Gram matrix at degree i ⪯ bound, leaving out point `skip`.
  std::size_t rank_at(const MultiDegree& i, std::size_t skip = none) const;

 private:
  std::size_t s_;
  MultiDegree bound_;
  // values_[k][p * s + q][d]
  std::vector<std::vector<std::vector<Integer>>> values_;
};

/// Rank of the evaluation matrix, computed through the Gram matrix.
std::size_t hilbert_value(const PointSet& x, const MultiDegree& i);

class HilbertTable {
 public:
  HilbertTable() = default;
  HilbertTable(DegreeBox box, std::vector<std::size_t> values);

  const DegreeBox& box() const noexcept { return box_; }
  std::size_t at(const MultiDegree& i) const { return values_[box_.index_of(i)]; }
  /// Values in lexicographic box order.
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  bool operator==(const HilbertTable&) const = default;

  /// Aligned matrix for r = 2 (rows = first degree), otherwise one
  /// "degree value" line per entry.
  std::string str() const;

 private:
  DegreeBox box_;
  std::vector<std::size_t> values_;
};

/// H_X over the box. Degrees are processed by total degree; a degree with a
/// predecessor already at |X| is |X| without elimination. Per-degree work
/// runs in parallel, the table is identical for any worker count.
HilbertTable hilbert_table(const PointSet& x, const DegreeBox& box);

/// Basis of (I_X)_i: kernel of the evaluation matrix, as coefficient vectors
/// over monomial_basis(shape, degree).
struct GradedPiece {
  MultiDegree degree;
  std::vector<Vector> basis;
};

GradedPiece ideal_piece(const PointSet& x, const MultiDegree& i);

/// Checks H_X(i,j) against the alternating shift count of `betti` on every
/// degree of the box. Throws ShapeMismatch unless X lies in P^1 x P^1.
bool kpoly_check(const PointSet& x, const BettiTable& betti, const DegreeBox& box);

}  // namespace multisep
