#pragma once

// Separators of a point P in X: forms vanishing on X \ {P} but not at P,
// the antichain deg_X(P) of their minimal degrees, and the ideal identities
// relating I_X, I_Y = I_{X \ {P}} and I_P.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multisep/exactalg.hpp"
#include "multisep/hilbert.hpp"
#include "multisep/mgraded.hpp"
#include "multisep/points.hpp"

namespace multisep {

/// A multihomogeneous form: coefficients over monomial_basis(shape, degree).
struct MultiForm {
  MultiDegree degree;
  Vector coeffs;

  bool is_zero() const;
  bool operator==(const MultiForm&) const = default;
};

/// Value at the primitive integer representative of p; only its vanishing is
/// representative independent.
Scalar evaluate(const SpaceShape& shape, const MultiForm& f, const ProjPoint& p);

MultiForm multiply(const SpaceShape& shape, const MultiForm& a, const MultiForm& b);

/// Linear form of degree e_k with the given coefficients on x_{k,0..n_k}.
MultiForm linear_form(const SpaceShape& shape, std::size_t k, const Vector& coeffs);

/// Scaled so the first nonzero coefficient is 1.
MultiForm normalized(const MultiForm& f);

bool proportional(const MultiForm& a, const MultiForm& b);

/// F(P) != 0 and F vanishes at every other point of X.
bool is_separator(const PointSet& x, std::size_t point_index, const MultiForm& f);

/// (s-1, ..., s-1); for s = 1 the zero degree.
DegreeBox default_box(const PointSet& x);

/// Antichain of minimal separator degrees.
struct DegreeSet {
  std::vector<MultiDegree> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool operator==(const DegreeSet&) const = default;
};

/// 0/1 table of H_X - H_Y over the box, Y = X \ {P}. H_Y is only evaluated
/// where H_X < |X|; elsewhere the evaluation map of X is onto and the
/// difference is 1.
HilbertTable difference_table(const PointSet& x, const ProjPoint& p, const DegreeBox& box);

/// Minimal elements of the difference set on the box (default_box when
/// omitted). Throws PointNotFound, BoxTooSmall.
DegreeSet degree_set(const PointSet& x, const ProjPoint& p, const std::optional<DegreeBox>& box = std::nullopt);

/// dim (I_Y)_alpha - dim (I_X)_alpha.
std::size_t separator_space_dim(const PointSet& x, const ProjPoint& p, const MultiDegree& alpha);

/// Canonical separator of degree alpha: an element of (I_Y)_alpha not in
/// (I_X)_alpha, reduced modulo (I_X)_alpha onto the pivot monomials of the
/// evaluation matrix of X, first nonzero coefficient 1.
/// Throws PointNotFound, NotASeparatorDegree.
MultiForm minimal_separator(const PointSet& x, const ProjPoint& p, const MultiDegree& alpha);

/// Linear form of degree e_k nonzero at every point of X (factor k), or at
/// least nonzero at P; lexicographically first over [-s, s]^(n_k + 1).
MultiForm lifting_form(const PointSet& x, const ProjPoint& p, std::size_t k);

/// F * prod_k L_k^(i_k - deg_k F). Throws DegreeNotAbove.
MultiForm lift_separator(const PointSet& x, const ProjPoint& p, const MultiForm& f, const MultiDegree& i);

/// (I_X, F_1, ..., F_s)_i = (I_Y)_i for every degree of the box.
bool verify_ideal_sum(const PointSet& x, const ProjPoint& p, std::span<const MultiForm> seps, const DegreeBox& box);

/// (I_X : F)_i = (I_P)_i for every degree of the box.
bool verify_colon(const PointSet& x, const ProjPoint& p, const MultiForm& f, const DegreeBox& box);

/// degree_set on the box and on the doubled box agree.
bool box_stability_check(const PointSet& x, const ProjPoint& p, const DegreeBox& box);

}  // namespace multisep
