#pragma once

// Point sets in P^1 x P^1: the grid of first/second coordinates, property
// (*), partitions, Cohen-Macaulay resolutions and single-point removal.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "multisep/betti.hpp"
#include "multisep/hilbert.hpp"
#include "multisep/points.hpp"
#include "multisep/separators.hpp"

namespace multisep {

/// Distinct first coordinates (rows) and second coordinates (cols) of X,
/// rows by descending point count, cols by descending point count, ties in
/// order of first occurrence.
struct LabeledGrid {
  std::vector<Vector> rows;
  std::vector<Vector> cols;
  std::set<std::pair<std::size_t, std::size_t>> members;
  /// Row and column of each point of X, in point order.
  std::vector<std::pair<std::size_t, std::size_t>> cell_of;

  std::size_t row_count(std::size_t r) const;
  std::size_t col_count(std::size_t c) const;
  /// Membership is closed downward and to the left.
  bool is_ferrers() const;
  /// Row i top-down, '*' for members and '.' for empty cells.
  std::string ascii() const;
};

/// Throws ShapeMismatch unless X lies in P^1 x P^1.
LabeledGrid labeled_grid(const PointSet& x);

/// Throws ShapeMismatch; empty X gives the empty partition.
Partition partition_of(const PointSet& x);

Partition conjugate(const Partition& lambda);

struct StarWitness {
  ProjPoint first;
  ProjPoint second;
};

struct StarResult {
  bool holds = true;
  std::optional<StarWitness> witness;
};

/// First violating pair in point order, if any. Throws ShapeMismatch.
StarResult star_property(const PointSet& x);

bool is_acm(const PointSet& x);

/// Shifts of the minimal resolution 0 -> F_2 -> F_1 -> R of a Ferrers set.
BettiTable acm_resolution(const Partition& lambda);

/// Linear form of degree e_k vanishing exactly at [a:b]: b*x_{k,0} - a*x_{k,1}.
MultiForm point_linear_form(std::size_t k, const Vector& p);

/// Minimal generators as products of linear forms, in the order
/// (r,0), (0,lambda_1), then the drops of lambda top-down. Throws NotACM.
std::vector<MultiForm> acm_generators(const PointSet& x);

/// (#points in the column of P - 1, #points in the row of P - 1).
/// Throws NotACM, PointNotFound.
MultiDegree point_degree_acm(const PointSet& x, const ProjPoint& p);

enum class Removal { AcmPreserved, AcmLost };

const char* removal_name(Removal r) noexcept;

/// Decided by deg_X(P) + (1,1) in S_2 and independently by (*) on X \ {P};
/// a disagreement throws std::logic_error. Throws NotACM, PointNotFound.
Removal removal_classification(const PointSet& x, const ProjPoint& p);

/// Predicted resolution of X \ {P}. Throws NotACM, PointNotFound.
BettiTable removed_resolution(const PointSet& x, const ProjPoint& p);

struct GeneratorCount {
  std::size_t total = 0;
  /// Degrees with at least one minimal generator, lexicographic.
  std::vector<std::pair<MultiDegree, std::size_t>> per_degree;
};

/// Minimal generators of I_X by degree: dim (I_X)_i minus the dimension of
/// the span of x_{k,l} (I_X)_{i-e_k}, summed over the box ((s,...,s) when
/// omitted). Works for any shape.
GeneratorCount nu_bruteforce(const PointSet& x, const std::optional<DegreeBox>& box = std::nullopt);

}  // namespace multisep
