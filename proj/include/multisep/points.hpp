#pragma once

// Finite point sets in P^{n_1} x ... x P^{n_r} with exact coordinates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multisep/exactalg.hpp"
#include "multisep/mgraded.hpp"

namespace multisep {

/// A point of a multiprojective space: one homogeneous coordinate vector per
/// factor. Equality is projective, factor by factor.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Throws ZeroVector if any factor is the zero vector.
  explicit ProjPoint(std::vector<Vector> coords);

  std::size_t factors() const noexcept { return coords_.size(); }
  const Vector& factor(std::size_t k) const { return coords_[k]; }
  const std::vector<Vector>& coords() const noexcept { return coords_; }

  bool matches(const SpaceShape& shape) const;

  /// Each factor scaled so its first nonzero coordinate is 1.
  ProjPoint canonical() const;
  /// Each factor scaled to coprime integers, first nonzero entry positive.
  std::vector<std::vector<Integer>> integer_coords() const;

  /// Projective equality: every 2x2 minor of each coordinate pair vanishes.
  bool operator==(const ProjPoint& o) const;

  std::string str() const;

 private:
  std::vector<Vector> coords_;
};

/// Coordinates of a point of P^1 (or P^n) from integers, e.g. p1(1, i).
Vector coords(std::initializer_list<long> v);

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(SpaceShape shape) : shape_(std::move(shape)) {}
  /// Throws ShapeMismatch / DuplicatePoint.
  PointSet(SpaceShape shape, std::vector<ProjPoint> points);

  const SpaceShape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const ProjPoint& operator[](std::size_t k) const { return points_[k]; }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Throws ShapeMismatch or DuplicatePoint.
  void add(ProjPoint p);
  std::optional<std::size_t> index_of(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return index_of(p).has_value(); }
  /// Throws PointNotFound.
  std::size_t require_index(const ProjPoint& p) const;

  /// Same points as sets (order and representatives ignored).
  bool same_set(const PointSet& o) const;

 private:
  SpaceShape shape_;
  std::vector<ProjPoint> points_;
};

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws ParseError if parts are not weakly decreasing and positive.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  std::size_t length() const noexcept { return parts_.size(); }
  unsigned operator[](std::size_t k) const { return parts_[k]; }
  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned total() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  std::string str() const;

 private:
  std::vector<unsigned> parts_;
};

/// Plain-text format: one point per line, factors "[c0,...,cn]" joined by
/// "x"; entries are integers or fractions "p/q"; '#' starts a comment.
/// The shape is taken from the first point. Throws ParseError,
/// DuplicatePoint, ZeroVector.
PointSet parse_points(std::string_view text);
/// JSON form {"shape": [n1,...], "points": [[[c,...],...],...]}; entries are
/// integers or strings "p/q".
PointSet parse_points_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' means JSON).
PointSet parse_points_any(std::string_view text);

std::string serialize_points(const PointSet& x);
std::string serialize_points_json(const PointSet& x);

/// {P_i x Q_j : 1 <= i <= r, 1 <= j <= lambda_i}, row-major.
PointSet ferrers_points(const Partition& lambda, const std::vector<Vector>& first_coords,
                        const std::vector<Vector>& second_coords);
/// Ferrers set with P_i = [1:i], Q_j = [1:j].
PointSet ferrers_points(const Partition& lambda);

/// Throws PointNotFound.
PointSet remove_point(const PointSet& x, const ProjPoint& p);

/// s distinct points with integer coordinates in [-9, 9], deterministic in seed.
PointSet random_pointset(const SpaceShape& shape, std::size_t s, std::uint64_t seed);

/// s distinct points drawn from the product of per-factor pools of `pool`
/// distinct points each, so that coordinates repeat across points.
PointSet random_grid_subset(const SpaceShape& shape, std::size_t pool, std::size_t s, std::uint64_t seed);

/// Random partition with total in [1, max_total].
Partition random_partition(unsigned max_total, std::uint64_t seed);

/// Ferrers configuration of a random partition with random distinct
/// coordinates in P^1.
PointSet random_ferrers(unsigned max_total, std::uint64_t seed);

}  // namespace multisep
