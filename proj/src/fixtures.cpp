#include "multisep/fixtures.hpp"

#include "multisep/exactalg.hpp"
#include "multisep/hilbert.hpp"

namespace multisep {

ProjPoint grid_point(long i, long j) { return ProjPoint({coords({1, i}), coords({1, j})}); }

PointSet nineteen_point_set() { return ferrers_points(Partition{5, 4, 4, 3, 2, 1}); }

PointSet partition_6531_set() { return ferrers_points(Partition{6, 5, 3, 1}); }

std::vector<Vector> general_position_p2() {
  return {coords({1, 0, 0}), coords({0, 1, 0}), coords({0, 0, 1}),
          coords({1, 1, 1}), coords({1, 2, 3}), coords({2, -3, 7})};
}

bool in_general_position(const std::vector<Vector>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::vector<Vector> rows{pts[a], pts[b], pts[c]};
        if (rank(DenseMatrix::from_rows(rows, 3)) < 3) return false;
      }
  // five points lie on a conic iff their 5 x 6 conic evaluation has rank < 5
  const SpaceShape p2{2};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 5) continue;
    PointSet five(p2);
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) five.add(ProjPoint({pts[k]}));
    if (rank(evaluation_matrix(five, MultiDegree{2})) < 5) return false;
  }
  return true;
}

PointSet twenty_eight_point_set() {
  static const int pairs[] = {11, 12, 13, 14, 15, 16, 21, 22, 23, 24, 26, 31, 32, 35,
                              36, 41, 42, 45, 46, 51, 53, 56, 61, 62, 63, 64, 65, 66};
  const auto p = general_position_p2();
  PointSet x(SpaceShape{2, 2});
  for (int ij : pairs) x.add(ProjPoint({p[ij / 10 - 1], p[ij % 10 - 1]}));
  return x;
}

PointSet eleven_point_set() {
  static const int pairs[] = {11, 13, 15, 22, 24, 25, 31, 32, 33, 41, 44};
  PointSet x(SpaceShape{1, 1});
  for (int ij : pairs) x.add(grid_point(ij / 10, ij % 10));
  return x;
}

PointSet ruling_set(unsigned b) {
  PointSet x(SpaceShape{1, 1});
  for (unsigned j = 1; j <= b; ++j) x.add(grid_point(1, j));
  return x;
}

PointSet grid_set(unsigned a, unsigned b) { return ferrers_points(Partition(std::vector<unsigned>(a, b))); }

}  // namespace multisep
