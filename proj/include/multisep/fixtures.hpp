#pragma once

// Named point configurations used by the regression suite, the CLI and the
// tests.

#include <cstddef>
#include <vector>

#include "multisep/points.hpp"

namespace multisep {

/// [1:i] x [1:j].
ProjPoint grid_point(long i, long j);

/// Ferrers set of (5,4,4,3,2,1) with P_i = [1:i], Q_j = [1:j] (19 points).
PointSet nineteen_point_set();

/// Ferrers set of (6,5,3,1), same coordinates (15 points).
PointSet partition_6531_set();

/// Six points of P^2 with no three on a line and no five on a conic.
std::vector<Vector> general_position_p2();

/// Checks the two conditions above exactly.
bool in_general_position(const std::vector<Vector>& pts);

/// The 28 points P_i x P_j of P^2 x P^2 on the fixed index list.
PointSet twenty_eight_point_set();

/// P_i x P_j for index pairs 11,13,15,22,24,25,31,32,33,41,44 (11 points).
PointSet eleven_point_set();

/// P_1 x Q_1, ..., P_1 x Q_b on one ruling.
PointSet ruling_set(unsigned b);

/// a x b complete intersection grid.
PointSet grid_set(unsigned a, unsigned b);

}  // namespace multisep
