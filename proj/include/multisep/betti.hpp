#pragma once

// Betti-table bookkeeping: multisets of multidegree shifts per homological
// index. No differentials are ever computed here.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "multisep/mgraded.hpp"

namespace multisep {

class BettiTable {
 public:
  using Shifts = std::map<MultiDegree, unsigned>;

  BettiTable() = default;
  /// Table of R/I with only the index-0 summand R = R(0,...,0).
  explicit BettiTable(std::size_t factors);

  std::size_t factors() const noexcept { return factors_; }
  /// Largest homological index carrying a shift.
  std::size_t length() const noexcept;

  void add(std::size_t index, const MultiDegree& shift, unsigned mult = 1);
  /// Removes `mult` copies; returns false (and changes nothing) if fewer exist.
  bool remove(std::size_t index, const MultiDegree& shift, unsigned mult = 1);

  unsigned multiplicity(std::size_t index, const MultiDegree& shift) const;
  /// Shifts at an index; empty beyond length().
  const Shifts& at(std::size_t index) const;
  /// Sum of multiplicities at an index (the Betti number beta_j).
  std::size_t total(std::size_t index) const;

  bool operator==(const BettiTable& o) const;

  /// "0: (0,0)\n1: (1,0) (0,1)\n2: (1,1)" with "^m" for multiplicities > 1.
  std::string str() const;

 private:
  void trim();

  std::size_t factors_ = 0;
  std::vector<Shifts> shifts_;
};

/// Koszul resolution of R/I_P for one point P: index j carries every
/// (a_1,...,a_r) with sum j and multiplicity prod_k C(n_k, a_k).
BettiTable koszul_point_table(const SpaceShape& shape);

/// Shift table of the mapping cone of multiplication by a separator of
/// degree alpha, combining the resolution fx of R/I_X (length sum n_k) with
/// the Koszul table of R/I_P shifted by alpha. Throws LengthMismatch.
BettiTable mapping_cone_table(const BettiTable& fx, const MultiDegree& alpha, const SpaceShape& shape);

/// alpha + (n_1,...,n_r) appears among the last shifts of fx.
bool last_shift_criterion(const BettiTable& fx, const MultiDegree& alpha, const SpaceShape& shape);

/// Removes one copy of `shift` from indices j and j-1 (a trivial complex
/// summand). Throws NotCancellable.
BettiTable cancel(const BettiTable& h, std::size_t j, const MultiDegree& shift);

/// sum_h (-1)^h sum_{a in shifts_h, a ⪯ i} mult * dim R_{i-a}; equals H(i)
/// for any graded free resolution of R/I with these shifts.
long long alternating_hilbert(const BettiTable& t, const SpaceShape& shape, const MultiDegree& i);

}  // namespace multisep
