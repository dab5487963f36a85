#include "multisep/betti.hpp"

#include <sstream>

#include "multisep/error.hpp"

namespace multisep {

BettiTable::BettiTable(std::size_t factors) : factors_(factors) { add(0, MultiDegree::zero(factors)); }

std::size_t BettiTable::length() const noexcept { return shifts_.empty() ? 0 : shifts_.size() - 1; }

void BettiTable::add(std::size_t index, const MultiDegree& shift, unsigned mult) {
  if (shift.size() != factors_) throw Error(Errc::LengthMismatch, "shift " + shift.str() + " has wrong length");
  if (mult == 0) return;
  if (shifts_.size() <= index) shifts_.resize(index + 1);
  shifts_[index][shift] += mult;
}

bool BettiTable::remove(std::size_t index, const MultiDegree& shift, unsigned mult) {
  if (index >= shifts_.size()) return false;
  auto it = shifts_[index].find(shift);
  if (it == shifts_[index].end() || it->second < mult) return false;
  it->second -= mult;
  if (it->second == 0) shifts_[index].erase(it);
  trim();
  return true;
}

unsigned BettiTable::multiplicity(std::size_t index, const MultiDegree& shift) const {
  if (index >= shifts_.size()) return 0;
  const auto it = shifts_[index].find(shift);
  return it == shifts_[index].end() ? 0 : it->second;
}

const BettiTable::Shifts& BettiTable::at(std::size_t index) const {
  static const Shifts empty;
  return index < shifts_.size() ? shifts_[index] : empty;
}

std::size_t BettiTable::total(std::size_t index) const {
  std::size_t n = 0;
  for (const auto& [d, m] : at(index)) n += m;
  return n;
}

bool BettiTable::operator==(const BettiTable& o) const {
  if (factors_ != o.factors_ || length() != o.length()) return false;
  for (std::size_t j = 0; j <= length(); ++j)
    if (at(j) != o.at(j)) return false;
  return true;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  for (std::size_t j = 0; j <= length(); ++j) {
    os << j << ':';
    for (const auto& [d, m] : at(j)) {
      os << ' ' << d;
      if (m > 1) os << '^' << m;
    }
    os << '\n';
  }
  return os.str();
}

void BettiTable::trim() {
  while (shifts_.size() > 1 && shifts_.back().empty()) shifts_.pop_back();
}

BettiTable koszul_point_table(const SpaceShape& shape) {
  const std::size_t r = shape.factors();
  BettiTable t(r);
  // every a with 0 <= a_k <= n_k lands in index sum(a)
  DegreeBox box(shape.as_degree());
  for (const auto& a : box.degrees()) {
    if (a.total() == 0) continue;
    std::uint64_t mult = 1;
    for (std::size_t k = 0; k < r; ++k) mult *= binomial(shape.dim(k), a[k]);
    t.add(a.total(), a, static_cast<unsigned>(mult));
  }
  return t;
}

BettiTable mapping_cone_table(const BettiTable& fx, const MultiDegree& alpha, const SpaceShape& shape) {
  const std::size_t t = shape.total_dim();
  if (fx.length() != t)
    throw Error(Errc::LengthMismatch, "resolution of R/I_X has length " + std::to_string(fx.length()) +
                                          ", expected " + std::to_string(t));
  const BettiTable g = koszul_point_table(shape);
  BettiTable h(shape.factors());
  for (std::size_t j = 1; j <= t; ++j)
    for (const auto& [d, m] : fx.at(j)) h.add(j, d, m);
  // G_{j-1}(-alpha) sits in cone index j; G_0(-alpha) = R(-alpha) lands in index 1
  for (std::size_t j = 1; j <= t + 1; ++j)
    for (const auto& [d, m] : g.at(j - 1)) h.add(j, d + alpha, m);
  return h;
}

bool last_shift_criterion(const BettiTable& fx, const MultiDegree& alpha, const SpaceShape& shape) {
  const std::size_t t = shape.total_dim();
  return fx.multiplicity(t, alpha + shape.as_degree()) > 0;
}

BettiTable cancel(const BettiTable& h, std::size_t j, const MultiDegree& shift) {
  if (j == 0 || h.multiplicity(j, shift) == 0 || h.multiplicity(j - 1, shift) == 0)
    throw Error(Errc::NotCancellable, "shift " + shift.str() + " not present at indices " + std::to_string(j) +
                                          " and " + std::to_string(j == 0 ? 0 : j - 1));
  BettiTable out = h;
  out.remove(j, shift);
  out.remove(j - 1, shift);
  return out;
}

long long alternating_hilbert(const BettiTable& t, const SpaceShape& shape, const MultiDegree& i) {
  long long acc = 0;
  for (std::size_t h = 0; h <= t.length(); ++h) {
    long long part = 0;
    for (const auto& [a, m] : t.at(h))
      if (leq(a, i)) part += static_cast<long long>(m) * static_cast<long long>(monomial_count(shape, i - a));
    acc += (h % 2 == 0) ? part : -part;
  }
  return acc;
}

}  // namespace multisep
