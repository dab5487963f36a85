#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multisep/p1p1.hpp"
#include "multisep/separators.hpp"
#include "oracles.hpp"

using namespace multisep;

namespace {

PointSet draw(std::mt19937_64& rng, const SpaceShape& shape, std::size_t max_s) {
  const std::size_t s = 1 + rng() % max_s;
  const std::uint64_t seed = rng();
  if (rng() % 2 == 0) return random_pointset(shape, s, seed);
  std::size_t pool = 2 + rng() % 3, combos = 1;
  for (std::size_t k = 0; k < shape.factors(); ++k) combos *= pool;
  return random_grid_subset(shape, pool, std::min(s, combos), seed);
}

}  // namespace

TEST_CASE("separators generate I_Y modulo I_X and the colon is I_P") {
  std::mt19937_64 rng(6101);
  for (int t = 0; t < 60; ++t) {
    const SpaceShape shape = t % 3 == 2 ? SpaceShape{1, 1, 1} : SpaceShape{1, 1};
    const PointSet x = draw(rng, shape, shape.factors() == 2 ? 8 : 5);
    const std::size_t k = rng() % x.size();
    const DegreeBox box = default_box(x);
    std::vector<MultiForm> seps;
    for (const auto& alpha : degree_set(x, x[k], box).elements) seps.push_back(minimal_separator(x, x[k], alpha));
    const DegreeBox check(MultiDegree::constant(shape.factors(), static_cast<unsigned>(x.size())));
    CHECK(verify_ideal_sum(x, x[k], seps, check));
    for (const auto& f : seps) CHECK(verify_colon(x, x[k], f, check));
    // the elimination route on a smaller box
    if (x.size() <= 5) {
      const DegreeBox small(MultiDegree::constant(shape.factors(), 2));
      CHECK(oracle::ideal_sum_by_elimination(x, k, seps, small));
      for (const auto& f : seps) CHECK(oracle::colon_by_elimination(x, k, f, small));
    }
  }
}

TEST_CASE("degree sets are stable under doubling the box") {
  std::mt19937_64 rng(6102);
  for (int t = 0; t < 40; ++t) {
    const SpaceShape shape = t % 4 == 3 ? SpaceShape{2, 1} : SpaceShape{1, 1};
    const PointSet x = draw(rng, shape, 8);
    for (const auto& p : x) CHECK(box_stability_check(x, p, default_box(x)));
  }
}

TEST_CASE("separator degrees form an up-set") {
  std::mt19937_64 rng(6103);
  for (int t = 0; t < 40; ++t) {
    const PointSet x = draw(rng, SpaceShape{1, 1}, 7);
    const DegreeBox box = default_box(x);
    for (std::size_t k = 0; k < x.size(); ++k) {
      const auto ds = degree_set(x, x[k], box);
      const auto diff = difference_table(x, x[k], box);
      for (const auto& i : box.degrees()) {
        CHECK(diff.at(i) == (in_upset(i, ds.elements) ? 1u : 0u));
        for (std::size_t f = 0; f < i.size(); ++f) {
          MultiDegree up = i;
          ++up[f];
          if (box.contains(up)) CHECK(diff.at(up) >= diff.at(i));
        }
      }
      // lifted separators witness every degree above a minimal one
      const auto sep = minimal_separator(x, x[k], ds.elements.back());
      for (const auto& i : box.degrees())
        if (leq(ds.elements.back(), i)) CHECK(is_separator(x, k, lift_separator(x, x[k], sep, i)));
    }
  }
}

TEST_CASE("ACM in P^1 x P^1 exactly when all degree sets are singletons") {
  std::mt19937_64 rng(6104);
  for (int t = 0; t < 60; ++t) {
    const PointSet x = t % 3 == 0 ? random_ferrers(12, rng()) : draw(rng, SpaceShape{1, 1}, 9);
    bool single = true;
    for (const auto& p : x) single = single && degree_set(x, p).size() == 1;
    CHECK(is_acm(x) == single);
    if (is_acm(x))
      for (const auto& p : x) CHECK(degree_set(x, p).elements.front() == point_degree_acm(x, p));
  }
}

TEST_CASE("conjugation is an involution that swaps the factors") {
  std::mt19937_64 rng(6105);
  for (int t = 0; t < 40; ++t) {
    const Partition l = random_partition(25, rng());
    CHECK(conjugate(conjugate(l)) == l);
    const PointSet x = ferrers_points(l);
    PointSet swapped(SpaceShape{1, 1});
    for (const auto& p : x) swapped.add(ProjPoint({p.factor(1), p.factor(0)}));
    CHECK(partition_of(swapped) == conjugate(l));
  }
}
