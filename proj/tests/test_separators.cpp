#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errc.hpp"
#include "multisep/fixtures.hpp"
#include "multisep/separators.hpp"
#include "oracles.hpp"

using namespace multisep;

namespace {

PointSet two_cross() {
  PointSet x(SpaceShape{1, 1});
  x.add(grid_point(1, 2));
  x.add(grid_point(2, 1));
  return x;
}

// x0 * [1:c] coordinate pairs: the form b*x0 - a*x1 vanishing at [a:b].
MultiForm vanishing_at(const SpaceShape& shape, std::size_t k, long a, long b) {
  return linear_form(shape, k, Vector{b, -a});
}

std::vector<PointSet> random_cases() {
  std::vector<PointSet> out;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    out.push_back(random_pointset(SpaceShape{1, 1}, 2 + seed % 5, 700 + seed));
    out.push_back(random_grid_subset(SpaceShape{1, 1}, 3, 3 + seed % 5, 800 + seed));
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    out.push_back(random_grid_subset(SpaceShape{1, 1, 1}, 2, 3 + seed % 2, 900 + seed));
    out.push_back(random_pointset(SpaceShape{2, 1}, 2 + seed % 3, 950 + seed));
  }
  return out;
}

}  // namespace

TEST_CASE("form arithmetic") {
  const SpaceShape shape{1, 1};
  const MultiForm a = linear_form(shape, 0, Vector{1, 2});
  const MultiForm b = linear_form(shape, 1, Vector{3, -1});
  const MultiForm ab = multiply(shape, a, b);
  CHECK(ab.degree == MultiDegree{1, 1});
  CHECK(ab.coeffs == Vector{3, -1, 6, -2});
  const ProjPoint p({coords({2, 1}), coords({1, 5})});
  CHECK(evaluate(shape, ab, p) == evaluate(shape, a, p) * evaluate(shape, b, p));
  CHECK(normalized(MultiForm{{1, 0}, Vector{0, -4}}).coeffs == Vector{0, 1});
  CHECK(proportional(a, MultiForm{{1, 0}, Vector{-2, -4}}));
  CHECK_FALSE(proportional(a, b));
  CHECK(MultiForm{{1, 0}, Vector{0, 0}}.is_zero());
}

TEST_CASE("separators of two points off a common ruling") {
  const auto x = two_cross();
  CHECK(degree_set(x, x[0]).elements == std::vector<MultiDegree>{{0, 1}, {1, 0}});
  CHECK(degree_set(x, x[1]).elements == std::vector<MultiDegree>{{0, 1}, {1, 0}});
  const auto f = minimal_separator(x, x[0], {1, 0});
  CHECK(proportional(f, vanishing_at(x.shape(), 0, 1, 2)));
  CHECK(is_separator(x, 0, f));
  CHECK_FALSE(is_separator(x, 1, f));
  // one separator alone does not generate I_Y
  const std::vector<MultiForm> one{f};
  const std::vector<MultiForm> both{f, minimal_separator(x, x[0], {0, 1})};
  const DegreeBox box({2, 2});
  CHECK_FALSE(verify_ideal_sum(x, x[0], one, box));
  CHECK(verify_ideal_sum(x, x[0], both, box));
  CHECK_FALSE(oracle::ideal_sum_by_elimination(x, 0, one, box));
  CHECK(oracle::ideal_sum_by_elimination(x, 0, both, box));
}

TEST_CASE("one point") {
  PointSet x(SpaceShape{1, 1});
  x.add(grid_point(1, 1));
  CHECK(default_box(x).upper() == MultiDegree{0, 0});
  CHECK(degree_set(x, x[0]).elements == std::vector<MultiDegree>{{0, 0}});
  const auto f = minimal_separator(x, x[0], {0, 0});
  CHECK(f.coeffs == Vector{1});
  CHECK(verify_colon(x, x[0], f, DegreeBox({2, 2})));
}

TEST_CASE("points on one ruling") {
  for (unsigned b = 2; b <= 5; ++b) {
    const auto x = ruling_set(b);
    CHECK(default_box(x).upper() == MultiDegree{b - 1, b - 1});
    CHECK(degree_set(x, x[0]).elements == std::vector<MultiDegree>{{0, b - 1}});
    MultiForm expect{{0, 0}, Vector{1}};
    for (long j = 2; j <= static_cast<long>(b); ++j) expect = multiply(x.shape(), expect, vanishing_at(x.shape(), 1, 1, j));
    CHECK(proportional(minimal_separator(x, x[0], {0, b - 1}), expect));
    CHECK(MULTISEP_ERRC(degree_set(x, x[0], DegreeBox({1, b - 2}))) == Errc::BoxTooSmall);
  }
}

TEST_CASE("grids") {
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 1; b <= 3; ++b) {
      const auto x = grid_set(a, b);
      for (std::size_t k = 0; k < x.size(); ++k)
        CHECK(degree_set(x, x[k]).elements == std::vector<MultiDegree>{{a - 1, b - 1}});
    }
}

TEST_CASE("errors") {
  const auto x = ruling_set(3);
  const ProjPoint absent = grid_point(4, 4);
  CHECK(MULTISEP_ERRC(degree_set(x, absent)) == Errc::PointNotFound);
  CHECK(MULTISEP_ERRC(minimal_separator(x, absent, {0, 2})) == Errc::PointNotFound);
  CHECK(MULTISEP_ERRC(difference_table(x, absent, DegreeBox({1, 1}))) == Errc::PointNotFound);
  CHECK(MULTISEP_ERRC(minimal_separator(x, x[0], {1, 1})) == Errc::NotASeparatorDegree);
  CHECK(MULTISEP_ERRC(minimal_separator(x, x[0], {3, 0})) == Errc::NotASeparatorDegree);
  const auto f = minimal_separator(x, x[0], {0, 2});
  CHECK(MULTISEP_ERRC(lift_separator(x, x[0], f, {2, 1})) == Errc::DegreeNotAbove);
  const std::vector<MultiForm> seps{f};
  CHECK(MULTISEP_ERRC(verify_ideal_sum(x, absent, seps, DegreeBox({1, 1}))) == Errc::PointNotFound);
}

TEST_CASE("degree sets agree with the kernel oracle") {
  for (const auto& x : random_cases()) {
    const DegreeBox box = default_box(x);
    for (std::size_t k = 0; k < x.size(); ++k) {
      const auto found = oracle::separator_degrees(x, k, box);
      const auto ds = degree_set(x, x[k]);
      CHECK(ds.elements == oracle::minimal(found));
      const auto diff = difference_table(x, x[k], box);
      for (const auto& i : box.degrees()) {
        const bool in = std::find(found.begin(), found.end(), i) != found.end();
        CHECK(diff.at(i) == (in ? 1u : 0u));
        CHECK(in_upset(i, ds.elements) == in);
        CHECK(separator_space_dim(x, x[k], i) == (in ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("minimal separators") {
  for (const auto& x : random_cases())
    for (std::size_t k = 0; k < x.size(); ++k)
      for (const auto& alpha : degree_set(x, x[k]).elements) {
        const auto f = minimal_separator(x, x[k], alpha);
        CHECK(f.degree == alpha);
        CHECK(is_separator(x, k, f));
        CHECK(f == normalized(f));
        // deterministic
        CHECK(f == minimal_separator(x, x[k], alpha));
        // separators of one degree differ by elements of (I_X): a single class
        CHECK(separator_space_dim(x, x[k], alpha) == 1);
        CHECK(verify_colon(x, x[k], f, DegreeBox(alpha + MultiDegree::constant(alpha.size(), 1))));
      }
}

TEST_CASE("lifting") {
  for (const auto& x : random_cases())
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (std::size_t f = 0; f < x.shape().factors(); ++f) {
        const auto l = lifting_form(x, x[k], f);
        CHECK(l.degree == MultiDegree::unit(x.shape().factors(), f));
        CHECK(sgn(evaluate(x.shape(), l, x[k])) != 0);
      }
      const auto ds = degree_set(x, x[k]);
      const auto sep = minimal_separator(x, x[k], ds.elements.front());
      for (const auto& i : DegreeBox(ds.elements.front() + MultiDegree::constant(ds.elements.front().size(), 2)).degrees()) {
        if (!leq(ds.elements.front(), i)) continue;
        const auto lifted = lift_separator(x, x[k], sep, i);
        CHECK(lifted.degree == i);
        CHECK(is_separator(x, k, lifted));
      }
    }
}

TEST_CASE("ideal sum and colon against elimination") {
  std::uint64_t seed = 0;
  for (const auto& x : random_cases()) {
    if (x.size() > 5) continue;
    const DegreeBox box(MultiDegree::constant(x.shape().factors(), 2));
    for (std::size_t k = 0; k < x.size(); ++k) {
      std::vector<MultiForm> seps;
      for (const auto& alpha : degree_set(x, x[k]).elements) seps.push_back(minimal_separator(x, x[k], alpha));
      CHECK(verify_ideal_sum(x, x[k], seps, box));
      CHECK(oracle::ideal_sum_by_elimination(x, k, seps, box));
      // dropping one separator: both routes agree on the outcome
      if (seps.size() > 1) {
        const std::vector<MultiForm> fewer(seps.begin() + 1, seps.end());
        CHECK(verify_ideal_sum(x, x[k], fewer, box) == oracle::ideal_sum_by_elimination(x, k, fewer, box));
      }
      for (const auto& f : seps) {
        CHECK(verify_colon(x, x[k], f, box));
        CHECK(oracle::colon_by_elimination(x, k, f, box));
      }
      // a form not vanishing on Y
      const MultiForm l = lifting_form(x, x[k], seed++ % x.shape().factors());
      const std::vector<MultiForm> bad{l};
      CHECK(verify_ideal_sum(x, x[k], bad, box) == oracle::ideal_sum_by_elimination(x, k, bad, box));
      CHECK(verify_colon(x, x[k], l, box) == oracle::colon_by_elimination(x, k, l, box));
      CHECK_FALSE(verify_ideal_sum(x, x[k], bad, box));
    }
  }
}

TEST_CASE("box stability") {
  for (const auto& x : random_cases())
    for (std::size_t k = 0; k < x.size(); ++k) CHECK(box_stability_check(x, x[k], default_box(x)));
}
