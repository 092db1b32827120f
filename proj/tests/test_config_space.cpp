#include <random>

#include "doctest.h"
#include "hyperlattice/config_space.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/symmetry.h"

using namespace hyperlattice;

namespace {

LatticeSpec window(int half_width) { return LatticeSpec{half_width, 2, {}}; }

Hyper eps(const LatticeSpec& spec, const Rational& times = 1) { return times * spec.tower().eps(0); }

}  // namespace

TEST_CASE("monad states are orthonormal") {
  const auto spec = window(1);
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    const std::vector<Rational> grid{-1, 0, Rational(1, 2), 1, 3};
    for (const auto& r : grid) {
      for (const auto& rp : grid) {
        CHECK(inner(monad_state({r}, spec, st), monad_state({rp}, spec, st)) == Scalar(r == rp ? 1 : 0));
      }
    }
    for (std::size_t size = 1; size <= 5; ++size) {
      std::vector<Rational> g(grid.begin(), grid.begin() + static_cast<long>(size));
      const auto m = config_state(grid_points(g, 1), spec, st);
      CHECK(m.norm_squared() == Scalar(1));
      CHECK(inner(m.expand(), m.expand()) == Scalar(1));
    }
  }
}

TEST_CASE("position operator") {
  const auto spec = window(1);
  const std::vector<Rational> grid{0, 1, 3};
  const auto x = position_operator(grid, spec, Statistics::bose);
  CHECK(position_expectation(x, monad_state({3}, spec, Statistics::bose)) == Hyper(3));
  CHECK(eigenvalue(x, monad_state({1}, spec, Statistics::bose)) == Hyper(1));
  const auto shifted = position_operator(grid, spec, Statistics::bose, {Rational(2), 0, 0});
  CHECK(eigenvalue(shifted, monad_state({0}, spec, Statistics::bose)) == eps(spec, 2));
  // Each center's T_r term acts diagonally on the configuration state.
  const auto m = config_state(grid_points(grid, 1), spec, Statistics::bose);
  for (const auto& r : grid) {
    const auto term = position_operator({r}, spec, Statistics::bose);
    CHECK(m.expectation(term) == Scalar(r));
  }
  CHECK(m.expectation(x) == Scalar(4));
  const auto c2 = grid_points({0, 2}, 2);
  const auto x1 = position_component(1, c2, spec, Statistics::bose);
  const auto x2 = position_component(2, c2, spec, Statistics::bose);
  CHECK(eigenvalue(x1, monad_state({2, 0}, spec, Statistics::bose)) == Hyper(2));
  CHECK(eigenvalue(x2, monad_state({2, 0}, spec, Statistics::bose)) == Hyper(0));
}

TEST_CASE("infinitesimal distances") {
  const auto spec = window(2);
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    for (long long dl = -4; dl <= 4; ++dl) {
      CHECK(distance_eigenvalue(1, {Rational(1, 2)}, {dl}, spec, st) == eps(spec, to_rational(dl)));
    }
    CHECK_THROWS_AS(distance_operator(1, {0}, {5}, spec, st), OutOfWindow);
  }
  CHECK(distance_eigenvalue(1, {0}, {4}, spec, Statistics::bose) == eps(spec, 4));
  CHECK(distance_eigenvalue(1, {0}, {0}, spec, Statistics::bose).is_zero());
}

TEST_CASE("squared distance") {
  const auto spec = window(2);
  const auto g = minkowski(2);
  const Hyper e2 = spec.tower().eps(0) * spec.tower().eps(0);
  CHECK(ds2_expectation({0, 0}, {3, 2}, g, spec, Statistics::bose) == 5 * e2);
  CHECK(ds2_expectation({0, 0}, {1, 1}, g, spec, Statistics::bose).is_zero());
  const auto spec3 = window(3);
  CHECK(ds2_expectation({0, 0}, {5, 3}, g, spec3, Statistics::bose) == 16 * e2);
  const auto ket = monad_state({0, 0}, spec, Statistics::bose);
  CHECK(eigenvalue(ds2_operator({0, 0}, {3, 2}, g, spec, Statistics::bose), ket) == 5 * e2);

  const auto small = window(1);
  const auto centers = grid_points({0, 1, 2}, 2);
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> dl(-2, 2);
  for (int t = 0; t < 4; ++t) {
    const std::vector<long long> d{dl(rng), dl(rng)};
    const Center r = centers[static_cast<std::size_t>(t * 2)];
    for (auto st : {Statistics::bose, Statistics::fermi}) {
      CHECK(ds2_config_expectation(centers, r, d, g, small, st) == ds2_expectation(r, d, g, small, st));
    }
  }
}

TEST_CASE("covariant and contravariant action") {
  const auto spec = window(1);
  const auto g = minkowski(2);
  const Center r{3, 2};
  const auto id = covariant_action(ExactMatrix::identity(2), r, g, spec, Statistics::bose);
  CHECK(id.covariant == std::vector<Cyclotomic>{Cyclotomic(3), Cyclotomic(2)});
  CHECK(id.contravariant == std::vector<Cyclotomic>{Cyclotomic(3), Cyclotomic(-2)});
  const auto dil = covariant_action(exponentiate(Dilatation{{Rational(2), Rational(1, 3)}}, 2), r, g, spec,
                                    Statistics::bose);
  CHECK(dil.covariant == std::vector<Cyclotomic>{Cyclotomic(6), Cyclotomic(Rational(2, 3))});
  CHECK(dil.contravariant == std::vector<Cyclotomic>{Cyclotomic(Rational(3, 2)), Cyclotomic(-6)});
  CHECK(dil.contracted_after == dil.contracted_before);
  CHECK(dil.norm_after == Cyclotomic(36 - Rational(4, 9)));
  for (long t : {2L, 3L, 7L}) {
    const auto b = covariant_action(exponentiate(Boost{Rational(t)}, 2), r, g, spec, Statistics::fermi);
    CHECK(b.norm_after == b.norm_before);
    CHECK(b.contracted_after == b.contracted_before);
  }
}
