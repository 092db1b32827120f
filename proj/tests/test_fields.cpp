#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/fields.h"
#include "hyperlattice/state.h"

using namespace hyperlattice;

namespace {

LatticeSpec window(int half_width) { return LatticeSpec{half_width, 2, {}}; }

OperatorExpr constant(int v, Statistics st, int n) { return OperatorExpr::constant(Scalar(v), st, n); }

}  // namespace

TEST_CASE("expansion of the equivalent sum") {
  const auto spec = window(1);
  const auto f = expand(phi({0}), spec, Statistics::bose);
  CHECK(f.size() == 3);
  for (const auto& [w, c] : f.terms()) {
    CHECK(w.size() == 1);
    CHECK_FALSE(w[0].dagger);
    CHECK(c == Scalar::sqrt_w_power(3, -1));
  }
  const auto one_site = expand(phi({Rational(1, 2)}), window(0), Statistics::bose);
  CHECK(one_site == OperatorExpr::generator(Generator{1, make_point({Rational(1, 2)}, {0}, 2), {}, false},
                                            Statistics::bose, 1));
  CHECK_THROWS_AS(expand(phi({0}, 1, {2}), spec, Statistics::bose), OutOfWindow);
}

TEST_CASE("daggered fields carry conjugate phases") {
  const auto spec = window(2);
  MonadField f = phi({1}, 1, {2});
  f.theta_turn = Rational(1, 7);
  MonadField fd = f;
  fd.dagger = true;
  CHECK(expand(fd, spec, Statistics::bose) == expand(f, spec, Statistics::bose).adjoint());
  // Oracle: numeric phases e^(+-i theta_l^k).
  const auto expanded = expand(fd, spec, Statistics::bose);
  for (const auto& [w, c] : expanded.terms()) {
    const double l = static_cast<double>(w[0].site[0].offsets()[0]);
    const double theta = 2 * std::numbers::pi * (1.0 / 7 + l * 2 / 5);
    const std::complex<double> expected = std::polar(1 / std::sqrt(5.0), -theta);
    CHECK(std::abs(c.to_complex() - expected) < 1e-12);
  }
}

TEST_CASE("field commutators") {
  for (int hw : {1, 2}) {
    const auto spec = window(hw);
    for (auto st : {Statistics::bose, Statistics::fermi}) {
      const auto bracket = [&](const OperatorExpr& x, const OperatorExpr& y) {
        return st == Statistics::bose ? commutator(x, y) : anticommutator(x, y);
      };
      CHECK(field_commutator(phi({0}, 1, {2 % (hw + 1)}), phid({0}, 1, {2 % (hw + 1)}), spec, st) == Scalar(1));
      CHECK(field_commutator(phi({1}), phid({2}), spec, st).is_zero());
      for (int k = -hw; k <= hw; ++k) {
        for (int kp = -hw; kp <= hw; ++kp) {
          const auto f = phi({0}, 1, {k});
          const auto g = phid({0}, 1, {kp});
          const Scalar rule = field_commutator(f, g, spec, st);
          CHECK(rule == Scalar(k == kp ? 1 : 0));
          CHECK(bracket(expand(f, spec, st), expand(g, spec, st)) == constant(k == kp ? 1 : 0, st, 1));
        }
      }
    }
  }
  const auto spec = window(2);
  CHECK(field_commutator(phi({0}, 1, {2}), phid({0}, 1, {2}), spec, Statistics::bose) == Scalar(1));
  CHECK(field_commutator(phi({0}, 1, {2}), phid({0}, 1, {-2}), spec, Statistics::bose).is_zero());
  CHECK(field_commutator(phid({0}), phi({0}), spec, Statistics::bose) == Scalar(-1));
  CHECK(field_commutator(phid({0}), phi({0}), spec, Statistics::fermi) == Scalar(1));
}

TEST_CASE("free phase offsets cancel") {
  const auto spec = window(1);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> num(0, 11);
  for (int t = 0; t < 20; ++t) {
    MonadField f = phi({0}, 1, {1});
    f.theta_turn = ratio(num(rng), 12);
    MonadField g = f;
    g.dagger = true;
    CHECK(commutator(expand(f, spec, Statistics::bose), expand(g, spec, Statistics::bose)) ==
          constant(1, Statistics::bose, 1));
    CHECK(field_commutator(f, g, spec, Statistics::bose) == Scalar(1));
  }
}

TEST_CASE("two-dimensional fields") {
  const auto spec = window(1);
  const auto f = expand(phi({0, 1}, 2, {0, 0}), spec, Statistics::bose);
  CHECK(f.size() == 9);
  for (const auto& [w, c] : f.terms()) CHECK(c == Scalar(Rational(1, 3)));
  CHECK(expand(phi({Rational(1, 3)}), spec, Statistics::bose).dimension() == 1);
  for (int j = 1; j <= 2; ++j) {
    for (int l = 1; l <= 2; ++l) {
      for (int k1 = -1; k1 <= 1; ++k1) {
        const auto x = phi({0, 1}, j, {k1, 0});
        const auto y = phid({0, 1}, l, {k1, 1});
        const auto z = phid({0, 1}, l, {k1, 0});
        CHECK(field_commutator(x, y, spec, Statistics::bose).is_zero());
        CHECK(field_commutator(x, z, spec, Statistics::bose) == Scalar(j == l ? 1 : 0));
        CHECK(commutator(expand(x, spec, Statistics::bose), expand(z, spec, Statistics::bose)) ==
              constant(j == l ? 1 : 0, Statistics::bose, 2));
      }
    }
  }
}

TEST_CASE("mode completeness") {
  for (int hw : {1, 2}) {
    const auto spec = window(hw);
    OperatorExpr modes(Statistics::bose, 1);
    OperatorExpr sites(Statistics::bose, 1);
    for (int k = -hw; k <= hw; ++k) {
      modes += multiply(expand(phid({0}, 1, {k}), spec, Statistics::bose), expand(phi({0}, 1, {k}), spec, Statistics::bose));
    }
    for (long long l = -hw; l <= hw; ++l) {
      const Point p = make_point({0}, {l}, 2);
      sites.add_term(Word{Generator{1, p, {}, true}, Generator{1, p, {}, false}}, Scalar(1));
    }
    CHECK(modes == sites);
  }
}

TEST_CASE("phase sums agree with numeric summation") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> hw(0, 6);
  std::uniform_int_distribution<int> diff(-40, 40);
  for (int t = 0; t < 300; ++t) {
    const int w = 2 * hw(rng) + 1;
    const int d = diff(rng);
    std::complex<double> sum;
    for (int l = -(w / 2); l <= w / 2; ++l) sum += std::polar(1.0, 2 * std::numbers::pi * l * d / w);
    CHECK(std::abs(sum - static_cast<double>(PhaseSum{w, d}.value())) < 1e-12);
  }
}
