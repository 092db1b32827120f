#include <random>

#include "doctest.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/fields.h"
#include "hyperlattice/symmetry.h"

using namespace hyperlattice;

namespace {

LatticeSpec window(int half_width) { return LatticeSpec{half_width, 2, {}}; }

Cyclotomic q(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }

/// Reference bracket of matrix units: [E_jk, E_lm] = d_kl E_jm - d_jm E_lk.
ExactMatrix unit_bracket(int n, int j, int k, int l, int m) {
  return bracket(ExactMatrix::unit(n, j, k), ExactMatrix::unit(n, l, m));
}

}  // namespace

TEST_CASE("t commutator examples") {
  const std::vector<Rational> c{0, 0, 0};
  CHECK(t_commutator(1, 2, 2, 3, 3, c, true).alpha == ExactMatrix::unit(3, 0, 2));
  CHECK(t_commutator(1, 2, 2, 1, 3, c, true).alpha == ExactMatrix::unit(3, 0, 0) - ExactMatrix::unit(3, 1, 1));
  CHECK(t_commutator(1, 2, 2, 1, 3, c, false).alpha.is_zero());
  const auto spec = window(1);
  const std::vector<Rational> r{0, 0};
  const std::vector<Rational> rp{1, 0};
  CHECK(commutator(t_hat(1, 2, r, spec, Statistics::bose), t_hat(2, 1, rp, spec, Statistics::bose)).is_zero());
}

TEST_CASE("expanded bilinears reproduce the abstract commutators") {
  for (int n : {2, 3}) {
    for (int hw : {0, 1}) {
      const auto spec = window(hw);
      const std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1, 2));
      for (auto st : {Statistics::bose, Statistics::fermi}) {
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
              for (int m = 1; m <= n; ++m) {
                const auto sym = commutator(t_hat(j, k, c, spec, st), t_hat(l, m, c, spec, st));
                const auto alpha = extract_bilinear(sym, c, spec);
                REQUIRE(alpha.has_value());
                CHECK(*alpha == unit_bracket(n, j - 1, k - 1, l - 1, m - 1));
                CHECK(*alpha == t_commutator(j, k, l, m, n, c, true).alpha);
              }
      }
    }
  }
}

TEST_CASE("generator basis") {
  CHECK_THROWS_AS(generator_basis(1, {0}), BadDimension);
  for (int n : {2, 3, 4}) {
    const auto basis = generator_basis(n, std::vector<Rational>(static_cast<std::size_t>(n), 0));
    CHECK(basis.size() == static_cast<std::size_t>(n * n));
    for (std::size_t a = 1; a < static_cast<std::size_t>(n); ++a) CHECK(basis[a].alpha.trace().is_zero());
    for (const auto& b : basis) {
      // Hermitian coefficient matrices.
      CHECK(b.alpha.conj_transpose() == b.alpha);
    }
    const auto f = structure_constants(basis);
    CHECK_FALSE(jacobi_violation(f).has_value());
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        CHECK(bracket(basis[0], basis[b]).alpha.is_zero());
        for (std::size_t e = 0; e < basis.size(); ++e) CHECK(f[a][b][e] == -f[b][a][e]);
      }
    }
  }
}

TEST_CASE("symbolic structure constants match, both statistics") {
  const auto spec = window(1);
  const std::vector<Rational> c{0, 0};
  const auto basis = generator_basis(2, c);
  const auto abstract = structure_constants(basis);
  CHECK(structure_constants_symbolic(basis, spec, Statistics::bose) == abstract);
  CHECK(structure_constants_symbolic(basis, spec, Statistics::fermi) == abstract);
  // su(2) in this basis: [J1_12, J2_12] = 2i J1.
  CHECK(abstract[2][3][1] == Cyclotomic(2) * Cyclotomic::imaginary_unit());
}

TEST_CASE("adjoint action on single fields") {
  const auto spec = window(1);
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 2;
    const std::vector<Rational> c(static_cast<std::size_t>(n), 0);
    BilinearOp op{ExactMatrix(n), c, ""};
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) op.alpha(j, k) = q(num(rng), 3);
    const auto x = realize(op, spec, Statistics::bose);
    const Point p = make_point(c, std::vector<long long>(static_cast<std::size_t>(n), 1), 2);
    for (int l = 1; l <= n; ++l) {
      const auto a = OperatorExpr::generator(Generator{l, p, {}, false}, Statistics::bose, n);
      const auto ad = OperatorExpr::generator(Generator{l, p, {}, true}, Statistics::bose, n);
      OperatorExpr expect_a(Statistics::bose, n), expect_ad(Statistics::bose, n);
      for (int k = 1; k <= n; ++k) {
        expect_a += OperatorExpr::generator(Generator{k, p, {}, false}, Statistics::bose, n) *
                    Scalar(-op.alpha(l - 1, k - 1));
        expect_ad += OperatorExpr::generator(Generator{k, p, {}, true}, Statistics::bose, n) *
                     Scalar(op.alpha(k - 1, l - 1));
      }
      CHECK(commutator(x, a) == expect_a);
      CHECK(commutator(x, ad) == expect_ad);
    }
  }
}

TEST_CASE("exponentiated families") {
  CHECK(exponentiate(Boost{2}, 2) == ExactMatrix{{q(5, 4), q(-3, 4)}, {q(-3, 4), q(5, 4)}});
  const auto r = exponentiate(Rotation{1, 2, Rational(3, 5), Rational(4, 5)}, 2);
  CHECK(r == ExactMatrix{{q(3, 5), q(-4, 5)}, {q(4, 5), q(3, 5)}});
  CHECK(r.transpose() * r == ExactMatrix::identity(2));
  CHECK(exponentiate(Dilatation{{Rational(2), Rational(1, 3)}}, 2) == ExactMatrix::diagonal({q(2), q(1, 3)}));
  CHECK_THROWS_AS(exponentiate(SUNGeneric{ExactMatrix::identity(2)}, 2), NoExactForm);
  CHECK(exponentiate(SUNGeneric{ExactMatrix(2)}, 2) == ExactMatrix::identity(2));
  CHECK_THROWS(exponentiate(Rotation{1, 2, Rational(1), Rational(1)}, 2));
  CHECK_THROWS(exponentiate(Boost{-1}, 2));
  CHECK_THROWS(exponentiate(Translation{1}, 2));
  const auto z = Cyclotomic::zeta(3);
  const auto u = exponentiate(SUNDiagonal{{z, z, z}}, 3);
  CHECK(u.determinant() == Cyclotomic(1));
  CHECK(u.conj_transpose() * u == ExactMatrix::identity(3));
  for (int family : {1, 2}) {
    const auto p = exponentiate(SUNPlane{1, 3, family, Rational(5, 13), Rational(12, 13)}, 3);
    CHECK(p.conj_transpose() * p == ExactMatrix::identity(3));
    CHECK(p.determinant() == Cyclotomic(1));
  }
  CHECK_THROWS(exponentiate(SUNDiagonal{{z, z}}, 2));
}

TEST_CASE("boosts preserve the Minkowski metric") {
  const auto g = ExactMatrix::diagonal({q(1), q(-1)});
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> num(1, 50);
  for (int t = 0; t < 20; ++t) {
    const Rational tt(num(rng), num(rng));
    const auto u = exponentiate(Boost{tt}, 2);
    CHECK(u.transpose() * g * u == g);
    CHECK(u.determinant() == Cyclotomic(1));
  }
}

TEST_CASE("conjugation realizes the component action") {
  const auto spec = window(1);
  const std::vector<Rational> c{0, 0};
  const auto m = exponentiate(Rotation{1, 2, Rational(3, 5), Rational(4, 5)}, 2);
  const auto ad1 = expand(phid(c, 1), spec, Statistics::bose);
  const auto ad2 = expand(phid(c, 2), spec, Statistics::bose);
  CHECK(conjugate(ad1, m) == ad1 * Scalar(m(0, 0)) + ad2 * Scalar(m(1, 0)));
  // The U(1) generator is invariant under every component action.
  const auto j0 = realize(generator_basis(2, c)[0], spec, Statistics::bose);
  CHECK(conjugate(j0, m) == j0);
  CHECK(conjugate(j0, exponentiate(Boost{3}, 2)) == j0);
}

TEST_CASE("vacuum is fixed") {
  const auto spec = window(1);
  const std::vector<Rational> c{0, 0};
  const std::vector<TransformParams> families{
      U1Phase{Cyclotomic::zeta(5)}, SUNDiagonal{{Cyclotomic::imaginary_unit(), -Cyclotomic::imaginary_unit()}},
      SUNPlane{1, 2, 2, Rational(3, 5), Rational(4, 5)}, Rotation{1, 2, Rational(3, 5), Rational(4, 5)}, Boost{2},
      Dilatation{{Rational(2), Rational(3)}}};
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        const auto t = t_hat(j, k, c, spec, st);
        CHECK(annihilates_vacuum(t));
        CHECK(annihilates_dual_vacuum(t));
      }
    for (const auto& p : families) {
      const auto x = realize(generator_of(p, 2, c), spec, st);
      CHECK(exp_series_on_vacuum(x, 4) == vacuum_ket(st, 2));
      CHECK(conjugate(vacuum_ket(st, 2), exponentiate(p, 2)) == vacuum_ket(st, 2));
    }
  }
}

TEST_CASE("translations") {
  const auto spec = window(1);
  const CenterGrid grid({0, 1, 2});
  CHECK(grid.shift(2, 1) == 0);
  CHECK(grid.shift(0, -1) == 2);
  CHECK_THROWS_AS(grid.shift(0, Rational(1, 2)), GridMiss);
  CHECK_THROWS_AS(grid.shift(5, 1), GridMiss);
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    const auto p = shift_op(0, 1, spec, st);
    CHECK(annihilates_vacuum(p));
    CHECK(annihilates_dual_vacuum(p));
    CHECK(apply(p, expand(phid({0}), spec, st)) == expand(phid({1}), spec, st));
    // p_r(0) counts quanta in the window of r.
    const auto n0 = shift_op(0, 0, spec, st);
    const auto two = normal_product(expand(phid({0}), spec, st), expand(phid({0}, 1, {1}), spec, st));
    CHECK(apply(n0, two) == two * Scalar(2));
    const auto big = translation_op(grid, 1, spec, st);
    CHECK(annihilates_vacuum(big));
    const OperatorExpr number =
        OperatorExpr::word(Word{Generator{1, make_point({1}, {0}, 2), {}, true},
                                Generator{1, make_point({1}, {0}, 2), {}, false}},
                           Scalar(1), st, 1);
    for (int delta : {1, 2}) {
      const auto r = translation_invariance(number, grid, delta, spec, st);
      CHECK(r.pass);
      CHECK(r.before == Scalar(Rational(1, 3)));
    }
  }
}

TEST_CASE("invariance of expectation values") {
  const auto spec = window(1);
  const std::vector<Rational> c{0, 0};
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    ProductState state(st, 2);
    state.add_factor(normal_product(expand(phid(c, 1), spec, st), expand(phid(c, 2), spec, st)));
    const auto number = realize(generator_basis(2, c)[0], spec, st);
    for (const TransformParams& p :
         std::vector<TransformParams>{U1Phase{Cyclotomic::zeta(7, 3)}, Rotation{1, 2, Rational(8, 17), Rational(15, 17)},
                                      SUNPlane{1, 2, 1, Rational(3, 5), Rational(4, 5)}}) {
      const auto r = invariance_check(number, p, state);
      CHECK(r.pass);
      CHECK(r.before == Scalar(2));
    }
    const auto unbalanced = expand(phid(c, 1), spec, st);
    const auto r = invariance_check(unbalanced, U1Phase{Cyclotomic::imaginary_unit()}, state);
    CHECK(r.pass);
    CHECK(r.before.is_zero());
  }
}
