#include <random>

#include "doctest.h"
#include "fock_reference.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/operator_expr.h"

using namespace hyperlattice;

namespace {

Point pt(long long m, const Rational& r = 0) { return Point{MonadSite(r, {m, 0})}; }

OperatorExpr gen(Statistics st, long long m, bool dagger, int j = 1) {
  return OperatorExpr::generator(Generator{j, pt(m), std::nullopt, dagger}, st, 1);
}

constexpr auto B = Statistics::bose;
constexpr auto F = Statistics::fermi;

OperatorExpr one(Statistics st) { return OperatorExpr::constant(Scalar(1), st, 1); }

}  // namespace

TEST_CASE("multiplication examples") {
  const auto a = gen(B, 0, false);
  const auto ad = gen(B, 0, true);
  CHECK(multiply(a, ad) == concat(ad, a) + one(B));
  const auto ad1 = gen(B, 1, true);
  CHECK(multiply(a, ad1) == concat(ad1, a));
  const auto c = gen(F, 0, false);
  const auto cd = gen(F, 0, true);
  CHECK(multiply(c, cd) == one(F) - concat(cd, c));
  CHECK_THROWS_AS(multiply(a, c), StatisticsMismatch);
}

TEST_CASE("normal ordering examples") {
  const auto a = gen(B, 0, false);
  const auto ad = gen(B, 0, true);
  CHECK(normal_order(concat(ad, a)) == concat(ad, a));
  const auto word = concat(concat(a, ad), concat(a, ad));
  const auto expected = concat(concat(ad, ad), concat(a, a)) + Scalar(3) * concat(ad, a) + one(B);
  CHECK(normal_order(word) == expected);
  CHECK(normal_order(word).str() ==
        "1 + 3*Ad[1](site(0; 0, 0))*A[1](site(0; 0, 0)) + "
        "Ad[1](site(0; 0, 0))*Ad[1](site(0; 0, 0))*A[1](site(0; 0, 0))*A[1](site(0; 0, 0))");

  const auto c = gen(F, 0, false);
  const auto cd = gen(F, 0, true);
  const auto fword = concat(concat(c, cd), concat(c, cd));
  CHECK(normal_order(fword) == one(F) - concat(cd, c));
  CHECK(normal_order(concat(cd, cd)).is_zero());
  CHECK(normal_order(concat(concat(cd, gen(F, 1, true)), cd)).is_zero());
}

TEST_CASE("normal forms agree with the dense reference on one mode") {
  const auto a = gen(B, 0, false);
  const auto ad = gen(B, 0, true);
  const auto word = concat(concat(a, ad), concat(a, ad));
  const auto modes = fockref::collect_modes(word);
  const fockref::Space space(modes, B, 8);
  // Entries between low occupations are free of truncation effects.
  CHECK(fockref::agree_below(space, word, normal_order(word), 4, 1e-9));

  const auto c = gen(F, 0, false);
  const auto cd = gen(F, 0, true);
  const auto fword = concat(concat(c, cd), concat(c, cd));
  const fockref::Space fspace(fockref::collect_modes(fword), F, 2);
  CHECK(fockref::agree_below(fspace, fword, normal_order(fword), 2, 1e-12));
  CHECK(std::abs(fockref::vacuum_element(fspace, fword) - 1.0) < 1e-12);
}

TEST_CASE("vacuum expectation values") {
  const auto a0 = gen(B, 0, false);
  const auto ad0 = gen(B, 0, true);
  const auto a1 = gen(B, 1, false);
  const auto ad1 = gen(B, 1, true);
  CHECK(vacuum_expectation(concat(ad0, a0)).is_zero());
  CHECK(vacuum_expectation(concat(a0, ad0)) == Scalar(1));
  const auto w = concat(concat(a0, a1), concat(ad1, ad0));
  CHECK(vacuum_expectation(w) == Scalar(1));
  const fockref::Space space(fockref::collect_modes(w), B, 4);
  CHECK(std::abs(fockref::vacuum_element(space, w) - 1.0) < 1e-12);
  CHECK(vacuum_expectation(ad0).is_zero());
}

TEST_CASE("commutator examples") {
  const auto a = gen(B, 0, false);
  const auto ad = gen(B, 0, true);
  CHECK(commutator(a, ad) == one(B));
  CHECK(commutator(concat(ad, a), ad) == ad);
  CHECK(commutator(a, gen(B, 1, false)).is_zero());
  const auto c = gen(F, 0, false);
  const auto cd = gen(F, 0, true);
  CHECK(commutator(c, cd, true) == one(F));
  CHECK(anticommutator(c, cd) == one(F));
  CHECK(commutator(concat(cd, c), cd, true) == cd);
}

TEST_CASE("canonical relations exhaustively over a window") {
  for (auto st : {B, F}) {
    std::vector<OperatorExpr> ann, cre;
    for (int m = -2; m <= 2; ++m) {
      for (int j = 1; j <= 2; ++j) {
        ann.push_back(OperatorExpr::generator(Generator{j, {MonadSite(0, {m, 0}), MonadSite(0, {0, 0})}, {}, false},
                                              st, 2));
        cre.push_back(ann.back().adjoint());
      }
    }
    const auto bracket = [&](const OperatorExpr& x, const OperatorExpr& y) {
      return st == B ? commutator(x, y) : anticommutator(x, y);
    };
    for (std::size_t p = 0; p < ann.size(); ++p) {
      for (std::size_t q = 0; q < ann.size(); ++q) {
        const OperatorExpr delta = p == q ? OperatorExpr::constant(Scalar(1), st, 2) : OperatorExpr(st, 2);
        CHECK(bracket(ann[p], cre[q]) == delta);
        CHECK(bracket(ann[p], ann[q]).is_zero());
        CHECK(bracket(cre[p], cre[q]).is_zero());
      }
    }
  }
}

TEST_CASE("normal ordering is idempotent, linear, associative") {
  std::mt19937_64 rng(23);
  for (auto st : {B, F}) {
    for (int t = 0; t < 60; ++t) {
      const auto x = fockref::random_expr(rng, st, 3, 4);
      const auto y = fockref::random_expr(rng, st, 3, 4);
      const auto z = fockref::random_expr(rng, st, 3, 3);
      const auto nx = normal_order(x);
      CHECK(nx.is_normal_ordered());
      CHECK(normal_order(nx) == nx);
      CHECK(normal_order(x + y) == nx + normal_order(y));
      CHECK(normal_order(x * Scalar(Rational(2, 3))) == nx * Scalar(Rational(2, 3)));
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("symbolic vev matches dense reference on random words") {
  std::mt19937_64 rng(29);
  for (auto st : {B, F}) {
    for (int t = 0; t < 100; ++t) {
      const auto w = fockref::random_word(rng, st, 3, 6);
      const fockref::Space space(fockref::collect_modes(w), st, st == B ? 5 : 2);
      const auto symbolic = vacuum_expectation(w).to_complex();
      CHECK(std::abs(symbolic - fockref::vacuum_element(space, w)) < 1e-9);
    }
  }
}

TEST_CASE("bilinears annihilate the vacuum") {
  for (auto st : {B, F}) {
    const auto t = concat(gen(st, 1, true), gen(st, 0, false));
    for (int m = -1; m <= 1; ++m) {
      const auto state = concat(gen(st, m, true), gen(st, m + 2, true));
      CHECK(vacuum_expectation(concat(t, state)).is_zero());
    }
  }
}

TEST_CASE("adjoint and dimension checks") {
  const auto x = concat(gen(B, 0, true), gen(B, 1, false)) * Scalar(Cyclotomic::imaginary_unit());
  CHECK(x.adjoint() == concat(gen(B, 1, true), gen(B, 0, false)) * Scalar(-Cyclotomic::imaginary_unit()));
  CHECK(x.adjoint().adjoint() == x);
  CHECK_THROWS_AS(OperatorExpr::generator(Generator{2, pt(0), {}, false}, B, 1), DimensionError);
  CHECK_THROWS_AS(OperatorExpr::generator(Generator{1, {}, {}, false}, B, 1), DimensionError);
}

TEST_CASE("normal product has no contractions") {
  const auto a = gen(B, 0, false);
  const auto ad = gen(B, 0, true);
  CHECK(normal_product(a, ad) == concat(ad, a));
  const auto c = gen(F, 0, false);
  const auto cd = gen(F, 1, true);
  CHECK(normal_product(c, cd) == -concat(cd, c));
}
