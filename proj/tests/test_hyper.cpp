#include <random>

#include "doctest.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/hyper.h"

using namespace hyperlattice;

namespace {

Hyper d(int e = 1) { return Hyper::delta(e); }

Hyper random_hyper(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Hyper h;
  for (int e = lo; e <= hi; ++e) {
    const int c = coeff(rng);
    if (c != 0) h += Hyper::monomial(Rational(c, den(rng)), e);
  }
  return h;
}

}  // namespace

TEST_CASE("hyper arithmetic examples") {
  CHECK(add(Hyper(3) + d(), Hyper(2) - d()) == Hyper(5));
  CHECK(mul(d(-1), d()) == Hyper(1));
  const Window tight{-1, 8};
  CHECK_THROWS_AS(mul(Hyper::delta(-1, tight), Hyper::delta(-1, tight)), InfiniteOverflow);
  CHECK(neg(Hyper(2) - d(3)) == d(3) - Hyper(2));
}

TEST_CASE("truncation drops high orders and rejects low ones") {
  CHECK(d(5) * d(4) == Hyper());
  CHECK(Hyper::monomial(1, 9).is_zero());
  CHECK_THROWS_AS(Hyper::monomial(1, -5), InfiniteOverflow);
  CHECK_THROWS_AS(d(-3) * d(-2), InfiniteOverflow);
}

TEST_CASE("standard part") {
  CHECK(standard_part(Hyper(3) + 2 * d(2) - d()) == 3);
  CHECK(standard_part(d()) == 0);
  CHECK_THROWS_AS(standard_part(d(-1) + Hyper(1)), NotFinite);
}

TEST_CASE("classification") {
  CHECK(classify(d(3) - 2 * d(5)) == Magnitude::infinitesimal);
  CHECK(classify(Hyper(7)) == Magnitude::finite_nonzero_st);
  CHECK(classify(Hyper()) == Magnitude::zero);
  CHECK(classify(d(-2) + Hyper(1)) == Magnitude::infinite);
  for (long n : {1L, -1L, 1000000007L, -9223372036854775807L}) {
    CHECK(classify(Rational(n) * d()) == Magnitude::infinitesimal);
  }
  CHECK(to_string(Magnitude::finite_nonzero_st) == "FiniteNonzeroSt");
}

TEST_CASE("order") {
  ScaleTower tower;
  CHECK(compare(d(), Hyper(Rational(1, 1000000000))) == std::strong_ordering::less);
  CHECK(compare(tower.eps(0), tower.eps(1)) == std::strong_ordering::less);
  CHECK(compare(tower.lambda(), Hyper(1000000000L)) == std::strong_ordering::greater);
  CHECK(compare(-d(), Hyper()) == std::strong_ordering::less);
  CHECK(Hyper(2) - d() < Hyper(2));
}

TEST_CASE("monad equivalence") {
  CHECK(monad_equiv(Hyper(5), Hyper(5) + 3 * d(2)));
  CHECK_FALSE(monad_equiv(Hyper(5), Hyper(Rational(51, 10))));
  CHECK_FALSE(monad_equiv(Hyper(), d(-1)));
}

TEST_CASE("scale tower") {
  for (int depth = 1; depth <= 4; ++depth) {
    ScaleTower tower(depth);
    for (int l = 0; l < depth; ++l) {
      CHECK(classify(tower.eps(l)) == Magnitude::infinitesimal);
      if (l > 0) {
        CHECK(tower.eps(l - 1) < tower.eps(l));
        CHECK(tower.eps(l - 1) == tower.lambda_inverse() * tower.eps(l));
      }
    }
  }
  CHECK_THROWS(ScaleTower(0));
  CHECK_THROWS(ScaleTower(9));
}

TEST_CASE("field axioms and st homomorphism on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Hyper a = random_hyper(rng, -2, 3);
    const Hyper b = random_hyper(rng, -1, 3);
    const Hyper c = random_hyper(rng, -1, 2);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());

    const Hyper fa = random_hyper(rng, 0, 4);
    const Hyper fb = random_hyper(rng, 0, 4);
    CHECK(standard_part(fa + fb) == standard_part(fa) + standard_part(fb));
    CHECK(standard_part(fa * fb) == standard_part(fa) * standard_part(fb));
  }
}

TEST_CASE("total order and equivalence relation on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Hyper a = random_hyper(rng, -1, 2);
    const Hyper b = random_hyper(rng, -1, 2);
    const Hyper c = random_hyper(rng, -1, 2);
    const int trichotomy = (a < b) + (a == b) + (a > b);
    CHECK(trichotomy == 1);
    if (a < b && b < c) CHECK(a < c);
    // Order agrees with the sign of the difference.
    CHECK((compare(a, b) < 0) == (classify(b - a) != Magnitude::zero && (b - a) > Hyper()));
    CHECK(monad_equiv(a, a));
    CHECK(monad_equiv(a, b) == monad_equiv(b, a));
    const Hyper b2 = a + random_hyper(rng, 1, 3);
    const Hyper c2 = b2 + random_hyper(rng, 1, 3);
    CHECK(monad_equiv(a, b2));
    CHECK(monad_equiv(b2, c2));
    CHECK(monad_equiv(a, c2));
  }
}

TEST_CASE("finite sums of infinitesimals stay infinitesimal") {
  Hyper sum;
  for (int i = 1; i <= 500; ++i) {
    sum += Rational(i % 7 + 1, i) * Hyper::delta(1 + i % 3);
    CHECK(classify(sum) == Magnitude::infinitesimal);
  }
}

TEST_CASE("text round trip") {
  const Hyper h = -d(-1) + Hyper(3) + Rational(2, 3) * d(2);
  CHECK(h.str() == "-1*d^-1 + 3 + 2/3*d^2");
  CHECK(Hyper::parse(h.str()) == h);
  CHECK(Hyper::parse("d") == d());
  CHECK(Hyper::parse("d^(-1)") == d(-1));
  CHECK(Hyper::parse("0").is_zero());
  CHECK(Hyper().str() == "0");
}
