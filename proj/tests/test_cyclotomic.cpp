#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hyperlattice/cyclotomic.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/scalar.h"

using namespace hyperlattice;

namespace {

std::complex<double> numeric_root(int n, long long k) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
  return {std::cos(a), std::sin(a)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 40; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == totient(n) + 1);
}

TEST_CASE("roots of unity") {
  const Cyclotomic i = Cyclotomic::imaginary_unit();
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(3) * Cyclotomic::zeta(3) * Cyclotomic::zeta(3) == Cyclotomic(1));
  CHECK(Cyclotomic::zeta(6) == -Cyclotomic::zeta(3, 2));
  CHECK(Cyclotomic::root_of_unity(Rational(1, 4)) == i);
  CHECK(Cyclotomic::root_of_unity(Rational(3, 2)) == Cyclotomic(-1));
  CHECK((Cyclotomic(1) + Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)).is_zero());
  CHECK(Cyclotomic::zeta(5).conj() == Cyclotomic::zeta(5, 4));
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(3) == Cyclotomic::zeta(12, 7));
}

TEST_CASE("cyclotomic arithmetic agrees with complex numbers") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> order(1, 15);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const int n = order(rng);
    const int m = order(rng);
    Cyclotomic a, b;
    std::complex<double> za, zb;
    for (int k = 0; k < n; ++k) {
      const int c = coeff(rng);
      a += Cyclotomic(c) * Cyclotomic::zeta(n, k);
      za += static_cast<double>(c) * numeric_root(n, k);
    }
    for (int k = 0; k < m; ++k) {
      const int c = coeff(rng);
      b += Cyclotomic(c) * Cyclotomic::zeta(m, k);
      zb += static_cast<double>(c) * numeric_root(m, k);
    }
    CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-9);
    CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9);
    CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-9);
    if (!b.is_zero()) {
      CHECK(a / b * b == a);
      CHECK(std::abs((a / b).to_complex() - za / zb) < 1e-7);
    }
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), std::domain_error);
}

TEST_CASE("scalar with formal square roots of W") {
  const Scalar r3 = Scalar::sqrt_w_power(3, 1);
  CHECK(r3 * r3 == Scalar(3));
  CHECK(Scalar::sqrt_w_power(3, -2) == Scalar(Rational(1, 3)));
  CHECK(Scalar::sqrt_w_power(3, -1) * Scalar::sqrt_w_power(3, -1) == Scalar(Rational(1, 3)));
  CHECK(Scalar::sqrt_w_power(1, 7) == Scalar(1));
  CHECK(r3.str() == "W^(1/2)");
  CHECK(Scalar::sqrt_w_power(3, -1).str() == "1/3*W^(1/2)");
  CHECK(std::abs(Scalar::sqrt_w_power(5, -3).to_complex() - std::pow(5.0, -1.5)) < 1e-12);
  CHECK_THROWS(Scalar::sqrt_w_power(3, 1) + Scalar::sqrt_w_power(5, 1));
}

TEST_CASE("scalar d grading") {
  const Scalar e(Hyper::delta(2));
  CHECK(e * e == Scalar(Hyper::delta(4)));
  CHECK((e * Scalar(Hyper::delta(-2))).is_constant());
  CHECK(Scalar(Hyper(3) + Hyper::delta()).standard_part() == Scalar(3));
  CHECK_THROWS_AS(Scalar(Hyper::delta(-1)).standard_part(), NotFinite);
  CHECK((Scalar(Hyper::delta(1)) * Cyclotomic::imaginary_unit()).conj() ==
        Scalar(Hyper::delta(1)) * -Cyclotomic::imaginary_unit());
  CHECK(Scalar(Hyper(2) + Rational(3) * Hyper::delta()).to_hyper() == Hyper(2) + Rational(3) * Hyper::delta());
}
