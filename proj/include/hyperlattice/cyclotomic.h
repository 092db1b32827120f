#ifndef HYPERLATTICE_CYCLOTOMIC_H
#define HYPERLATTICE_CYCLOTOMIC_H

#include <complex>
#include <string>
#include <vector>

#include "hyperlattice/rational.h"

namespace hyperlattice {

/// Element of the cyclotomic field Q(z_n), z_n = exp(2 pi i / n), stored in
/// the power basis 1, z, ..., z^(phi(n)-1) reduced modulo the n-th cyclotomic
/// polynomial. Values of different orders are compared and combined in
/// Q(z_lcm). Rationals have order 1; Gaussian rationals live in order 4.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}
  Cyclotomic(const Rational& q) : coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : coeffs_{Rational(v)} {}   // NOLINT(google-explicit-constructor)

  /// exp(2 pi i * turn).
  static Cyclotomic root_of_unity(const Rational& turn);
  /// z_n^k.
  static Cyclotomic zeta(int n, long long k = 1);
  static Cyclotomic imaginary_unit() { return zeta(4); }

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  /// Requires is_rational().
  const Rational& rational() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& factor);
  Cyclotomic& operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(Cyclotomic a) { return a *= Rational(-1); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Complex conjugate (z -> z^-1).
  Cyclotomic conj() const;
  /// Field automorphism z -> z^a, gcd(a, n) = 1.
  Cyclotomic galois(long long a) const;
  /// Multiplicative inverse; std::domain_error for zero.
  Cyclotomic inverse() const;

  std::complex<double> to_complex() const;

  /// "p/q" for rationals, otherwise "c0 + c1*z[n]^1 + ..." (DSL syntax).
  std::string str() const;

 private:
  Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}

  /// Coefficients of this value re-expressed in Q(z_m), n | m.
  std::vector<Rational> lifted(int m) const;
  void normalize();

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

/// Euler's totient.
int totient(int n);

/// Integer coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<long long>& cyclotomic_polynomial(int n);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_CYCLOTOMIC_H
