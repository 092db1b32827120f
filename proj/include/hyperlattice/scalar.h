#ifndef HYPERLATTICE_SCALAR_H
#define HYPERLATTICE_SCALAR_H

#include <compare>
#include <complex>
#include <map>
#include <string>

#include "hyperlattice/cyclotomic.h"
#include "hyperlattice/hyper.h"

namespace hyperlattice {

/// Coefficient ring of operator expressions:
///   sum c_{e,p} d^e (sqrt W)^p,   p in {0, 1},  c in Q(z_n).
/// Even powers of sqrt W collapse into the coefficient, so W^(h/2) for any
/// integer h has a unique representation. The d-grading follows the same
/// truncation rules as Hyper.
class Scalar {
 public:
  struct Key {
    int exponent = 0;  // power of d
    int parity = 0;    // power of sqrt(W), 0 or 1
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, Cyclotomic>;

  Scalar() = default;
  Scalar(const Rational& q);    // NOLINT(google-explicit-constructor)
  Scalar(long v);               // NOLINT(google-explicit-constructor)
  Scalar(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Hyper& h);

  /// W^(h/2) for window size W >= 1.
  static Scalar sqrt_w_power(int w, int h);

  const Terms& terms() const { return terms_; }
  int radicand() const { return radicand_; }
  const Window& window() const { return window_; }

  bool is_zero() const { return terms_.empty(); }
  /// True when only the d^0, sqrt(W)^0 term is present (or zero).
  bool is_constant() const;
  /// Value of a constant scalar; std::logic_error otherwise.
  Cyclotomic constant() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator*=(const Cyclotomic& factor);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(Scalar a) { return a *= Cyclotomic(-1); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_ && a.radicand_ == b.radicand_;
  }

  Scalar conj() const;

  /// Drops every positive power of d; NotFinite if a negative power is present.
  Scalar standard_part() const;
  /// Requires no sqrt(W) part and rational coefficients.
  Hyper to_hyper() const;
  /// Requires no d-dependence.
  std::complex<double> to_complex() const;

  /// DSL rendering, e.g. "1/3*W^(1/2)" or "(1 + z[3]^1)*d^2".
  std::string str() const;

 private:
  void accumulate(const Key& key, const Cyclotomic& c);
  void tidy();

  Terms terms_;
  int radicand_ = 0;
  Window window_{};
};

}  // namespace hyperlattice

#endif  // HYPERLATTICE_SCALAR_H
