#ifndef HYPERLATTICE_HYPER_H
#define HYPERLATTICE_HYPER_H

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "hyperlattice/rational.h"

namespace hyperlattice {

/// Exponent range kept by a truncated expansion in the formal infinitesimal d.
/// Terms above `hi` are dropped; a term below `lo` is an InfiniteOverflow.
struct Window {
  int lo = -4;
  int hi = 8;

  bool contains(int e) const { return lo <= e && e <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Combined window of two operands: the tighter bound on each side.
Window intersect(const Window& a, const Window& b);

enum class Magnitude { zero, infinitesimal, finite_nonzero_st, infinite };

std::string_view to_string(Magnitude m);

/// Finite Laurent expansion sum_e c_e d^e with exact rational coefficients in
/// a formal positive infinitesimal d. Zero coefficients are never stored, so
/// equality is equality of term maps.
class Hyper {
 public:
  using Terms = std::map<int, Rational>;

  Hyper() = default;
  explicit Hyper(const Rational& standard, Window window = {});
  explicit Hyper(long standard, Window window = {}) : Hyper(Rational(standard), window) {}

  static Hyper monomial(const Rational& coefficient, int exponent, Window window = {});
  /// d^exponent.
  static Hyper delta(int exponent = 1, Window window = {});

  /// Parses the textual rendering produced by str(), e.g. "-1*d^-1 + 3 + 2/3*d^2".
  static Hyper parse(std::string_view text, Window window = {});

  const Terms& terms() const { return terms_; }
  const Window& window() const { return window_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  /// Most significant (smallest) exponent; requires a nonzero value.
  int leading_exponent() const;

  Hyper& operator+=(const Hyper& other);
  Hyper& operator-=(const Hyper& other);
  Hyper& operator*=(const Hyper& other);
  Hyper& operator*=(const Rational& factor);

  friend Hyper operator+(Hyper a, const Hyper& b) { return a += b; }
  friend Hyper operator-(Hyper a, const Hyper& b) { return a -= b; }
  friend Hyper operator*(const Hyper& a, const Hyper& b);
  friend Hyper operator*(Hyper a, const Rational& b) { return a *= b; }
  friend Hyper operator*(const Rational& a, Hyper b) { return b *= a; }
  friend Hyper operator-(const Hyper& a);

  /// Equality of values; truncation windows are not compared.
  friend bool operator==(const Hyper& a, const Hyper& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const Hyper& a, const Hyper& b);

  /// Integer power, exponent >= 0.
  Hyper pow(unsigned exponent) const;

  /// "c_e*d^e + ..." with exponents ascending; "0" for zero.
  std::string str() const;

 private:
  void accumulate(int exponent, const Rational& coefficient);
  void check_window() const;

  Terms terms_;
  Window window_{};
};

Hyper add(const Hyper& a, const Hyper& b);
Hyper mul(const Hyper& a, const Hyper& b);
Hyper neg(const Hyper& a);

/// Coefficient at d^0; NotFinite when a has a negative exponent.
Rational standard_part(const Hyper& a);

Magnitude classify(const Hyper& a);

/// Total order decided by the sign of the most significant differing term.
std::strong_ordering compare(const Hyper& a, const Hyper& b);

/// True iff a - b is zero or infinitesimal.
bool monad_equiv(const Hyper& a, const Hyper& b);

/// Finite hierarchy of infinitesimal scales eps(l) = d^(L-l), l = 0..L-1,
/// with the common ratio lambda = d^-1 between neighbouring scales.
class ScaleTower {
 public:
  explicit ScaleTower(int depth = 2, Window window = {});

  int depth() const { return depth_; }
  const Window& window() const { return window_; }
  Hyper eps(int scale) const;
  Hyper lambda() const;
  Hyper lambda_inverse() const;

 private:
  int depth_;
  Window window_;
};

}  // namespace hyperlattice

#endif  // HYPERLATTICE_HYPER_H
