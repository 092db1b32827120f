#ifndef HYPERLATTICE_RATIONAL_H
#define HYPERLATTICE_RATIONAL_H

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hyperlattice {

/// Arbitrary-precision exact rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p", "p/q" and finite decimals such as "-5.1".
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

static_assert(sizeof(long) == sizeof(long long), "64-bit long required");
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

/// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace hyperlattice

#endif  // HYPERLATTICE_RATIONAL_H
