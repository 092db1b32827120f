#ifndef HYPERLATTICE_OPERATOR_EXPR_H
#define HYPERLATTICE_OPERATOR_EXPR_H

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlattice/lattice.h"
#include "hyperlattice/scalar.h"

namespace hyperlattice {

enum class Statistics { bose, fermi };

std::string_view to_string(Statistics s);

/// Creation (dagger) or annihilation oscillator at one lattice point.
/// `mode` tags abstract Fourier-mode oscillators of a monad; site
/// oscillators leave it empty.
struct Generator {
  int component = 1;
  Point site;
  std::optional<int> mode;
  bool dagger = false;

  /// Same oscillator, ignoring dagger.
  bool same_oscillator(const Generator& other) const {
    return component == other.component && mode == other.mode && site == other.site;
  }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);

  /// DSL atom, e.g. "Ad[1](site(0; 0, 0))".
  std::string str(Statistics statistics) const;
};

/// Canonical order of oscillators: component, then site, then mode.
std::strong_ordering compare_oscillators(const Generator& a, const Generator& b);

Generator creator(int component, Point site);
Generator annihilator(int component, Point site);

using Word = std::vector<Generator>;

/// Shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// Finite sum of Scalar-weighted words in oscillator generators of a single
/// statistics. Words are stored as given; normal_order() rewrites them so
/// every creator precedes every annihilator, each block sorted by
/// compare_oscillators().
class OperatorExpr {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  explicit OperatorExpr(Statistics statistics = Statistics::bose, int dimension = 1);

  static OperatorExpr constant(const Scalar& c, Statistics statistics, int dimension);
  static OperatorExpr word(Word w, const Scalar& c, Statistics statistics, int dimension);
  static OperatorExpr generator(const Generator& g, Statistics statistics, int dimension);

  Statistics statistics() const { return statistics_; }
  int dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Word& w) const;
  void add_term(Word w, const Scalar& c);

  OperatorExpr& operator+=(const OperatorExpr& other);
  OperatorExpr& operator-=(const OperatorExpr& other);
  OperatorExpr& operator*=(const Scalar& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const Scalar& c) { return a *= c; }
  friend OperatorExpr operator*(const Scalar& c, OperatorExpr a) { return a *= c; }
  friend OperatorExpr operator-(OperatorExpr a) { return a *= Scalar(-1); }

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    return a.statistics_ == b.statistics_ && a.terms_ == b.terms_;
  }

  /// Reverses words, swaps creators and annihilators, conjugates coefficients.
  OperatorExpr adjoint() const;

  bool is_normal_ordered() const;
  /// Largest word length; 0 for constants and zero.
  std::size_t max_word_length() const;

  /// DSL rendering: "c*Ad[1](...)*A[1](...) + ..."; "0" for zero.
  std::string str() const;

  void check_compatible(const OperatorExpr& other) const;

 private:
  void check_generator(const Generator& g) const;

  Statistics statistics_;
  int dimension_;
  Terms terms_;
};

/// Formal product: words concatenated, nothing reordered.
OperatorExpr concat(const OperatorExpr& x, const OperatorExpr& y);

/// Rewrites every word with [A, Ad] = 1 (Bose) or {C, Cd} = 1 (Fermi) until
/// all creators stand left of all annihilators.
OperatorExpr normal_order(const OperatorExpr& x);

/// normal_order(concat(x, y)).
OperatorExpr multiply(const OperatorExpr& x, const OperatorExpr& y);

/// Normal product :x y: -- reordering with exchange signs, no contractions.
OperatorExpr normal_product(const OperatorExpr& x, const OperatorExpr& y);

/// Coefficient of the empty word after normal ordering.
Scalar vacuum_expectation(const OperatorExpr& x);

/// xy - yx. With graded = true odd-odd monomial pairs of a Fermi expression
/// use xy + yx instead.
OperatorExpr commutator(const OperatorExpr& x, const OperatorExpr& y, bool graded = false);

/// xy + yx.
OperatorExpr anticommutator(const OperatorExpr& x, const OperatorExpr& y);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_OPERATOR_EXPR_H
