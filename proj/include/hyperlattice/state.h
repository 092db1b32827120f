#ifndef HYPERLATTICE_STATE_H
#define HYPERLATTICE_STATE_H

#include <vector>

#include "hyperlattice/operator_expr.h"

namespace hyperlattice {

/// A ket is represented by the creator-only expression that builds it from
/// the vacuum: |psi> = psi(Ad)|0>.
OperatorExpr vacuum_ket(Statistics statistics, int dimension);

/// op|psi>, as a creator-only expression.
OperatorExpr apply(const OperatorExpr& op, const OperatorExpr& ket);

/// <bra|ket> with <bra| = <0| bra^dagger.
Scalar inner(const OperatorExpr& bra, const OperatorExpr& ket);

/// <bra| op |ket>.
Scalar matrix_element(const OperatorExpr& bra, const OperatorExpr& op, const OperatorExpr& ket);

/// op|0> = 0: every normal-ordered word ends in an annihilator.
bool annihilates_vacuum(const OperatorExpr& op);

/// <0|op = 0: every normal-ordered word starts with a creator.
bool annihilates_dual_vacuum(const OperatorExpr& op);

/// sum_{n <= order} op^n / n! applied to the vacuum.
OperatorExpr exp_series_on_vacuum(const OperatorExpr& op, int order);

/// Product of creator-only factors on pairwise disjoint oscillators.
/// Expectation values factorize over the factors an operator touches, so
/// large products never have to be expanded.
class ProductState {
 public:
  ProductState(Statistics statistics, int dimension);

  void add_factor(OperatorExpr factor);
  const std::vector<OperatorExpr>& factors() const { return factors_; }
  Statistics statistics() const { return statistics_; }
  int dimension() const { return dimension_; }

  /// The full product expanded as a single ket.
  OperatorExpr expand() const;

  /// <state|state>.
  Scalar norm_squared() const;
  /// <state| op |state>. Words whose creator and annihilator counts differ
  /// contribute nothing since every factor has definite particle number.
  Scalar expectation(const OperatorExpr& op) const;

  /// <bra| op |ket> for two product states whose factors pairwise share
  /// supports and particle numbers.
  static Scalar transition(const ProductState& bra, const OperatorExpr& op, const ProductState& ket);

  /// Same factor structure, every factor replaced by f(factor).
  template <class F>
  ProductState map(F&& f) const {
    ProductState out(statistics_, dimension_);
    for (const auto& factor : factors_) out.add_factor(f(factor));
    return out;
  }

 private:
  std::vector<std::size_t> touched(const Word& w) const;

  Statistics statistics_;
  int dimension_;
  std::vector<OperatorExpr> factors_;
  std::vector<std::vector<Generator>> supports_;
  std::vector<int> particle_numbers_;
};

}  // namespace hyperlattice

#endif  // HYPERLATTICE_STATE_H
