#ifndef HYPERLATTICE_FIELDS_H
#define HYPERLATTICE_FIELDS_H

#include <vector>

#include "hyperlattice/lattice.h"
#include "hyperlattice/operator_expr.h"

namespace hyperlattice {

/// Equivalent-sum field phi_j([r]; k) (or its dagger) over the monad window
/// of each axis:
///   phi_j([r]; k) = W^(-N/2) sum_l e^(i theta) z_W^(l.k) A_j(r + l eps)
/// with theta = 2 pi * theta_turn. N = center.size().
struct MonadField {
  std::vector<Rational> center;
  int component = 1;
  std::vector<int> modes;  // empty means all zero
  bool dagger = false;
  Rational theta_turn = 0;

  int axes() const { return static_cast<int>(center.size()); }
  int mode(int axis) const { return modes.empty() ? 0 : modes[static_cast<std::size_t>(axis)]; }
};

MonadField phi(std::vector<Rational> center, int component = 1, std::vector<int> modes = {});
MonadField phid(std::vector<Rational> center, int component = 1, std::vector<int> modes = {});

/// Geometric sum sum_{l=-W_h}^{W_h} z_W^(l d) = W if W | d, else 0.
struct PhaseSum {
  int size = 1;
  long long difference = 0;

  long long value() const { return difference % size == 0 ? size : 0; }
};

/// Window expansion as an OperatorExpr of dimension N = f.axes(); phases
/// are carried as exact cyclotomic coefficients. OutOfWindow for |k| > W_h.
OperatorExpr expand(const MonadField& f, const LatticeSpec& spec, Statistics statistics);

/// Bracket of two fields from the phase-sum rule alone: the commutator for
/// Bose, the anticommutator for Fermi. Equal to
///   delta_jj' prod_i delta_{r_i r'_i} prod_i [PhaseSum / W] * e^(i(theta - theta'))
/// for an annihilating field against a creating one, with the sign flipped
/// for the reverse order, and zero for same-kind pairs.
Scalar field_commutator(const MonadField& f, const MonadField& g, const LatticeSpec& spec, Statistics statistics);

/// Ad_j([r]) = sum_l Ad_j(r + l eps): the unnormalized creating sum.
OperatorExpr creating_sum(const std::vector<Rational>& center, int component, const LatticeSpec& spec,
                          Statistics statistics);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_FIELDS_H
