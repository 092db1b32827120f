#ifndef HYPERLATTICE_CONFIG_SPACE_H
#define HYPERLATTICE_CONFIG_SPACE_H

#include <vector>

#include "hyperlattice/exact_matrix.h"
#include "hyperlattice/fields.h"
#include "hyperlattice/state.h"

namespace hyperlattice {

using Center = std::vector<Rational>;

/// |r> = prod_j phid_j([r])|0>, one quantum per component, N = r.size().
OperatorExpr monad_state(const Center& r, const LatticeSpec& spec, Statistics statistics);

/// All points of grid^N, lexicographic.
std::vector<Center> grid_points(const std::vector<Rational>& grid, int n);

/// |M> = prod over centers of monad states, one factor per center.
ProductState config_state(const std::vector<Center>& centers, const LatticeSpec& spec, Statistics statistics);

/// sum_r (r + a_r eps) T_r over a one-axis grid; `residues` empty means all a_r = 0.
OperatorExpr position_operator(const std::vector<Rational>& grid, const LatticeSpec& spec, Statistics statistics,
                               const std::vector<Rational>& residues = {});

/// i-th component sum_r r_i T_i([r]) over the given centers (1-based i).
OperatorExpr position_component(int i, const std::vector<Center>& centers, const LatticeSpec& spec,
                                Statistics statistics);

/// Eigenvalue lambda of op on ket; std::logic_error when ket is not an
/// eigenvector or its norm is not 1.
Hyper eigenvalue(const OperatorExpr& op, const OperatorExpr& ket);

/// <r| r_op |r> for a monad state.
Hyper position_expectation(const OperatorExpr& r_op, const OperatorExpr& ket);

/// r_mu(r + l eps) = (r_mu + l_mu eps) Ad_mu([r]) A_mu(r + l eps), mu 1-based.
OperatorExpr point_position(int mu, const Center& r, const std::vector<long long>& l, const LatticeSpec& spec,
                            Statistics statistics);

/// dr_mu(dl) = r_mu(l) - r_mu(l') with l - l' = dl and l' = -floor(dl / 2)
/// per axis. OutOfWindow unless every |dl_i| <= 2 W_h.
OperatorExpr distance_operator(int mu, const Center& r, const std::vector<long long>& dl, const LatticeSpec& spec,
                               Statistics statistics);

/// sum_mu g_mu dr_mu dr_mu with a diagonal metric.
OperatorExpr ds2_operator(const Center& r, const std::vector<long long>& dl, const std::vector<int>& metric,
                          const LatticeSpec& spec, Statistics statistics);

/// Eigenvalue eps * dl_mu of dr_mu on the monad state of r.
Hyper distance_eigenvalue(int mu, const Center& r, const std::vector<long long>& dl, const LatticeSpec& spec,
                          Statistics statistics);

/// <r|ds^2|r> on the monad state.
Hyper ds2_expectation(const Center& r, const std::vector<long long>& dl, const std::vector<int>& metric,
                      const LatticeSpec& spec, Statistics statistics);

/// <M|ds^2(r)|M> on the configuration state of the given centers.
Hyper ds2_config_expectation(const std::vector<Center>& centers, const Center& r, const std::vector<long long>& dl,
                             const std::vector<int>& metric, const LatticeSpec& spec, Statistics statistics);

/// Diagonal Minkowski metric (+1, -1, ..., -1).
std::vector<int> minkowski(int n);

struct CovariantResult {
  std::vector<Cyclotomic> covariant;      // components of U sum_mu r_mu phid_mu|0>
  std::vector<Cyclotomic> contravariant;  // components of <0| sum_mu (g r)_mu phi_mu U^-1
  Cyclotomic contracted_before;           // r . g r
  Cyclotomic contracted_after;            // contravariant . covariant
  Cyclotomic norm_before;                 // r . g r
  Cyclotomic norm_after;                  // covariant . g covariant
};

/// Action of the component matrix m on the one-particle position vector at
/// the center r, computed through the operator algebra.
CovariantResult covariant_action(const ExactMatrix& m, const Center& r, const std::vector<int>& metric,
                                 const LatticeSpec& spec, Statistics statistics);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_CONFIG_SPACE_H
