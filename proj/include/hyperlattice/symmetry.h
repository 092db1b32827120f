#ifndef HYPERLATTICE_SYMMETRY_H
#define HYPERLATTICE_SYMMETRY_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperlattice/exact_matrix.h"
#include "hyperlattice/lattice.h"
#include "hyperlattice/operator_expr.h"
#include "hyperlattice/state.h"

namespace hyperlattice {

/// sum_{jk} alpha_jk T_jk([r]) with T_jk([r]) = sum_l Ad_j(r + l eps) A_k(r + l eps).
/// Indices of alpha are 0-based; component labels are 1-based.
struct BilinearOp {
  ExactMatrix alpha;
  std::vector<Rational> center;
  std::string name;
};

OperatorExpr t_hat(int j, int k, const std::vector<Rational>& center, const LatticeSpec& spec, Statistics statistics);

/// Window expansion of a bilinear as an OperatorExpr of dimension alpha.size().
OperatorExpr realize(const BilinearOp& op, const LatticeSpec& spec, Statistics statistics);

/// [T_jk, T_lm] = delta_kl T_jm - delta_jm T_lk when the centers agree, 0 otherwise.
BilinearOp t_commutator(int j, int k, int l, int m, int n, const std::vector<Rational>& center, bool same_center);

/// [T(a), T(b)] = T([a, b]) at a common center, 0 for different centers.
BilinearOp bracket(const BilinearOp& a, const BilinearOp& b);

/// Recovers alpha from an expression of the form sum alpha_jk T_jk([r]);
/// empty when the expression has any other shape.
std::optional<ExactMatrix> extract_bilinear(const OperatorExpr& x, const std::vector<Rational>& center,
                                            const LatticeSpec& spec);

/// J0 = sum_j T_jj; J_L = sum_{j<=L} T_jj - L T_{L+1,L+1} for L = 1..N-1;
/// J1_jk = T_jk + T_kj and J2_jk = -i (T_jk - T_kj) for j < k.
/// BadDimension for N < 2.
std::vector<BilinearOp> generator_basis(int n, const std::vector<Rational>& center);

/// f[a][b][c] with [X_a, X_b] = sum_c f[a][b][c] X_c.
using StructureTable = std::vector<std::vector<std::vector<Cyclotomic>>>;

/// Structure constants from the abstract bracket of coefficient matrices.
StructureTable structure_constants(const std::vector<BilinearOp>& basis);

/// Structure constants from OperatorExpr commutators of the window expansions.
StructureTable structure_constants_symbolic(const std::vector<BilinearOp>& basis, const LatticeSpec& spec,
                                            Statistics statistics);

/// First basis triple violating the Jacobi identity of the table, if any.
std::optional<std::array<int, 3>> jacobi_violation(const StructureTable& f);

struct U1Phase {
  Cyclotomic phase;  // e^(i alpha0)
};
struct SUNDiagonal {
  std::vector<Cyclotomic> phases;  // unit entries with product 1
};
struct SUNPlane {
  int j = 1;
  int k = 2;
  int family = 1;  // 1: exp(i theta J1_jk), 2: exp(i theta J2_jk)
  Rational c = 1;  // cos theta
  Rational s = 0;  // sin theta
};
struct SUNGeneric {
  ExactMatrix alpha;
};
struct Rotation {
  int j = 1;
  int k = 2;
  Rational c = 1;
  Rational s = 0;
};
struct Boost {
  Rational t = 1;  // e^a
  int j = 1;
  int k = 2;
};
struct Dilatation {
  std::vector<Rational> factors;  // e^(a_j)
};
struct Translation {
  Rational delta = 0;
};

using TransformParams =
    std::variant<U1Phase, SUNDiagonal, SUNPlane, SUNGeneric, Rotation, Boost, Dilatation, Translation>;

std::string kind_name(const TransformParams& p);

/// Matrix M of the adjoint action of U = exp(X), X a bilinear:
///   U Ad_j U^-1 = sum_k Ad_k M_kj,   U A_j U^-1 = sum_k (M^-1)_jk A_k.
/// Boost: [[cosh, -sinh], [-sinh, cosh]] with cosh = (t + 1/t)/2,
/// sinh = (t - 1/t)/2. Rotation (c, s): [[c, -s], [s, c]] in the (j, k) plane.
/// NoExactForm for SUNGeneric with nonzero alpha; std::invalid_argument for
/// a translation or parameters off their constraint surface.
ExactMatrix exponentiate(const TransformParams& params, int n);

/// The generator X with U = exp(X), as a bilinear with the given
/// coefficient scale where one exists (used only for vacuum checks, so any
/// nonzero multiple of the true generator serves).
BilinearOp generator_of(const TransformParams& params, int n, const std::vector<Rational>& center);

/// U x U^-1 for the component action M.
OperatorExpr conjugate(const OperatorExpr& x, const ExactMatrix& m);

/// Ordered centers of a periodic grid: an arithmetic progression of
/// standard coordinates closed under shifts by multiples of its spacing.
class CenterGrid {
 public:
  explicit CenterGrid(std::vector<Rational> centers);

  const std::vector<Rational>& centers() const { return centers_; }
  std::size_t size() const { return centers_.size(); }
  /// r + delta wrapped into the grid; GridMiss when delta is not a multiple
  /// of the spacing or r is not a grid point.
  Rational shift(const Rational& r, const Rational& delta) const;

 private:
  std::vector<Rational> centers_;
  Rational spacing_;
};

/// p_r(delta) = sum_l Ad(r + delta, l) A(r, l) on one axis.
OperatorExpr shift_op(const Rational& r, const Rational& target, const LatticeSpec& spec, Statistics statistics);

/// P(delta) = :prod_r p_r(delta): over the grid, one axis.
OperatorExpr translation_op(const CenterGrid& grid, const Rational& delta, const LatticeSpec& spec,
                            Statistics statistics);

struct InvarianceResult {
  Scalar before;
  Scalar after;
  bool pass = false;
};

/// <M|P(-delta) O P(delta)|M> against <M|O|M> on the one-axis
/// configuration state of the grid.
InvarianceResult translation_invariance(const OperatorExpr& o, const CenterGrid& grid, const Rational& delta,
                                        const LatticeSpec& spec, Statistics statistics);

/// <psi|U^-1 O U|psi> against <psi|O|psi> for an exponentiated family.
InvarianceResult invariance_check(const OperatorExpr& o, const TransformParams& params, const ProductState& state);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_SYMMETRY_H
