#include "hyperlattice/symmetry.h"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "hyperlattice/errors.h"
#include "hyperlattice/fields.h"

namespace hyperlattice {

OperatorExpr t_hat(int j, int k, const std::vector<Rational>& center, const LatticeSpec& spec, Statistics statistics) {
  const int n = static_cast<int>(center.size());
  OperatorExpr out(statistics, n);
  for (const auto& l : window_offsets(spec.half_width, n)) {
    Point p = make_point(center, l, spec.depth);
    out.add_term(Word{Generator{j, p, std::nullopt, true}, Generator{k, p, std::nullopt, false}}, Scalar(1));
  }
  return out;
}

OperatorExpr realize(const BilinearOp& op, const LatticeSpec& spec, Statistics statistics) {
  const int n = op.alpha.size();
  if (static_cast<int>(op.center.size()) != n) {
    throw DimensionError("bilinear of size " + std::to_string(n) + " at a center with " +
                         std::to_string(op.center.size()) + " coordinates");
  }
  OperatorExpr out(statistics, n);
  for (const auto& l : window_offsets(spec.half_width, n)) {
    const Point p = make_point(op.center, l, spec.depth);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (op.alpha(j, k).is_zero()) continue;
        out.add_term(Word{Generator{j + 1, p, std::nullopt, true}, Generator{k + 1, p, std::nullopt, false}},
                     Scalar(op.alpha(j, k)));
      }
    }
  }
  return out;
}

BilinearOp t_commutator(int j, int k, int l, int m, int n, const std::vector<Rational>& center, bool same_center) {
  BilinearOp out{ExactMatrix(n), center, ""};
  if (!same_center) return out;
  if (k == l) out.alpha(j - 1, m - 1) += Cyclotomic(1);
  if (j == m) out.alpha(l - 1, k - 1) -= Cyclotomic(1);
  return out;
}

BilinearOp bracket(const BilinearOp& a, const BilinearOp& b) {
  if (a.center != b.center) return BilinearOp{ExactMatrix(a.alpha.size()), a.center, ""};
  return BilinearOp{hyperlattice::bracket(a.alpha, b.alpha), a.center, ""};
}

std::optional<ExactMatrix> extract_bilinear(const OperatorExpr& x, const std::vector<Rational>& center,
                                            const LatticeSpec& spec) {
  const int n = x.dimension();
  if (static_cast<int>(center.size()) != n) return std::nullopt;
  ExactMatrix alpha(n);
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  const Point origin = make_point(center, std::vector<long long>(static_cast<std::size_t>(n), 0), spec.depth);
  for (const auto& [w, c] : x.terms()) {
    if (w.size() != 2 || !w[0].dagger || w[1].dagger || w[0].site != origin || w[1].site != origin) continue;
    if (!c.is_constant()) return std::nullopt;
    alpha(w[0].component - 1, w[1].component - 1) = c.constant();
  }
  // Every window point must carry the same coefficients, and nothing else.
  const BilinearOp candidate{alpha, center, ""};
  if (!(realize(candidate, spec, x.statistics()) == x)) return std::nullopt;
  return alpha;
}

std::vector<BilinearOp> generator_basis(int n, const std::vector<Rational>& center) {
  if (n < 2) throw BadDimension("the SU(N) basis needs N >= 2, got " + std::to_string(n));
  if (static_cast<int>(center.size()) != n) throw DimensionError("basis center needs N coordinates");
  std::vector<BilinearOp> basis;
  basis.push_back({ExactMatrix::identity(n), center, "J0"});
  for (int l = 1; l < n; ++l) {
    ExactMatrix a(n);
    for (int j = 0; j < l; ++j) a(j, j) = Cyclotomic(1);
    a(l, l) = Cyclotomic(-l);
    basis.push_back({a, center, "J" + std::to_string(l)});
  }
  const Cyclotomic minus_i = -Cyclotomic::imaginary_unit();
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const auto tag = std::to_string(j + 1) + std::to_string(k + 1);
      basis.push_back({ExactMatrix::unit(n, j, k) + ExactMatrix::unit(n, k, j), center, "J1_" + tag});
      basis.push_back({minus_i * (ExactMatrix::unit(n, j, k) - ExactMatrix::unit(n, k, j)), center, "J2_" + tag});
    }
  }
  return basis;
}

namespace {

std::vector<Cyclotomic> coordinates(const std::vector<ExactMatrix>& mats, const ExactMatrix& target) {
  bool ok = false;
  auto x = decompose(mats, target, &ok);
  if (!ok) throw std::logic_error("commutator left the span of the basis");
  return x;
}

std::vector<ExactMatrix> matrices(const std::vector<BilinearOp>& basis) {
  std::vector<ExactMatrix> out;
  for (const auto& b : basis) out.push_back(b.alpha);
  return out;
}

}  // namespace

StructureTable structure_constants(const std::vector<BilinearOp>& basis) {
  const auto mats = matrices(basis);
  const std::size_t d = basis.size();
  StructureTable f(d, std::vector<std::vector<Cyclotomic>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) f[a][b] = coordinates(mats, bracket(basis[a], basis[b]).alpha);
  }
  return f;
}

StructureTable structure_constants_symbolic(const std::vector<BilinearOp>& basis, const LatticeSpec& spec,
                                            Statistics statistics) {
  const auto mats = matrices(basis);
  const std::size_t d = basis.size();
  std::vector<OperatorExpr> expanded;
  for (const auto& b : basis) expanded.push_back(realize(b, spec, statistics));
  StructureTable f(d, std::vector<std::vector<Cyclotomic>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto c = commutator(expanded[a], expanded[b]);
      const auto alpha = extract_bilinear(c, basis[a].center, spec);
      if (!alpha) throw std::logic_error("commutator of bilinears is not a bilinear: " + c.str());
      f[a][b] = coordinates(mats, *alpha);
    }
  }
  return f;
}

std::optional<std::array<int, 3>> jacobi_violation(const StructureTable& f) {
  const int d = static_cast<int>(f.size());
  // [X_a, [X_b, X_c]] + cyclic, expanded through the table.
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        for (int e = 0; e < d; ++e) {
          Cyclotomic sum;
          for (int m = 0; m < d; ++m) {
            sum += f[b][c][m] * f[a][m][e];
            sum += f[c][a][m] * f[b][m][e];
            sum += f[a][b][m] * f[c][m][e];
          }
          if (!sum.is_zero()) return std::array<int, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::string kind_name(const TransformParams& p) {
  static const char* names[] = {"U1", "SUNDiagonal", "SUNPlane", "SUNGeneric", "Rotation", "Boost", "Dilatation",
                                "Translation"};
  return names[p.index()];
}

namespace {

void check_plane(int j, int k, int n) {
  if (j < 1 || k < 1 || j > n || k > n || j == k) {
    throw std::invalid_argument("plane (" + std::to_string(j) + ", " + std::to_string(k) + ") invalid for N = " +
                                std::to_string(n));
  }
}

bool is_unit(const Cyclotomic& z) { return z * z.conj() == Cyclotomic(1); }

}  // namespace

ExactMatrix exponentiate(const TransformParams& params, int n) {
  if (n < 1) throw BadDimension("dimension must be positive");
  return std::visit(
      [n](const auto& p) -> ExactMatrix {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, U1Phase>) {
          if (!is_unit(p.phase)) throw std::invalid_argument("U(1) phase must have modulus 1");
          return p.phase * ExactMatrix::identity(n);
        } else if constexpr (std::is_same_v<T, SUNDiagonal>) {
          if (static_cast<int>(p.phases.size()) != n) throw DimensionError("one phase per component required");
          Cyclotomic prod(1);
          for (const auto& z : p.phases) {
            if (!is_unit(z)) throw std::invalid_argument("SU(N) diagonal phases must have modulus 1");
            prod *= z;
          }
          if (!(prod == Cyclotomic(1))) throw std::invalid_argument("SU(N) diagonal phases must multiply to 1");
          return ExactMatrix::diagonal(p.phases);
        } else if constexpr (std::is_same_v<T, SUNPlane>) {
          check_plane(p.j, p.k, n);
          if (p.c * p.c + p.s * p.s != 1) throw std::invalid_argument("(c, s) must satisfy c^2 + s^2 = 1");
          ExactMatrix m = ExactMatrix::identity(n);
          const int j = p.j - 1;
          const int k = p.k - 1;
          m(j, j) = Cyclotomic(p.c);
          m(k, k) = Cyclotomic(p.c);
          if (p.family == 1) {
            const Cyclotomic is = Cyclotomic::imaginary_unit() * Cyclotomic(p.s);
            m(j, k) = is;
            m(k, j) = is;
          } else if (p.family == 2) {
            m(j, k) = Cyclotomic(p.s);
            m(k, j) = Cyclotomic(-p.s);
          } else {
            throw std::invalid_argument("SU(N) plane family must be 1 or 2");
          }
          return m;
        } else if constexpr (std::is_same_v<T, SUNGeneric>) {
          if (p.alpha.size() != n) throw DimensionError("alpha must be N x N");
          if (!p.alpha.is_zero()) throw NoExactForm("no closed form for a generic SU(N) exponential");
          return ExactMatrix::identity(n);
        } else if constexpr (std::is_same_v<T, Rotation>) {
          check_plane(p.j, p.k, n);
          if (p.c * p.c + p.s * p.s != 1) throw std::invalid_argument("(c, s) must satisfy c^2 + s^2 = 1");
          ExactMatrix m = ExactMatrix::identity(n);
          const int j = p.j - 1;
          const int k = p.k - 1;
          m(j, j) = Cyclotomic(p.c);
          m(k, k) = Cyclotomic(p.c);
          m(j, k) = Cyclotomic(-p.s);
          m(k, j) = Cyclotomic(p.s);
          return m;
        } else if constexpr (std::is_same_v<T, Boost>) {
          check_plane(p.j, p.k, n);
          if (p.t <= 0) throw std::invalid_argument("boost parameter t = e^a must be positive");
          const Rational ch = (p.t + 1 / p.t) / 2;
          const Rational sh = (p.t - 1 / p.t) / 2;
          ExactMatrix m = ExactMatrix::identity(n);
          const int j = p.j - 1;
          const int k = p.k - 1;
          m(j, j) = Cyclotomic(ch);
          m(k, k) = Cyclotomic(ch);
          m(j, k) = Cyclotomic(Rational(-sh));
          m(k, j) = Cyclotomic(Rational(-sh));
          return m;
        } else if constexpr (std::is_same_v<T, Dilatation>) {
          if (static_cast<int>(p.factors.size()) != n) throw DimensionError("one dilatation factor per axis");
          std::vector<Cyclotomic> d;
          for (const auto& f : p.factors) {
            if (f <= 0) throw std::invalid_argument("dilatation factors e^a must be positive");
            d.emplace_back(f);
          }
          return ExactMatrix::diagonal(d);
        } else {
          throw std::invalid_argument("a translation acts on sites, not on components");
        }
      },
      params);
}

BilinearOp generator_of(const TransformParams& params, int n, const std::vector<Rational>& center) {
  BilinearOp out{ExactMatrix(n), center, kind_name(params)};
  const Cyclotomic i = Cyclotomic::imaginary_unit();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, U1Phase>) {
          out.alpha = i * ExactMatrix::identity(n);
        } else if constexpr (std::is_same_v<T, SUNDiagonal>) {
          for (int l = 1; l < n; ++l) {
            for (int j = 0; j < l; ++j) out.alpha(j, j) += i;
            out.alpha(l, l) -= Cyclotomic(l) * i;
          }
        } else if constexpr (std::is_same_v<T, SUNPlane>) {
          const int j = p.j - 1;
          const int k = p.k - 1;
          if (p.family == 1) {
            out.alpha(j, k) = i;
            out.alpha(k, j) = i;
          } else {
            out.alpha(j, k) = Cyclotomic(1);
            out.alpha(k, j) = Cyclotomic(-1);
          }
        } else if constexpr (std::is_same_v<T, SUNGeneric>) {
          out.alpha = i * p.alpha;
        } else if constexpr (std::is_same_v<T, Rotation>) {
          out.alpha(p.j - 1, p.k - 1) = Cyclotomic(-1);
          out.alpha(p.k - 1, p.j - 1) = Cyclotomic(1);
        } else if constexpr (std::is_same_v<T, Boost>) {
          out.alpha(p.j - 1, p.k - 1) = Cyclotomic(-1);
          out.alpha(p.k - 1, p.j - 1) = Cyclotomic(-1);
        } else if constexpr (std::is_same_v<T, Dilatation>) {
          out.alpha = ExactMatrix::identity(n);
        } else {
          throw std::invalid_argument("a translation is not the exponential of a bilinear");
        }
      },
      params);
  return out;
}

OperatorExpr conjugate(const OperatorExpr& x, const ExactMatrix& m) {
  const int n = x.dimension();
  if (m.size() != n) throw DimensionError("component matrix size differs from the expression dimension");
  const ExactMatrix inv = m.inverse();
  OperatorExpr out(x.statistics(), n);
  for (const auto& [w, c] : x.terms()) {
    OperatorExpr product = OperatorExpr::constant(c, x.statistics(), n);
    for (const auto& g : w) {
      OperatorExpr image(x.statistics(), n);
      const int j = g.component - 1;
      for (int k = 0; k < n; ++k) {
        const Cyclotomic coeff = g.dagger ? m(k, j) : inv(j, k);
        if (coeff.is_zero()) continue;
        Generator h = g;
        h.component = k + 1;
        image.add_term(Word{h}, Scalar(coeff));
      }
      product = concat(product, image);
    }
    out += product;
  }
  return normal_order(out);
}

CenterGrid::CenterGrid(std::vector<Rational> centers) : centers_(std::move(centers)) {
  if (centers_.empty()) throw std::invalid_argument("a center grid needs at least one point");
  std::sort(centers_.begin(), centers_.end());
  if (std::adjacent_find(centers_.begin(), centers_.end()) != centers_.end()) {
    throw std::invalid_argument("grid centers must be distinct");
  }
  spacing_ = centers_.size() > 1 ? Rational(centers_[1] - centers_[0]) : Rational(1);
  for (std::size_t i = 1; i < centers_.size(); ++i) {
    if (centers_[i] - centers_[i - 1] != spacing_) throw std::invalid_argument("grid centers must be equally spaced");
  }
}

Rational CenterGrid::shift(const Rational& r, const Rational& delta) const {
  const auto it = std::find(centers_.begin(), centers_.end(), r);
  if (it == centers_.end()) throw GridMiss(to_string(r) + " is not a grid center");
  const Rational steps = delta / spacing_;
  if (!is_integer(steps)) throw GridMiss("shift " + to_string(delta) + " is not a multiple of the grid spacing");
  const long n = static_cast<long>(centers_.size());
  long idx = static_cast<long>(it - centers_.begin()) + steps.get_num().get_si() % n;
  idx = ((idx % n) + n) % n;
  return centers_[static_cast<std::size_t>(idx)];
}

OperatorExpr shift_op(const Rational& r, const Rational& target, const LatticeSpec& spec, Statistics statistics) {
  OperatorExpr out(statistics, 1);
  for (long long l = -spec.half_width; l <= spec.half_width; ++l) {
    out.add_term(Word{Generator{1, make_point({target}, {l}, spec.depth), std::nullopt, true},
                      Generator{1, make_point({r}, {l}, spec.depth), std::nullopt, false}},
                 Scalar(1));
  }
  return out;
}

OperatorExpr translation_op(const CenterGrid& grid, const Rational& delta, const LatticeSpec& spec,
                            Statistics statistics) {
  OperatorExpr out = OperatorExpr::constant(Scalar(1), statistics, 1);
  for (const auto& r : grid.centers()) out = normal_product(out, shift_op(r, grid.shift(r, delta), spec, statistics));
  return out;
}

namespace {

ProductState grid_state(const CenterGrid& grid, const LatticeSpec& spec, Statistics statistics) {
  ProductState s(statistics, 1);
  for (const auto& r : grid.centers()) s.add_factor(expand(phid({r}), spec, statistics));
  return s;
}

}  // namespace

InvarianceResult translation_invariance(const OperatorExpr& o, const CenterGrid& grid, const Rational& delta,
                                        const LatticeSpec& spec, Statistics statistics) {
  const OperatorExpr ket = grid_state(grid, spec, statistics).expand();
  const OperatorExpr forward = translation_op(grid, delta, spec, statistics);
  const OperatorExpr backward = translation_op(grid, -delta, spec, statistics);
  InvarianceResult r;
  r.before = matrix_element(ket, o, ket);
  // <M|P(-delta) is the bra of P(-delta)^dagger |M>.
  const OperatorExpr shifted_ket = apply(forward, ket);
  const OperatorExpr shifted_bra = apply(backward.adjoint(), ket);
  r.after = matrix_element(shifted_bra, o, shifted_ket);
  r.pass = r.before == r.after;
  return r;
}

InvarianceResult invariance_check(const OperatorExpr& o, const TransformParams& params, const ProductState& state) {
  const ExactMatrix m = exponentiate(params, state.dimension());
  const ExactMatrix inv = m.inverse();
  // U|psi> transforms creators with M; <psi|U^-1 is the bra of
  // (U^-1)^dagger |psi>, whose component action is (M^-1)^dagger.
  const ExactMatrix bra_action = inv.conj_transpose();
  const ProductState ket = state.map([&](const OperatorExpr& f) { return conjugate(f, m); });
  const ProductState bra = state.map([&](const OperatorExpr& f) { return conjugate(f, bra_action); });
  InvarianceResult r;
  r.before = state.expectation(o);
  r.after = ProductState::transition(bra, o, ket);
  r.pass = r.before == r.after;
  return r;
}

}  // namespace hyperlattice
