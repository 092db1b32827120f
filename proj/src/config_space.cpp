#include "hyperlattice/config_space.h"

#include <stdexcept>

#include "hyperlattice/errors.h"
#include "hyperlattice/symmetry.h"

namespace hyperlattice {

OperatorExpr monad_state(const Center& r, const LatticeSpec& spec, Statistics statistics) {
  const int n = static_cast<int>(r.size());
  OperatorExpr ket = vacuum_ket(statistics, n);
  for (int j = 1; j <= n; ++j) ket = normal_product(ket, expand(phid(r, j), spec, statistics));
  return ket;
}

std::vector<Center> grid_points(const std::vector<Rational>& grid, int n) {
  std::vector<Center> out{{}};
  for (int a = 0; a < n; ++a) {
    std::vector<Center> next;
    for (const auto& prefix : out) {
      for (const auto& g : grid) {
        next.push_back(prefix);
        next.back().push_back(g);
      }
    }
    out = std::move(next);
  }
  return out;
}

ProductState config_state(const std::vector<Center>& centers, const LatticeSpec& spec, Statistics statistics) {
  if (centers.empty()) throw std::invalid_argument("a configuration state needs at least one center");
  ProductState s(statistics, static_cast<int>(centers.front().size()));
  for (const auto& r : centers) s.add_factor(monad_state(r, spec, statistics));
  return s;
}

OperatorExpr position_operator(const std::vector<Rational>& grid, const LatticeSpec& spec, Statistics statistics,
                               const std::vector<Rational>& residues) {
  if (!residues.empty() && residues.size() != grid.size()) {
    throw std::invalid_argument("one residue per grid center required");
  }
  const Hyper eps = spec.tower().eps(0);
  OperatorExpr out(statistics, 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Hyper coordinate(grid[i], spec.window);
    if (!residues.empty()) coordinate += residues[i] * eps;
    out += t_hat(1, 1, {grid[i]}, spec, statistics) * Scalar(coordinate);
  }
  return out;
}

OperatorExpr position_component(int i, const std::vector<Center>& centers, const LatticeSpec& spec,
                                Statistics statistics) {
  if (centers.empty()) throw std::invalid_argument("no centers");
  OperatorExpr out(statistics, static_cast<int>(centers.front().size()));
  for (const auto& r : centers) out += t_hat(i, i, r, spec, statistics) * Scalar(r.at(static_cast<std::size_t>(i - 1)));
  return out;
}

Hyper eigenvalue(const OperatorExpr& op, const OperatorExpr& ket) {
  if (!(inner(ket, ket) == Scalar(1))) throw std::logic_error("eigenvalue extraction needs a unit-norm ket");
  const OperatorExpr image = apply(op, ket);
  const Scalar lambda = inner(ket, image);
  if (!(image == ket * lambda)) throw std::logic_error("state is not an eigenvector of the operator");
  return lambda.to_hyper();
}

Hyper position_expectation(const OperatorExpr& r_op, const OperatorExpr& ket) {
  return matrix_element(ket, r_op, ket).to_hyper();
}

OperatorExpr point_position(int mu, const Center& r, const std::vector<long long>& l, const LatticeSpec& spec,
                            Statistics statistics) {
  const int n = static_cast<int>(r.size());
  if (mu < 1 || mu > n) throw DimensionError("axis " + std::to_string(mu) + " outside 1.." + std::to_string(n));
  if (static_cast<int>(l.size()) != n) throw DimensionError("offset vector needs one entry per axis");
  for (long long x : l) {
    if (x < -spec.half_width || x > spec.half_width) {
      throw OutOfWindow("offset " + std::to_string(x) + " outside the window");
    }
  }
  const Hyper coordinate =
      Hyper(r[static_cast<std::size_t>(mu - 1)], spec.window) +
      to_rational(l[static_cast<std::size_t>(mu - 1)]) * spec.tower().eps(0);
  const Generator target{mu, make_point(r, l, spec.depth), std::nullopt, false};
  const OperatorExpr ann = OperatorExpr::generator(target, statistics, n);
  return multiply(creating_sum(r, mu, spec, statistics), ann) * Scalar(coordinate);
}

namespace {

void split_difference(const std::vector<long long>& dl, const LatticeSpec& spec, std::vector<long long>& l,
                      std::vector<long long>& lp) {
  l.clear();
  lp.clear();
  for (long long d : dl) {
    if (d > 2LL * spec.half_width || d < -2LL * spec.half_width) {
      throw OutOfWindow("offset difference " + std::to_string(d) + " exceeds the window span " +
                        std::to_string(2 * spec.half_width));
    }
    // floor(d / 2) for either sign.
    const long long half = d >= 0 ? d / 2 : -((-d + 1) / 2);
    lp.push_back(-half);
    l.push_back(d - half);
  }
}

}  // namespace

OperatorExpr distance_operator(int mu, const Center& r, const std::vector<long long>& dl, const LatticeSpec& spec,
                               Statistics statistics) {
  std::vector<long long> l, lp;
  split_difference(dl, spec, l, lp);
  return point_position(mu, r, l, spec, statistics) - point_position(mu, r, lp, spec, statistics);
}

OperatorExpr ds2_operator(const Center& r, const std::vector<long long>& dl, const std::vector<int>& metric,
                          const LatticeSpec& spec, Statistics statistics) {
  const int n = static_cast<int>(r.size());
  if (static_cast<int>(metric.size()) != n) throw DimensionError("metric needs one entry per axis");
  OperatorExpr out(statistics, n);
  for (int mu = 1; mu <= n; ++mu) {
    const int g = metric[static_cast<std::size_t>(mu - 1)];
    if (g != 1 && g != -1) throw std::invalid_argument("metric entries must be +1 or -1");
    const OperatorExpr dr = distance_operator(mu, r, dl, spec, statistics);
    out += multiply(dr, dr) * Scalar(g);
  }
  return out;
}

Hyper distance_eigenvalue(int mu, const Center& r, const std::vector<long long>& dl, const LatticeSpec& spec,
                          Statistics statistics) {
  return eigenvalue(distance_operator(mu, r, dl, spec, statistics), monad_state(r, spec, statistics));
}

Hyper ds2_expectation(const Center& r, const std::vector<long long>& dl, const std::vector<int>& metric,
                      const LatticeSpec& spec, Statistics statistics) {
  const OperatorExpr ket = monad_state(r, spec, statistics);
  return matrix_element(ket, ds2_operator(r, dl, metric, spec, statistics), ket).to_hyper();
}

Hyper ds2_config_expectation(const std::vector<Center>& centers, const Center& r, const std::vector<long long>& dl,
                             const std::vector<int>& metric, const LatticeSpec& spec, Statistics statistics) {
  const ProductState m = config_state(centers, spec, statistics);
  return m.expectation(ds2_operator(r, dl, metric, spec, statistics)).to_hyper();
}

std::vector<int> minkowski(int n) {
  std::vector<int> g(static_cast<std::size_t>(n), -1);
  if (n > 0) g[0] = 1;
  return g;
}

CovariantResult covariant_action(const ExactMatrix& m, const Center& r, const std::vector<int>& metric,
                                 const LatticeSpec& spec, Statistics statistics) {
  const int n = static_cast<int>(r.size());
  if (m.size() != n || static_cast<int>(metric.size()) != n) throw DimensionError("size mismatch");
  std::vector<OperatorExpr> basis;
  for (int j = 1; j <= n; ++j) basis.push_back(expand(phid(r, j), spec, statistics));
  OperatorExpr ket(statistics, n);
  OperatorExpr bra(statistics, n);
  CovariantResult out;
  for (int j = 0; j < n; ++j) {
    const Rational& x = r[static_cast<std::size_t>(j)];
    ket += basis[static_cast<std::size_t>(j)] * Scalar(x);
    bra += basis[static_cast<std::size_t>(j)] * Scalar(Rational(x * metric[static_cast<std::size_t>(j)]));
    out.contracted_before += Cyclotomic(Rational(x * x * metric[static_cast<std::size_t>(j)]));
  }
  out.norm_before = out.contracted_before;
  const OperatorExpr moved_ket = conjugate(ket, m);
  const OperatorExpr moved_bra = conjugate(bra, m.inverse().conj_transpose());
  for (int j = 0; j < n; ++j) {
    const Scalar cov = inner(basis[static_cast<std::size_t>(j)], moved_ket);
    const Scalar con = inner(moved_bra, basis[static_cast<std::size_t>(j)]);
    out.covariant.push_back(cov.constant());
    out.contravariant.push_back(con.constant());
    out.contracted_after += con.constant() * cov.constant();
    out.norm_after += Cyclotomic(metric[static_cast<std::size_t>(j)]) * cov.constant() * cov.constant();
  }
  return out;
}

}  // namespace hyperlattice
