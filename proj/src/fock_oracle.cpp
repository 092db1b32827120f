#include "hyperlattice/fock_oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hyperlattice/errors.h"

namespace hyperlattice {

namespace {

using Matrix = Eigen::MatrixXcd;

/// Single-oscillator lowering operator on occupations 0..levels-1.
Eigen::MatrixXd lowering(int levels, Statistics statistics) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = statistics == Statistics::bose ? std::sqrt(double(n)) : 1.0;
  return a;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

OracleResult fock_oracle(const OperatorExpr& x, int cutoff, std::size_t max_dim) {
  const bool fermi = x.statistics() == Statistics::fermi;
  std::vector<Generator> modes;
  for (const auto& [w, c] : x.terms()) {
    for (Generator g : w) {
      g.dagger = false;
      modes.push_back(g);
    }
  }
  std::sort(modes.begin(), modes.end(), [](const Generator& a, const Generator& b) {
    return compare_oscillators(a, b) < 0;
  });
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());

  if (modes.size() > 4) throw TooLarge("the Fock oracle handles at most 4 oscillators");
  const int levels = fermi ? 2 : cutoff;
  if (!fermi && (cutoff < 1 || cutoff > 6)) throw TooLarge("Bose cutoff must lie in 1..6");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < modes.size(); ++i) dim *= static_cast<std::size_t>(levels);
  if (dim > max_dim) throw TooLarge("Fock space dimension " + std::to_string(dim) + " exceeds " + std::to_string(max_dim));

  const Eigen::MatrixXd a = lowering(levels, x.statistics());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(levels, levels);
  Eigen::MatrixXd parity = id;
  if (fermi) parity(1, 1) = -1.0;

  // Mode i: parity string on modes before i, lowering on i, identity after.
  std::vector<Eigen::MatrixXd> lower;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
    for (std::size_t k = 0; k < modes.size(); ++k) m = kron(m, k < i ? parity : (k == i ? a : id));
    lower.push_back(std::move(m));
  }
  const auto index_of = [&](Generator g) {
    g.dagger = false;
    return static_cast<std::size_t>(std::lower_bound(modes.begin(), modes.end(), g,
                                                     [](const Generator& p, const Generator& q) {
                                                       return compare_oscillators(p, q) < 0;
                                                     }) -
                                    modes.begin());
  };

  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  vacuum(0) = 1.0;
  std::complex<double> total = 0.0;
  for (const auto& [w, c] : x.terms()) {
    Eigen::VectorXcd v = vacuum;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& m = lower[index_of(*it)];
      v = it->dagger ? Eigen::VectorXcd(m.transpose() * v) : Eigen::VectorXcd(m * v);
    }
    total += c.to_complex() * v(0);
  }
  return OracleResult{total, dim, modes.size()};
}

}  // namespace hyperlattice
