#ifndef HYPERLATTICE_FOCK_ORACLE_H
#define HYPERLATTICE_FOCK_ORACLE_H

#include <complex>
#include <cstddef>
#include <vector>

#include "hyperlattice/operator_expr.h"

namespace hyperlattice {

struct OracleResult {
  std::complex<double> vacuum_element;
  std::size_t dimension = 0;
  std::size_t modes = 0;
};

/// Numerical vacuum matrix element <0|x|0> on a truncated Fock space built
/// from dense generator matrices: occupations 0..cutoff-1 per oscillator
/// (Bose, cutoff <= 6), or 0..1 with Jordan-Wigner strings in
/// compare_oscillators() order (Fermi, cutoff ignored). At most four
/// distinct oscillators; TooLarge when the space exceeds max_dim.
OracleResult fock_oracle(const OperatorExpr& x, int cutoff, std::size_t max_dim = 4096);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_FOCK_ORACLE_H
