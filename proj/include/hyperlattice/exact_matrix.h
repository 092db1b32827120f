#ifndef HYPERLATTICE_EXACT_MATRIX_H
#define HYPERLATTICE_EXACT_MATRIX_H

#include <string>
#include <vector>

#include "hyperlattice/cyclotomic.h"

namespace hyperlattice {

/// Small dense square matrix over Q(z_n), indexed from 0.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

  static ExactMatrix identity(int n);
  static ExactMatrix diagonal(const std::vector<Cyclotomic>& d);
  /// Matrix unit E_jk (0-based).
  static ExactMatrix unit(int n, int j, int k);

  int size() const { return n_; }
  Cyclotomic& operator()(int j, int k) { return entries_[static_cast<std::size_t>(j * n_ + k)]; }
  const Cyclotomic& operator()(int j, int k) const { return entries_[static_cast<std::size_t>(j * n_ + k)]; }

  bool is_zero() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const Cyclotomic& c);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Cyclotomic& c, ExactMatrix a) { return a *= c; }
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  Cyclotomic trace() const;
  Cyclotomic determinant() const;
  /// std::domain_error when singular.
  ExactMatrix inverse() const;

  /// "[[a, b], [c, d]]".
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Cyclotomic> entries_;
};

/// ab - ba.
ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b);

/// Coordinates of `target` in the span of `basis`, or empty when it lies
/// outside the span. Exact Gaussian elimination.
std::vector<Cyclotomic> decompose(const std::vector<ExactMatrix>& basis, const ExactMatrix& target, bool* ok);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_EXACT_MATRIX_H
