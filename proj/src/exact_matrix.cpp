#include "hyperlattice/exact_matrix.h"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hyperlattice {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows)
    : ExactMatrix(static_cast<int>(rows.size())) {
  int j = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix rows must be square");
    int k = 0;
    for (const auto& v : row) (*this)(j, k++) = v;
    ++j;
  }
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int j = 0; j < n; ++j) m(j, j) = Cyclotomic(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Cyclotomic>& d) {
  ExactMatrix m(static_cast<int>(d.size()));
  for (int j = 0; j < m.n_; ++j) m(j, j) = d[static_cast<std::size_t>(j)];
  return m;
}

ExactMatrix ExactMatrix::unit(int n, int j, int k) {
  ExactMatrix m(n);
  m(j, k) = Cyclotomic(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Cyclotomic& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  ExactMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(n_);
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) out(k, j) = (*this)(j, k);
  }
  return out;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix out(n_);
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) out(k, j) = (*this)(j, k).conj();
  }
  return out;
}

Cyclotomic ExactMatrix::trace() const {
  Cyclotomic t;
  for (int j = 0; j < n_; ++j) t += (*this)(j, j);
  return t;
}

Cyclotomic ExactMatrix::determinant() const {
  ExactMatrix m = *this;
  Cyclotomic det(1);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return Cyclotomic();
    if (pivot != col) {
      for (int k = 0; k < n_; ++k) std::swap(m(pivot, k), m(col, k));
      det = -det;
    }
    det *= m(col, col);
    const Cyclotomic inv = m(col, col).inverse();
    for (int r = col + 1; r < n_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Cyclotomic f = m(r, col) * inv;
      for (int k = col; k < n_; ++k) m(r, k) -= f * m(col, k);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix m = *this;
  ExactMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (int k = 0; k < n_; ++k) {
        std::swap(m(pivot, k), m(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    }
    const Cyclotomic p = m(col, col).inverse();
    for (int k = 0; k < n_; ++k) {
      m(col, k) *= p;
      inv(col, k) *= p;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Cyclotomic f = m(r, col);
      for (int k = 0; k < n_; ++k) {
        m(r, k) -= f * m(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < n_; ++j) {
    os << (j ? ", [" : "[");
    for (int k = 0; k < n_; ++k) os << (k ? ", " : "") << (*this)(j, k).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

std::vector<Cyclotomic> decompose(const std::vector<ExactMatrix>& basis, const ExactMatrix& target, bool* ok) {
  const std::size_t unknowns = basis.size();
  const int n = target.size();
  const std::size_t eqs = static_cast<std::size_t>(n) * n;
  // Augmented system: column c holds the entries of basis[c].
  std::vector<std::vector<Cyclotomic>> rows(eqs, std::vector<Cyclotomic>(unknowns + 1));
  for (std::size_t e = 0; e < eqs; ++e) {
    const int j = static_cast<int>(e) / n;
    const int k = static_cast<int>(e) % n;
    for (std::size_t c = 0; c < unknowns; ++c) rows[e][c] = basis[c](j, k);
    rows[e][unknowns] = target(j, k);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < eqs; ++c) {
    std::size_t p = r;
    while (p < eqs && rows[p][c].is_zero()) ++p;
    if (p == eqs) continue;
    std::swap(rows[p], rows[r]);
    const Cyclotomic inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t q = 0; q < eqs; ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      const Cyclotomic f = rows[q][c];
      for (std::size_t k = c; k <= unknowns; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < eqs; ++q) {
    if (!rows[q][unknowns].is_zero()) {
      if (ok) *ok = false;
      return {};
    }
  }
  std::vector<Cyclotomic> x(unknowns);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rows[i][unknowns];
  if (ok) *ok = true;
  return x;
}

}  // namespace hyperlattice
