#include "hyperlattice/cyclotomic.h"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperlattice {

namespace {

constexpr int kMaxOrder = 4096;

std::vector<long long> compute_cyclotomic(int n) {
  // x^n - 1 divided by every Phi_d, d | n, d < n.
  std::vector<long long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<long long> quotient(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const long long c = poly[i];
      if (c == 0) continue;
      quotient[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

/// Folds exponents mod n and reduces modulo Phi_n.
std::vector<Rational> reduce(std::vector<Rational> poly, int n) {
  std::vector<Rational> folded(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] != 0) folded[i % static_cast<std::size_t>(n)] += poly[i];
  }
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    if (folded[i] == 0) continue;
    const Rational c = folded[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) folded[i - deg + j] -= c * static_cast<long>(phi[j]);
    }
  }
  folded.resize(deg);
  return folded;
}

int lcm_order(int a, int b) {
  const long long m = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (m > kMaxOrder) throw std::overflow_error("cyclotomic order exceeds " + std::to_string(kMaxOrder));
  return static_cast<int>(m);
}

}  // namespace

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  if (n < 1 || n > kMaxOrder) throw std::out_of_range("cyclotomic order out of range");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long long> poly = n == 1 ? std::vector<long long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(poly)).first->second;
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& turn) {
  Rational t = turn - Rational(Integer(turn.get_num() / turn.get_den()));  // truncate toward 0
  if (t < 0) t += 1;
  const Integer& den = t.get_den();
  if (!den.fits_sint_p() || den.get_si() > kMaxOrder) {
    throw std::overflow_error("root of unity order too large: " + to_string(turn));
  }
  return zeta(static_cast<int>(den.get_si()), t.get_num().get_si());
}

Cyclotomic Cyclotomic::zeta(int n, long long k) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  int order = n;
  Rational sign(1);
  // Q(z_2m) = Q(z_m) for odd m: z_2m = -z_m^((m+1)/2).
  if (order % 4 == 2) {
    const int m = order / 2;
    if (k % 2 != 0) sign = -1;
    k = (k * ((m + 1) / 2)) % m;
    order = m;
  }
  std::vector<Rational> poly(static_cast<std::size_t>(order));
  poly[static_cast<std::size_t>(k)] = sign;
  Cyclotomic c(order, reduce(std::move(poly), order));
  c.normalize();
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

const Rational& Cyclotomic::rational() const {
  if (order_ != 1) throw std::logic_error("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

std::vector<Rational> Cyclotomic::lifted(int m) const {
  if (m == order_) return coeffs_;
  const int step = m / order_;
  std::vector<Rational> poly(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) poly[(i * static_cast<std::size_t>(step)) % static_cast<std::size_t>(m)] += coeffs_[i];
  }
  return reduce(std::move(poly), m);
}

void Cyclotomic::normalize() {
  if (order_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  coeffs_.resize(1);
  order_ = 1;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (order_ == other.order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  } else {
    const int m = lcm_order(order_, other.order_);
    coeffs_ = lifted(m);
    const auto rhs = other.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs[i];
    order_ = m;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  Cyclotomic negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  if (factor == 0) {
    coeffs_.assign(1, Rational(0));
    order_ = 1;
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.order_ == 1) return *this *= other.coeffs_[0];
  if (order_ == 1) {
    const Rational factor = coeffs_[0];
    *this = other;
    return *this *= factor;
  }
  const int m = lcm_order(order_, other.order_);
  const auto lhs = lifted(m);
  const auto rhs = other.lifted(m);
  std::vector<Rational> product(lhs.size() + rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (rhs[j] != 0) product[i + j] += lhs[i] * rhs[j];
    }
  }
  coeffs_ = reduce(std::move(product), m);
  order_ = m;
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int m = lcm_order(a.order_, b.order_);
  return a.lifted(m) == b.lifted(m);
}

Cyclotomic Cyclotomic::galois(long long a) const {
  if (order_ == 1) return *this;
  const long long n = order_;
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<Rational> poly(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) poly[static_cast<std::size_t>((static_cast<long long>(i) * a) % n)] += coeffs_[i];
  }
  Cyclotomic c(order_, reduce(std::move(poly), order_));
  c.normalize();
  return c;
}

Cyclotomic Cyclotomic::conj() const { return galois(order_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // x^-1 = prod_{a != 1} sigma_a(x) / N(x), N(x) = prod_a sigma_a(x) rational.
  Cyclotomic others(Rational(1));
  for (long long a = 2; a < order_; ++a) {
    if (std::gcd(a, static_cast<long long>(order_)) == 1) others *= galois(a);
  }
  const Cyclotomic norm = others * *this;
  if (!norm.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
  others *= Rational(1) / norm.rational();
  return others;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<long double> sum(0.0L, 0.0L);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) / order_;
    sum += static_cast<long double>(coeffs_[i].get_d()) * std::polar(1.0L, angle);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::string Cyclotomic::str() const {
  if (order_ == 1) return to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (i == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << '*';
      os << "z[" << order_ << "]^" << i;
    }
  }
  return os.str();
}

}  // namespace hyperlattice
