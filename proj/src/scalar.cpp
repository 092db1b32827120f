#include "hyperlattice/scalar.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hyperlattice/errors.h"

namespace hyperlattice {

Scalar::Scalar(const Rational& q) {
  if (q != 0) terms_.emplace(Key{}, Cyclotomic(q));
}

Scalar::Scalar(long v) : Scalar(Rational(v)) {}

Scalar::Scalar(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(Key{}, c);
}

Scalar::Scalar(const Hyper& h) : window_(h.window()) {
  for (const auto& [e, c] : h.terms()) terms_.emplace(Key{e, 0}, Cyclotomic(c));
}

Scalar Scalar::sqrt_w_power(int w, int h) {
  if (w < 1) throw std::invalid_argument("window size must be positive");
  // W^(h/2) = W^floor(h/2) * sqrt(W)^(h mod 2)
  const int parity = ((h % 2) + 2) % 2;
  const int whole = (h - parity) / 2;
  Rational factor(1);
  const Rational base(w);
  for (int i = 0; i < std::abs(whole); ++i) factor *= base;
  if (whole < 0) factor = Rational(1) / factor;
  Scalar s;
  if (parity == 1 && w == 1) {
    s.terms_.emplace(Key{}, Cyclotomic(factor));
  } else {
    s.terms_.emplace(Key{0, parity}, Cyclotomic(factor));
    if (parity == 1) s.radicand_ = w;
  }
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{});
}

Cyclotomic Scalar::constant() const {
  if (!is_constant()) throw std::logic_error("scalar is not a constant: " + str());
  return terms_.empty() ? Cyclotomic() : terms_.begin()->second;
}

void Scalar::accumulate(const Key& key, const Cyclotomic& c) {
  if (c.is_zero() || key.exponent > window_.hi) return;
  if (key.exponent < window_.lo) {
    throw InfiniteOverflow("term d^" + std::to_string(key.exponent) + " is below the truncation floor " +
                           std::to_string(window_.lo));
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Scalar::tidy() {
  for (const auto& [key, c] : terms_) {
    if (key.parity == 1) return;
  }
  radicand_ = 0;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.radicand_ != 0) {
    if (radicand_ != 0 && radicand_ != other.radicand_) {
      throw std::invalid_argument("sqrt(W) factors with different W cannot be combined");
    }
    radicand_ = other.radicand_;
  }
  if (!(other.window_ == window_)) {
    window_ = intersect(window_, other.window_);
    if (window_.lo > 0 || window_.hi < 0) throw std::invalid_argument("incompatible truncation windows");
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.exponent < window_.lo) {
        throw InfiniteOverflow("term below the truncation floor after window intersection");
      }
      it = it->first.exponent > window_.hi ? terms_.erase(it) : std::next(it);
    }
  }
  for (const auto& [key, c] : other.terms_) accumulate(key, c);
  tidy();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar& Scalar::operator*=(const Cyclotomic& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    radicand_ = 0;
    return *this;
  }
  for (auto& [key, c] : terms_) c *= factor;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (b.is_constant() && !b.is_zero() && b.window_ == a.window_) {
    Scalar out = a;
    return out *= b.terms_.begin()->second;
  }
  if (a.is_constant() && !a.is_zero() && b.window_ == a.window_) {
    Scalar out = b;
    return out *= a.terms_.begin()->second;
  }
  Scalar out;
  out.window_ = intersect(a.window_, b.window_);
  if (out.window_.lo > 0 || out.window_.hi < 0) throw std::invalid_argument("incompatible truncation windows");
  if (a.radicand_ != 0 && b.radicand_ != 0 && a.radicand_ != b.radicand_) {
    throw std::invalid_argument("sqrt(W) factors with different W cannot be combined");
  }
  const int w = a.radicand_ != 0 ? a.radicand_ : b.radicand_;
  out.radicand_ = w;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Cyclotomic c = ca * cb;
      int parity = ka.parity + kb.parity;
      if (parity == 2) {
        c *= Rational(w);
        parity = 0;
      }
      out.accumulate(Scalar::Key{ka.exponent + kb.exponent, parity}, c);
    }
  }
  out.tidy();
  return out;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (auto& [key, c] : out.terms_) c = c.conj();
  return out;
}

Scalar Scalar::standard_part() const {
  Scalar out;
  out.window_ = window_;
  out.radicand_ = radicand_;
  for (const auto& [key, c] : terms_) {
    if (key.exponent < 0) throw NotFinite("standard part of an infinite scalar: " + str());
    if (key.exponent == 0) out.terms_.emplace(key, c);
  }
  out.tidy();
  return out;
}

Hyper Scalar::to_hyper() const {
  Hyper h(Rational(0), window_);
  for (const auto& [key, c] : terms_) {
    if (key.parity != 0 || !c.is_rational()) {
      throw std::domain_error("scalar has no Hyper value: " + str());
    }
    h += Hyper::monomial(c.rational(), key.exponent, window_);
  }
  return h;
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> sum(0.0, 0.0);
  for (const auto& [key, c] : terms_) {
    if (key.exponent != 0) throw std::domain_error("scalar depends on d: " + str());
    std::complex<double> v = c.to_complex();
    if (key.parity == 1) v *= std::sqrt(static_cast<double>(radicand_));
    sum += v;
  }
  return sum;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    bool negative = false;
    std::string coeff;
    const bool bare = key.exponent == 0 && key.parity == 0;
    if (c.is_rational()) {
      negative = c.rational() < 0;
      const Rational mag = abs(c.rational());
      if (bare || mag != 1) coeff = to_string(mag);
    } else {
      coeff = "(" + c.str() + ")";
    }
    std::string factors;
    const auto append = [&](const std::string& f) {
      if (!coeff.empty() || !factors.empty()) factors += '*';
      factors += f;
    };
    if (key.exponent != 0) append("d^" + std::to_string(key.exponent));
    if (key.parity == 1) append("W^(1/2)");
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff << factors;
  }
  return os.str();
}

}  // namespace hyperlattice
