#include "hyperlattice/hyper.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hyperlattice/errors.h"

namespace hyperlattice {

Window intersect(const Window& a, const Window& b) {
  return Window{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

std::string_view to_string(Magnitude m) {
  switch (m) {
    case Magnitude::zero: return "Zero";
    case Magnitude::infinitesimal: return "Infinitesimal";
    case Magnitude::finite_nonzero_st: return "FiniteNonzeroSt";
    case Magnitude::infinite: return "Infinite";
  }
  return "?";
}

Hyper::Hyper(const Rational& standard, Window window) : window_(window) {
  if (!window_.contains(0)) throw std::invalid_argument("truncation window must contain exponent 0");
  if (standard != 0) {
    terms_.emplace(0, standard).first->second.canonicalize();
  }
}

Hyper Hyper::monomial(const Rational& coefficient, int exponent, Window window) {
  Hyper h(Rational(0), window);
  if (exponent < window.lo) {
    throw InfiniteOverflow("d^" + std::to_string(exponent) + " is below the truncation floor " +
                           std::to_string(window.lo));
  }
  if (coefficient != 0 && exponent <= window.hi) {
    h.terms_.emplace(exponent, coefficient).first->second.canonicalize();
  }
  return h;
}

Hyper Hyper::delta(int exponent, Window window) { return monomial(Rational(1), exponent, window); }

Rational Hyper::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Hyper::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero has no leading exponent");
  return terms_.begin()->first;
}

void Hyper::accumulate(int exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (exponent > window_.hi) return;
  if (exponent < window_.lo) {
    throw InfiniteOverflow("term d^" + std::to_string(exponent) + " is below the truncation floor " +
                           std::to_string(window_.lo));
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void Hyper::check_window() const {
  if (window_.lo > 0 || window_.hi < 0) {
    throw std::invalid_argument("incompatible truncation windows");
  }
  if (!terms_.empty() && terms_.begin()->first < window_.lo) {
    throw InfiniteOverflow("term d^" + std::to_string(terms_.begin()->first) +
                           " is below the truncation floor " + std::to_string(window_.lo));
  }
}

Hyper& Hyper::operator+=(const Hyper& other) {
  if (!(other.window_ == window_)) {
    window_ = intersect(window_, other.window_);
    check_window();
    while (!terms_.empty() && terms_.rbegin()->first > window_.hi) terms_.erase(std::prev(terms_.end()));
  }
  for (const auto& [e, c] : other.terms_) accumulate(e, c);
  return *this;
}

Hyper& Hyper::operator-=(const Hyper& other) { return *this += -other; }

Hyper& Hyper::operator*=(const Hyper& other) { return *this = *this * other; }

Hyper& Hyper::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

Hyper operator*(const Hyper& a, const Hyper& b) {
  Hyper out(Rational(0), intersect(a.window_, b.window_));
  out.check_window();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.accumulate(ea + eb, ca * cb);
  }
  return out;
}

Hyper operator-(const Hyper& a) {
  Hyper out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const Hyper& a, const Hyper& b) { return compare(a, b); }

Hyper Hyper::pow(unsigned exponent) const {
  Hyper result(Rational(1), window_);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string Hyper::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << to_string(mag);
    if (e != 0) os << "*d^" << e;
    first = false;
  }
  return os.str();
}

namespace {

class HyperReader {
 public:
  explicit HyperReader(std::string_view text) : text_(text) {}

  Hyper read(Window window) {
    Hyper result(Rational(0), window);
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = take() == '-';
    }
    result += term(negative, window);
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char sign = take();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      result += term(sign == '-', window);
    }
    return result;
  }

 private:
  Hyper term(bool negative, Window window) {
    skip_space();
    Rational coefficient(1);
    bool has_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = rational();
      has_coefficient = true;
      skip_space();
      if (peek() == '*') {
        take();
        skip_space();
      } else {
        return Hyper::monomial(negative ? Rational(-coefficient) : coefficient, 0, window);
      }
    }
    if (peek() != 'd') fail(has_coefficient ? "expected 'd' after '*'" : "expected a term");
    take();
    int exponent = 1;
    skip_space();
    if (peek() == '^') {
      take();
      skip_space();
      const bool paren = peek() == '(';
      if (paren) take();
      exponent = integer();
      if (paren) {
        skip_space();
        if (take() != ')') fail("expected ')'");
      }
    }
    return Hyper::monomial(negative ? Rational(-coefficient) : coefficient, exponent, window);
  }

  Rational rational() {
    Integer num = natural();
    if (peek() == '/') {
      take();
      Integer den = natural();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  int integer() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    const Integer n = natural();
    if (!n.fits_sint_p()) fail("exponent out of range");
    return static_cast<int>(negative ? -n.get_si() : n.get_si());
  }

  Integer natural() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) take();
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) take();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Hyper Hyper::parse(std::string_view text, Window window) { return HyperReader(text).read(window); }

Hyper add(const Hyper& a, const Hyper& b) { return a + b; }
Hyper mul(const Hyper& a, const Hyper& b) { return a * b; }
Hyper neg(const Hyper& a) { return -a; }

Rational standard_part(const Hyper& a) {
  if (!a.is_zero() && a.leading_exponent() < 0) {
    throw NotFinite("standard part of an infinite value: " + a.str());
  }
  return a.coefficient(0);
}

Magnitude classify(const Hyper& a) {
  if (a.is_zero()) return Magnitude::zero;
  const int lead = a.leading_exponent();
  if (lead < 0) return Magnitude::infinite;
  if (lead == 0) return Magnitude::finite_nonzero_st;
  return Magnitude::infinitesimal;
}

std::strong_ordering compare(const Hyper& a, const Hyper& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      return ia->second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (ia == ea || ib->first < ia->first) {
      return ib->second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ia->second != ib->second) return hyperlattice::compare(ia->second, ib->second);
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

bool monad_equiv(const Hyper& a, const Hyper& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (;;) {
    const bool a_done = ia == a.terms().end() || ia->first > 0;
    const bool b_done = ib == b.terms().end() || ib->first > 0;
    if (a_done && b_done) return true;
    if (a_done || b_done || ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

ScaleTower::ScaleTower(int depth, Window window) : depth_(depth), window_(window) {
  if (depth < 1) throw std::invalid_argument("scale depth must be at least 1");
  if (depth > window.hi) {
    throw std::invalid_argument("scale depth " + std::to_string(depth) +
                                " exceeds the truncation order " + std::to_string(window.hi));
  }
  if (window.lo > -1) throw std::invalid_argument("truncation floor must admit d^-1");
}

Hyper ScaleTower::eps(int scale) const {
  if (scale < 0 || scale >= depth_) {
    throw std::out_of_range("scale " + std::to_string(scale) + " outside 0.." + std::to_string(depth_ - 1));
  }
  return Hyper::delta(depth_ - scale, window_);
}

Hyper ScaleTower::lambda() const { return Hyper::delta(-1, window_); }

Hyper ScaleTower::lambda_inverse() const { return Hyper::delta(1, window_); }

}  // namespace hyperlattice
