#include "hyperlattice/operator_expr.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "hyperlattice/errors.h"

namespace hyperlattice {

std::string_view to_string(Statistics s) { return s == Statistics::bose ? "bose" : "fermi"; }

std::strong_ordering compare_oscillators(const Generator& a, const Generator& b) {
  if (auto c = a.component <=> b.component; c != 0) return c;
  if (auto c = a.site <=> b.site; c != 0) return c;
  return a.mode <=> b.mode;
}

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
  if (auto c = compare_oscillators(a, b); c != 0) return c;
  return a.dagger <=> b.dagger;
}

std::string Generator::str(Statistics statistics) const {
  std::ostringstream os;
  os << (statistics == Statistics::bose ? "A" : "C") << (dagger ? "d" : "") << '[' << component << "]("
     << to_string(site);
  if (mode) os << "; " << *mode;
  os << ')';
  return os.str();
}

Generator creator(int component, Point site) { return Generator{component, std::move(site), std::nullopt, true}; }

Generator annihilator(int component, Point site) {
  return Generator{component, std::move(site), std::nullopt, false};
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

OperatorExpr::OperatorExpr(Statistics statistics, int dimension)
    : statistics_(statistics), dimension_(dimension) {
  if (dimension < 1) throw DimensionError("operator dimension must be at least 1");
}

OperatorExpr OperatorExpr::constant(const Scalar& c, Statistics statistics, int dimension) {
  OperatorExpr x(statistics, dimension);
  x.add_term({}, c);
  return x;
}

OperatorExpr OperatorExpr::word(Word w, const Scalar& c, Statistics statistics, int dimension) {
  OperatorExpr x(statistics, dimension);
  x.add_term(std::move(w), c);
  return x;
}

OperatorExpr OperatorExpr::generator(const Generator& g, Statistics statistics, int dimension) {
  return word(Word{g}, Scalar(1), statistics, dimension);
}

void OperatorExpr::check_generator(const Generator& g) const {
  if (g.component < 1 || g.component > dimension_) {
    throw DimensionError("component " + std::to_string(g.component) + " outside 1.." + std::to_string(dimension_));
  }
  if (static_cast<int>(g.site.size()) != dimension_) {
    throw DimensionError("generator site has " + std::to_string(g.site.size()) + " coordinates, expected " +
                         std::to_string(dimension_));
  }
}

Scalar OperatorExpr::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void OperatorExpr::add_term(Word w, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& g : w) check_generator(g);
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OperatorExpr::check_compatible(const OperatorExpr& other) const {
  if (statistics_ != other.statistics_) {
    throw StatisticsMismatch("cannot combine " + std::string(to_string(statistics_)) + " and " +
                             std::string(to_string(other.statistics_)) + " expressions");
  }
  if (dimension_ != other.dimension_) {
    throw DimensionError("cannot combine expressions of dimension " + std::to_string(dimension_) + " and " +
                         std::to_string(other.dimension_));
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& other) { return *this += -other; }

OperatorExpr& OperatorExpr::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

OperatorExpr OperatorExpr::adjoint() const {
  OperatorExpr out(statistics_, dimension_);
  for (const auto& [w, c] : terms_) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) g.dagger = !g.dagger;
    out.add_term(std::move(r), c.conj());
  }
  return out;
}

namespace {

/// Strict order of the normal form: creators first, then oscillator order.
bool normal_less(const Generator& a, const Generator& b) {
  if (a.dagger != b.dagger) return a.dagger;
  return compare_oscillators(a, b) < 0;
}

bool has_repeated_fermion(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return true;
  }
  return false;
}

using Multiplicities = std::map<Word, long long, WordLess>;

/// Normal form of a single word as an integer combination of normal words.
Multiplicities normal_order_word(const Word& word, Statistics statistics) {
  const bool fermi = statistics == Statistics::fermi;
  Multiplicities out;
  std::vector<std::pair<Word, long long>> stack;
  stack.emplace_back(word, 1);
  while (!stack.empty()) {
    auto [w, m] = std::move(stack.back());
    stack.pop_back();
    if (fermi && has_repeated_fermion(w)) continue;

    std::size_t i = 0;
    while (i + 1 < w.size() && !normal_less(w[i + 1], w[i])) ++i;
    if (i + 1 >= w.size()) {
      auto [it, inserted] = out.try_emplace(std::move(w), m);
      if (!inserted) {
        it->second += m;
        if (it->second == 0) out.erase(it);
      }
      continue;
    }

    // w[i+1] < w[i]: exchange, plus a contraction for an annihilator
    // standing left of its own creator.
    const bool contract = !w[i].dagger && w[i + 1].dagger && w[i].same_oscillator(w[i + 1]);
    if (contract) {
      Word reduced;
      reduced.reserve(w.size() - 2);
      reduced.insert(reduced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      reduced.insert(reduced.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      stack.emplace_back(std::move(reduced), m);
    }
    std::swap(w[i], w[i + 1]);
    stack.emplace_back(std::move(w), fermi ? -m : m);
  }
  return out;
}

/// Sorts into normal order with exchange signs only; 0 for a repeated fermion.
int normal_sort(Word& w, Statistics statistics) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && normal_less(w[j], w[j - 1]); --j) {
      std::swap(w[j], w[j - 1]);
      if (statistics == Statistics::fermi) sign = -sign;
    }
  }
  if (statistics == Statistics::fermi && has_repeated_fermion(w)) return 0;
  return sign;
}

}  // namespace

bool OperatorExpr::is_normal_ordered() const {
  for (const auto& [w, c] : terms_) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (normal_less(w[i + 1], w[i])) return false;
      if (statistics_ == Statistics::fermi && w[i] == w[i + 1]) return false;
    }
  }
  return true;
}

std::size_t OperatorExpr::max_word_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string coeff = c.str();
    if (c.terms().size() > 1) coeff = "(" + coeff + ")";
    bool negative = false;
    if (!coeff.empty() && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    std::string body;
    if (w.empty() || coeff != "1") body = coeff;
    for (const auto& g : w) {
      if (!body.empty()) body += '*';
      body += g.str(statistics_);
    }
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

OperatorExpr concat(const OperatorExpr& x, const OperatorExpr& y) {
  x.check_compatible(y);
  OperatorExpr out(x.statistics(), x.dimension());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      Word w;
      w.reserve(wx.size() + wy.size());
      w.insert(w.end(), wx.begin(), wx.end());
      w.insert(w.end(), wy.begin(), wy.end());
      out.add_term(std::move(w), cx * cy);
    }
  }
  return out;
}

OperatorExpr normal_order(const OperatorExpr& x) {
  OperatorExpr out(x.statistics(), x.dimension());
  for (const auto& [w, c] : x.terms()) {
    for (auto& [nw, m] : normal_order_word(w, x.statistics())) {
      Scalar term = c;
      term *= Cyclotomic(m);
      out.add_term(nw, term);
    }
  }
  return out;
}

OperatorExpr multiply(const OperatorExpr& x, const OperatorExpr& y) {
  x.check_compatible(y);
  OperatorExpr out(x.statistics(), x.dimension());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      Word w;
      w.reserve(wx.size() + wy.size());
      w.insert(w.end(), wx.begin(), wx.end());
      w.insert(w.end(), wy.begin(), wy.end());
      const Scalar c = cx * cy;
      for (auto& [nw, m] : normal_order_word(w, x.statistics())) {
        Scalar term = c;
        term *= Cyclotomic(m);
        out.add_term(nw, term);
      }
    }
  }
  return out;
}

OperatorExpr normal_product(const OperatorExpr& x, const OperatorExpr& y) {
  x.check_compatible(y);
  OperatorExpr out(x.statistics(), x.dimension());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      Word w;
      w.reserve(wx.size() + wy.size());
      w.insert(w.end(), wx.begin(), wx.end());
      w.insert(w.end(), wy.begin(), wy.end());
      const int sign = normal_sort(w, x.statistics());
      if (sign == 0) continue;
      Scalar c = cx * cy;
      if (sign < 0) c = -c;
      out.add_term(std::move(w), c);
    }
  }
  return out;
}

Scalar vacuum_expectation(const OperatorExpr& x) {
  Scalar out;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) {
      out += c;
      continue;
    }
    // Words that start with a creator or end with an annihilator vanish.
    if (w.front().dagger || !w.back().dagger) continue;
    const auto nf = normal_order_word(w, x.statistics());
    if (const auto it = nf.find(Word{}); it != nf.end()) {
      Scalar term = c;
      term *= Cyclotomic(it->second);
      out += term;
    }
  }
  return out;
}

namespace {

bool disjoint(const Word& a, const Word& b) {
  for (const auto& g : a) {
    for (const auto& h : b) {
      if (g.same_oscillator(h)) return false;
    }
  }
  return true;
}

/// Sum over monomial pairs of uv + sign(u, v) vu. Pairs on disjoint
/// oscillators satisfy vu = +-uv exactly and are folded without reordering.
template <class Sign>
OperatorExpr bracket_sum(const OperatorExpr& x, const OperatorExpr& y, Sign sign) {
  x.check_compatible(y);
  const bool fermi = x.statistics() == Statistics::fermi;
  const auto monomials = [](const OperatorExpr& e) {
    std::vector<OperatorExpr> out;
    out.reserve(e.size());
    for (const auto& [w, c] : e.terms()) out.push_back(OperatorExpr::word(w, c, e.statistics(), e.dimension()));
    return out;
  };
  const auto my = monomials(y);
  OperatorExpr out(x.statistics(), x.dimension());
  for (const auto& [wx, cx] : x.terms()) {
    std::optional<OperatorExpr> mx;
    std::size_t j = 0;
    for (auto it = y.terms().begin(); it != y.terms().end(); ++it, ++j) {
      const Word& wy = it->first;
      const int s = sign(wx, wy);
      if (disjoint(wx, wy)) {
        const int exchange = fermi && wx.size() % 2 == 1 && wy.size() % 2 == 1 ? -1 : 1;
        const int factor = 1 + s * exchange;
        if (factor == 0) continue;
        if (!mx) mx = OperatorExpr::word(wx, cx, x.statistics(), x.dimension());
        out += multiply(*mx, my[j]) * Scalar(factor);
        continue;
      }
      if (!mx) mx = OperatorExpr::word(wx, cx, x.statistics(), x.dimension());
      out += multiply(*mx, my[j]);
      if (s > 0) {
        out += multiply(my[j], *mx);
      } else {
        out -= multiply(my[j], *mx);
      }
    }
  }
  return out;
}

}  // namespace

OperatorExpr commutator(const OperatorExpr& x, const OperatorExpr& y, bool graded) {
  const bool fermi = x.statistics() == Statistics::fermi;
  return bracket_sum(x, y, [&](const Word& a, const Word& b) {
    return graded && fermi && a.size() % 2 == 1 && b.size() % 2 == 1 ? 1 : -1;
  });
}

OperatorExpr anticommutator(const OperatorExpr& x, const OperatorExpr& y) {
  return bracket_sum(x, y, [](const Word&, const Word&) { return 1; });
}

}  // namespace hyperlattice
