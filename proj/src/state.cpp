#include "hyperlattice/state.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace hyperlattice {

OperatorExpr vacuum_ket(Statistics statistics, int dimension) {
  return OperatorExpr::constant(Scalar(1), statistics, dimension);
}

namespace {

/// Every word consists of creators sorted by compare_oscillators().
bool canonical_creators(const OperatorExpr& ket) {
  for (const auto& [w, c] : ket.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].dagger) return false;
      if (i > 0) {
        const auto order = compare_oscillators(w[i - 1], w[i]);
        if (order > 0 || (order == 0 && ket.statistics() == Statistics::fermi)) return false;
      }
    }
  }
  return true;
}

OperatorExpr annihilate(const Generator& a, const OperatorExpr& ket) {
  OperatorExpr out(ket.statistics(), ket.dimension());
  for (const auto& [w, c] : ket.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].same_oscillator(a)) continue;
      Word rest = w;
      rest.erase(rest.begin() + static_cast<long>(i));
      const bool odd = ket.statistics() == Statistics::fermi && i % 2 == 1;
      out.add_term(std::move(rest), odd ? -c : c);
    }
  }
  return out;
}

/// Bose words carry the product of factorials of their multiplicities.
long long word_norm(const Word& w, Statistics statistics) {
  if (statistics == Statistics::fermi) return 1;
  long long norm = 1;
  long long run = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    run = w[i].same_oscillator(w[i - 1]) ? run + 1 : 1;
    norm *= run;
  }
  return norm;
}

}  // namespace

OperatorExpr apply(const OperatorExpr& op, const OperatorExpr& ket) {
  OperatorExpr out(op.statistics(), op.dimension());
  if (!canonical_creators(ket)) {
    const OperatorExpr product = multiply(op, ket);
    for (const auto& [w, c] : product.terms()) {
      if (w.empty() || w.back().dagger) out.add_term(w, c);
    }
    return out;
  }
  op.check_compatible(ket);
  const OperatorExpr ordered = normal_order(op);
  std::map<Word, OperatorExpr, WordLess> reduced;
  for (const auto& [w, c] : ordered.terms()) {
    const auto split = std::find_if(w.begin(), w.end(), [](const Generator& g) { return !g.dagger; });
    Word annihilators(split, w.end());
    auto it = reduced.find(annihilators);
    if (it == reduced.end()) {
      OperatorExpr r = ket;
      for (auto a = annihilators.rbegin(); a != annihilators.rend() && !r.is_zero(); ++a) r = annihilate(*a, r);
      it = reduced.emplace(std::move(annihilators), std::move(r)).first;
    }
    if (it->second.is_zero()) continue;
    const OperatorExpr creators = OperatorExpr::word(Word(w.begin(), split), c, op.statistics(), op.dimension());
    out += normal_product(creators, it->second);
  }
  return out;
}

Scalar inner(const OperatorExpr& bra, const OperatorExpr& ket) {
  if (!canonical_creators(bra) || !canonical_creators(ket)) {
    return vacuum_expectation(multiply(bra.adjoint(), ket));
  }
  bra.check_compatible(ket);
  Scalar total;
  for (const auto& [w, c] : ket.terms()) {
    const auto it = bra.terms().find(w);
    if (it == bra.terms().end()) continue;
    total += it->second.conj() * c * Scalar(to_rational(word_norm(w, ket.statistics())));
  }
  return total;
}

Scalar matrix_element(const OperatorExpr& bra, const OperatorExpr& op, const OperatorExpr& ket) {
  return inner(bra, apply(op, ket));
}

bool annihilates_vacuum(const OperatorExpr& op) {
  const OperatorExpr ordered = normal_order(op);
  for (const auto& [w, c] : ordered.terms()) {
    if (w.empty() || w.back().dagger) return false;
  }
  return true;
}

bool annihilates_dual_vacuum(const OperatorExpr& op) {
  const OperatorExpr ordered = normal_order(op);
  for (const auto& [w, c] : ordered.terms()) {
    if (w.empty() || !w.front().dagger) return false;
  }
  return true;
}

OperatorExpr exp_series_on_vacuum(const OperatorExpr& op, int order) {
  OperatorExpr term = vacuum_ket(op.statistics(), op.dimension());
  OperatorExpr sum = term;
  for (int n = 1; n <= order; ++n) {
    term = apply(op, term) * Scalar(Rational(1, n));
    sum += term;
  }
  return sum;
}

namespace {

Generator oscillator(Generator g) {
  g.dagger = false;
  return g;
}

bool same_support(const std::vector<Generator>& support, const Generator& g) {
  return std::binary_search(support.begin(), support.end(), oscillator(g));
}

}  // namespace

ProductState::ProductState(Statistics statistics, int dimension) : statistics_(statistics), dimension_(dimension) {}

void ProductState::add_factor(OperatorExpr factor) {
  factor.check_compatible(OperatorExpr(statistics_, dimension_));
  std::vector<Generator> support;
  int particles = -1;
  for (const auto& [w, c] : factor.terms()) {
    if (particles >= 0 && particles != static_cast<int>(w.size())) {
      throw std::invalid_argument("product-state factors need a definite particle number");
    }
    particles = static_cast<int>(w.size());
    for (const auto& g : w) {
      if (!g.dagger) throw std::invalid_argument("product-state factors must be creator-only");
      support.push_back(oscillator(g));
    }
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (const auto& other : supports_) {
    for (const auto& g : support) {
      if (same_support(other, g)) throw std::invalid_argument("product-state factors must have disjoint supports");
    }
  }
  particle_numbers_.push_back(std::max(particles, 0));
  supports_.push_back(std::move(support));
  factors_.push_back(std::move(factor));
}

OperatorExpr ProductState::expand() const {
  OperatorExpr ket = vacuum_ket(statistics_, dimension_);
  for (const auto& f : factors_) ket = normal_product(ket, f);
  return ket;
}

Scalar ProductState::norm_squared() const {
  Scalar n(1);
  for (const auto& f : factors_) n = n * inner(f, f);
  return n;
}

std::vector<std::size_t> ProductState::touched(const Word& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < supports_.size(); ++i) {
    for (const auto& g : w) {
      if (same_support(supports_[i], g)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Scalar ProductState::expectation(const OperatorExpr& op) const { return transition(*this, op, *this); }

Scalar ProductState::transition(const ProductState& bra, const OperatorExpr& op, const ProductState& ket) {
  op.check_compatible(OperatorExpr(ket.statistics_, ket.dimension_));
  if (bra.supports_ != ket.supports_ || bra.particle_numbers_ != ket.particle_numbers_) {
    throw std::invalid_argument("transition needs product states with matching factor structure");
  }
  // Group words by the set of factors they touch.
  std::map<std::vector<std::size_t>, OperatorExpr> groups;
  for (const auto& [w, c] : op.terms()) {
    const auto creators = std::count_if(w.begin(), w.end(), [](const Generator& g) { return g.dagger; });
    if (2 * creators != static_cast<long>(w.size())) continue;
    auto key = ket.touched(w);
    auto it = groups.try_emplace(std::move(key), ket.statistics_, ket.dimension_).first;
    it->second.add_term(w, c);
  }
  std::vector<std::optional<Scalar>> overlaps(ket.factors_.size());
  Scalar total;
  for (const auto& [key, part] : groups) {
    OperatorExpr local_bra = vacuum_ket(ket.statistics_, ket.dimension_);
    OperatorExpr local_ket = local_bra;
    Scalar rest(1);
    for (std::size_t i = 0; i < ket.factors_.size(); ++i) {
      if (std::binary_search(key.begin(), key.end(), i)) {
        local_bra = normal_product(local_bra, bra.factors_[i]);
        local_ket = normal_product(local_ket, ket.factors_[i]);
      } else {
        if (!overlaps[i]) overlaps[i] = inner(bra.factors_[i], ket.factors_[i]);
        rest = rest * *overlaps[i];
      }
    }
    total += matrix_element(local_bra, part, local_ket) * rest;
  }
  return total;
}

}  // namespace hyperlattice
