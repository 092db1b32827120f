#include "hyperlattice/fields.h"

#include <cstdlib>

#include "hyperlattice/errors.h"

namespace hyperlattice {

MonadField phi(std::vector<Rational> center, int component, std::vector<int> modes) {
  return MonadField{std::move(center), component, std::move(modes), false, 0};
}

MonadField phid(std::vector<Rational> center, int component, std::vector<int> modes) {
  return MonadField{std::move(center), component, std::move(modes), true, 0};
}

namespace {

void check_field(const MonadField& f, const LatticeSpec& spec) {
  if (f.center.empty()) throw DimensionError("a field needs at least one axis");
  if (!f.modes.empty() && f.modes.size() != f.center.size()) {
    throw DimensionError("a field needs one mode per axis");
  }
  for (int k : f.modes) {
    if (std::abs(k) > spec.half_width) {
      throw OutOfWindow("mode " + std::to_string(k) + " outside -" + std::to_string(spec.half_width) + ".." +
                        std::to_string(spec.half_width));
    }
  }
}

}  // namespace

OperatorExpr expand(const MonadField& f, const LatticeSpec& spec, Statistics statistics) {
  check_field(f, spec);
  const int n = f.axes();
  const int w = spec.size();
  const Scalar weight = Scalar::sqrt_w_power(w, -n);
  const Cyclotomic offset = Cyclotomic::root_of_unity(f.dagger ? Rational(-f.theta_turn) : f.theta_turn);
  OperatorExpr out(statistics, n);
  for (const auto& l : window_offsets(spec.half_width, n)) {
    long long exponent = 0;
    for (int s = 0; s < n; ++s) exponent += l[static_cast<std::size_t>(s)] * f.mode(s);
    if (f.dagger) exponent = -exponent;
    Scalar c = weight;
    c *= offset * Cyclotomic::zeta(w, exponent);
    out.add_term(Word{Generator{f.component, make_point(f.center, l, spec.depth), std::nullopt, f.dagger}}, c);
  }
  return out;
}

Scalar field_commutator(const MonadField& f, const MonadField& g, const LatticeSpec& spec, Statistics statistics) {
  check_field(f, spec);
  check_field(g, spec);
  if (f.axes() != g.axes()) throw DimensionError("fields of different dimension");
  if (f.dagger == g.dagger) return Scalar();
  const MonadField& ann = f.dagger ? g : f;
  const MonadField& cre = f.dagger ? f : g;
  if (ann.component != cre.component || ann.center != cre.center) return Scalar();
  const int w = spec.size();
  Cyclotomic value = Cyclotomic::root_of_unity(ann.theta_turn - cre.theta_turn);
  for (int s = 0; s < ann.axes(); ++s) {
    const PhaseSum sum{w, static_cast<long long>(ann.mode(s)) - cre.mode(s)};
    if (sum.value() == 0) return Scalar();
    value *= Rational(to_rational(sum.value()) / w);
  }
  // [cre, ann] = -[ann, cre]; {cre, ann} = {ann, cre}.
  if (f.dagger && statistics == Statistics::bose) value = -value;
  return Scalar(value);
}

OperatorExpr creating_sum(const std::vector<Rational>& center, int component, const LatticeSpec& spec,
                          Statistics statistics) {
  const int n = static_cast<int>(center.size());
  OperatorExpr out(statistics, n);
  for (const auto& l : window_offsets(spec.half_width, n)) {
    out.add_term(Word{Generator{component, make_point(center, l, spec.depth), std::nullopt, true}}, Scalar(1));
  }
  return out;
}

}  // namespace hyperlattice
