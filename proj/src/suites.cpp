#include "hyperlattice/suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <random>

#include "hyperlattice/config_space.h"
#include "hyperlattice/dsl.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/fields.h"
#include "hyperlattice/fock_oracle.h"
#include "hyperlattice/symmetry.h"

namespace hyperlattice {

namespace {

using json = nlohmann::ordered_json;

constexpr Statistics kBoth[] = {Statistics::bose, Statistics::fermi};

std::string flag(bool b) { return b ? "true" : "false"; }

std::string st_name(Statistics st) { return std::string(to_string(st)); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

/// Counts passing cases; keeps the first failure as witness.
class Tally {
 public:
  void add(bool pass, const std::function<std::string()>& witness) {
    ++total_;
    if (pass) {
      ++ok_;
    } else if (first_.empty()) {
      first_ = witness();
    }
  }

  Outcome outcome() const {
    const std::string n = std::to_string(total_);
    return Outcome{n + "/" + n, std::to_string(ok_) + "/" + n, ok_ == total_ && total_ > 0,
                   total_ == 0 ? "no cases ran" : first_};
  }

 private:
  std::size_t total_ = 0;
  std::size_t ok_ = 0;
  std::string first_;
};

std::string show(const TransitivityResult& t) {
  return "chain_ok=" + flag(t.chain_ok) + " endpoints_ok=" + flag(t.endpoints_ok);
}

Rational random_rational(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> p(-num, num);
  std::uniform_int_distribution<long> q(1, den);
  return ratio(p(rng), q(rng));
}

std::vector<int> metric_of(const Config& c, int n) {
  if (c.metric == "euclid") return std::vector<int>(static_cast<std::size_t>(n), 1);
  return minkowski(n);
}

OperatorExpr bracket_of(const OperatorExpr& x, const OperatorExpr& y, Statistics st) {
  return st == Statistics::bose ? commutator(x, y) : anticommutator(x, y);
}

OperatorExpr constant(long v, Statistics st, int n) { return OperatorExpr::constant(Scalar(v), st, n); }

/// One field quantum of component 1 at the origin and of component n at a
/// neighbouring center; the U(1) charge at the origin is 1.
ProductState two_center_state(int n, const LatticeSpec& spec, Statistics st) {
  const Center origin(static_cast<std::size_t>(n), 0);
  Center next = origin;
  next[0] = 1;
  ProductState state(st, n);
  state.add_factor(expand(phid(origin, 1), spec, st));
  state.add_factor(expand(phid(next, n), spec, st));
  return state;
}

// ---------------------------------------------------------------- equivalence

Report equivalence(const Config&) {
  Report r;
  r.check("real_chain", "transitivity failure of the real error relation",
          {{"step", "1/100"}, {"error", "15/1000"}, {"length", 100}}, [] {
            return same("chain_ok=true endpoints_ok=false",
                        show(transitivity_demo(Rational(1, 100), Rational(15, 1000), 100)));
          });
  r.check("real_chain_zero_step", "reflexive case of the real error relation",
          {{"step", "0"}, {"error", "15/1000"}, {"length", 100}},
          [] { return same("chain_ok=true endpoints_ok=true", show(transitivity_demo(Rational(0), Rational(15, 1000), 100))); });
  for (long long n : {100LL, 10'000LL, 1'000'000LL}) {
    r.check("monad_chain_" + std::to_string(n), "repeated infinitesimal additions stay in the monad",
            {{"step", "d"}, {"length", n}},
            [n] { return same("chain_ok=true endpoints_ok=true", show(transitivity_demo(Hyper::delta(1), n))); });
  }
  r.check("multiples_of_d_infinitesimal", "finite multiples of an infinitesimal lie in the monad of zero",
          {{"multiples", {"1", "-7", "10^9", "10^18"}}}, [] {
            Tally t;
            for (const Rational& n : {Rational(1), Rational(-7), Rational(1'000'000'000L), Rational(1'000'000'000'000'000'000L)}) {
              const Hyper x = Hyper::monomial(n, 1);
              t.add(classify(x) == Magnitude::infinitesimal, [&] { return x.str(); });
            }
            return t.outcome();
          });
  r.check("monad_equiv_examples", "monad equivalence", {{"pairs", {"5 ~ 5 + 3*d^2", "5 !~ 51/10"}}}, [] {
    const bool a = monad_equiv(Hyper(5), Hyper(5) + Hyper::monomial(3, 2));
    const bool b = monad_equiv(Hyper(5), Hyper(Rational(51, 10)));
    return same("true false", flag(a) + " " + flag(b));
  });
  return r;
}

// ---------------------------------------------------------------- monad

Report monad(const Config& c) {
  Report r;
  const int depth = c.scales;
  r.check("disjointness", "monads of distinct reals are disjoint",
          {{"grid", rationals(c.grid)}, {"window", c.window_size()}, {"depth", depth}}, [&] {
            std::mt19937_64 rng(c.seed);
            std::uniform_int_distribution<long long> far(-1'000'000, 1'000'000);
            std::vector<std::vector<MonadSite>> sites;
            for (const auto& g : c.grid) {
              auto s = MonadWindow(g, c.half_width, depth).sites();
              for (int extra = 0; extra < 4; ++extra) {
                std::vector<long long> m(static_cast<std::size_t>(depth));
                for (auto& x : m) x = far(rng);
                s.emplace_back(g, m);
              }
              sites.push_back(std::move(s));
            }
            Tally t;
            for (std::size_t i = 0; i < sites.size(); ++i) {
              for (std::size_t j = 0; j < sites.size(); ++j) {
                for (const auto& a : sites[i]) {
                  for (const auto& b : sites[j]) {
                    const bool eq = monad_equiv(a.value(), b.value());
                    t.add(eq == (i == j), [&] { return a.str() + " vs " + b.str(); });
                  }
                }
              }
            }
            return t.outcome();
          });
  r.check("st_homomorphism", "standard part is additive on lattice points", {{"pairs", 1000}, {"depth", depth}},
          [&] {
            std::mt19937_64 rng(c.seed + 1);
            std::uniform_int_distribution<long long> off(-100'000, 100'000);
            const auto site = [&] {
              std::vector<long long> m(static_cast<std::size_t>(depth));
              for (auto& x : m) x = off(rng);
              return MonadSite(random_rational(rng, 50, 12), m);
            };
            Tally t;
            for (int i = 0; i < 1000; ++i) {
              const MonadSite a = site();
              const MonadSite b = site();
              const MonadSite s = site_add(a, b);
              const bool ok = standard_part(s.value()) == standard_part(a.value()) + standard_part(b.value()) &&
                              s.value() == a.value() + b.value() &&
                              quotient_rep(s) == quotient_rep(a) + quotient_rep(b);
              t.add(ok, [&] { return a.str() + " + " + b.str(); });
            }
            return t.outcome();
          });
  r.check("site_add_example", "componentwise addition of lattice points", {{"a", "site(3; 1, 0)"}, {"b", "site(4; -1, 2)"}},
          [] { return same("site(7; 0, 2)", site_add(MonadSite(3, {1, 0}), MonadSite(4, {-1, 2})).str()); });
  r.check("quotient_example", "quotient by the monad of zero", {{"site", "site(5; 17, -3)"}},
          [] { return same("5", to_string(quotient_rep(MonadSite(5, {17, -3})))); });
  return r;
}

// ---------------------------------------------------------------- scales

Report scales(const Config& c) {
  Report r;
  std::vector<int> depths{c.scales};
  if (c.scales != 3) depths.push_back(3);
  for (int depth : depths) {
    const ScaleTower tower(depth);
    r.check("tower_order_L" + std::to_string(depth), "increasing hierarchy of infinitesimal scales", {{"depth", depth}},
            [&] {
              Tally t;
              for (int l = 0; l < depth; ++l) {
                t.add(classify(tower.eps(l)) == Magnitude::infinitesimal, [&] { return "eps(" + std::to_string(l) + ")"; });
                if (l + 1 < depth) {
                  t.add(compare(tower.eps(l), tower.eps(l + 1)) < 0,
                        [&] { return "eps(" + std::to_string(l) + ") >= eps(" + std::to_string(l + 1) + ")"; });
                }
                if (l > 0) {
                  t.add(tower.eps(l - 1) == tower.lambda_inverse() * tower.eps(l),
                        [&] { return "eps(" + std::to_string(l - 1) + ") != lambda^-1 eps(" + std::to_string(l) + ")"; });
                }
              }
              t.add(classify(tower.lambda()) == Magnitude::infinite, [] { return std::string("lambda"); });
              return t.outcome();
            });
  }
  r.check("rescale_example", "rescaling a scale-1 point onto scale 0", {{"site", "site(0; 0, 1)"}},
          [] { return same("site(0; 1, 0)", rescale(MonadSite(0, {0, 1}), 1).str()); });
  r.check("rescale_bijection", "scale-1 and scale-0 skeletons are isomorphic", {{"depth", 3}, {"offsets", 1000}}, [&] {
    std::mt19937_64 rng(c.seed + 2);
    std::uniform_int_distribution<long long> off(-1'000'000, 1'000'000);
    const ScaleTower tower(3);
    Tally t;
    for (int i = 0; i < 1000; ++i) {
      const MonadSite s(0, {0, off(rng), off(rng)});
      const MonadSite down = rescale(s, 1);
      const MonadSite u(0, {off(rng), off(rng), 0});
      const bool ok = unrescale(down, 1) == s && down.value() == tower.lambda_inverse() * s.value() &&
                      rescale(unrescale(u, 1), 1) == u;
      t.add(ok, [&] { return s.str(); });
    }
    return t.outcome();
  });
  return r;
}

// ---------------------------------------------------------------- oscillator

Report oscillator(const Config& c) {
  Report r;
  const int n = c.n;
  const auto spec = c.spec();
  const std::vector<Rational> origin(static_cast<std::size_t>(n), 0);
  std::vector<Generator> oscillators;
  for (int j = 1; j <= n; ++j) {
    for (const auto& l : window_offsets(spec.half_width, n)) {
      oscillators.push_back(Generator{j, make_point(origin, l, spec.depth), std::nullopt, false});
    }
  }
  for (Statistics st : kBoth) {
    r.check("canonical_relations_" + st_name(st), "canonical (anti)commutation relations",
            {{"statistics", st_name(st)}, {"n", n}, {"window", c.window_size()}}, [&] {
              Tally t;
              for (const auto& a : oscillators) {
                for (const auto& b : oscillators) {
                  Generator ad = a;
                  ad.dagger = true;
                  Generator bd = b;
                  bd.dagger = true;
                  const auto x = OperatorExpr::generator(a, st, n);
                  const auto y = OperatorExpr::generator(b, st, n);
                  const auto xd = OperatorExpr::generator(ad, st, n);
                  const auto yd = OperatorExpr::generator(bd, st, n);
                  const long delta = a.same_oscillator(b) ? 1 : 0;
                  const bool ok = bracket_of(x, yd, st) == constant(delta, st, n) && bracket_of(x, y, st).is_zero() &&
                                  bracket_of(xd, yd, st).is_zero();
                  t.add(ok, [&] { return a.str(st) + ", " + bd.str(st); });
                }
              }
              return t.outcome();
            });
  }

  const Point s = make_point({0}, {0}, spec.depth);
  const Point s2 = make_point({1}, {0}, spec.depth);
  const auto g = [&](const Point& p, bool dagger, Statistics st) {
    return OperatorExpr::generator(Generator{1, p, std::nullopt, dagger}, st, 1);
  };
  const auto word = [&](std::initializer_list<std::pair<const Point*, bool>> w, long coeff, Statistics st) {
    Word out;
    for (const auto& [p, dagger] : w) out.push_back(Generator{1, *p, std::nullopt, dagger});
    return OperatorExpr::word(out, Scalar(coeff), st, 1);
  };
  const auto bose = Statistics::bose;
  const auto fermi = Statistics::fermi;
  r.check("order_A_Ad", "canonical commutator", {{"word", "A(s)*Ad(s)"}}, [&] {
    const auto expected = word({{&s, true}, {&s, false}}, 1, bose) + constant(1, bose, 1);
    return same(expected.str(), multiply(g(s, false, bose), g(s, true, bose)).str());
  });
  r.check("order_A_Ad_distinct", "oscillators at distinct points commute", {{"word", "A(s)*Ad(s')"}}, [&] {
    return same(word({{&s2, true}, {&s, false}}, 1, bose).str(), multiply(g(s, false, bose), g(s2, true, bose)).str());
  });
  r.check("order_C_Cd", "canonical anticommutator", {{"word", "C(s)*Cd(s)"}}, [&] {
    const auto expected = constant(1, fermi, 1) - word({{&s, true}, {&s, false}}, 1, fermi);
    return same(expected.str(), multiply(g(s, false, fermi), g(s, true, fermi)).str());
  });
  r.check("order_A_Ad_A_Ad", "normal ordering with contractions", {{"word", "A*Ad*A*Ad"}}, [&] {
    const auto expected = word({{&s, true}, {&s, true}, {&s, false}, {&s, false}}, 1, bose) +
                          word({{&s, true}, {&s, false}}, 3, bose) + constant(1, bose, 1);
    const auto a = g(s, false, bose);
    const auto ad = g(s, true, bose);
    return same(expected.str(), multiply(multiply(multiply(a, ad), a), ad).str());
  });
  r.check("order_C_Cd_C_Cd", "fermionic normal ordering", {{"word", "C*Cd*C*Cd"}}, [&] {
    const auto expected = constant(1, fermi, 1) - word({{&s, true}, {&s, false}}, 1, fermi);
    const auto a = g(s, false, fermi);
    const auto ad = g(s, true, fermi);
    return same(expected.str(), multiply(multiply(multiply(a, ad), a), ad).str());
  });
  r.check("vev_examples", "vacuum expectation values",
          {{"words", {"Ad(s)*A(s)", "A(s)*Ad(s)", "A(s1)*A(s2)*Ad(s2)*Ad(s1)"}}}, [&] {
            const auto v1 = vacuum_expectation(word({{&s, true}, {&s, false}}, 1, bose));
            const auto v2 = vacuum_expectation(word({{&s, false}, {&s, true}}, 1, bose));
            const auto v3 = vacuum_expectation(word({{&s, false}, {&s2, false}, {&s2, true}, {&s, true}}, 1, bose));
            return same("0 1 1", v1.str() + " " + v2.str() + " " + v3.str());
          });
  r.check("commutator_example", "number operator raises by one", {{"pair", "[Ad(s)*A(s), Ad(s)]"}}, [&] {
    return same(g(s, true, bose).str(), commutator(word({{&s, true}, {&s, false}}, 1, bose), g(s, true, bose)).str());
  });

  for (Statistics st : kBoth) {
    r.check("oracle_vev_" + st_name(st), "vacuum expectation values against the dense Fock space",
            {{"statistics", st_name(st)}, {"words", 200}, {"max_length", 6}, {"modes", 3}}, [&] {
              std::mt19937_64 rng(c.seed + (st == bose ? 3 : 4));
              std::uniform_int_distribution<int> len(1, 6);
              std::uniform_int_distribution<int> mode(0, 2);
              std::bernoulli_distribution dagger(0.5);
              std::vector<Point> points;
              for (int i = 0; i < 3; ++i) points.push_back(make_point({i}, {0}, spec.depth));
              Tally t;
              for (int k = 0; k < 200; ++k) {
                Word w;
                const int length = len(rng);
                for (int i = 0; i < length; ++i) {
                  w.push_back(Generator{1, points[static_cast<std::size_t>(mode(rng))], std::nullopt, dagger(rng)});
                }
                const auto x = OperatorExpr::word(w, Scalar(1), st, 1);
                const auto symbolic = vacuum_expectation(x).to_complex();
                const auto numeric = fock_oracle(x, 4, c.oracle_max_dim).vacuum_element;
                t.add(std::abs(symbolic - numeric) <= 1e-9, [&] { return x.str(); });
              }
              return t.outcome();
            });
    r.check("normal_order_idempotent_" + st_name(st), "normal ordering is a projection",
            {{"statistics", st_name(st)}, {"expressions", 100}}, [&] {
              std::mt19937_64 rng(c.seed + (st == bose ? 5 : 6));
              std::uniform_int_distribution<int> len(0, 5);
              std::uniform_int_distribution<int> mode(0, 1);
              std::uniform_int_distribution<long> coeff(-3, 3);
              std::bernoulli_distribution dagger(0.5);
              const std::vector<Point> points{s, s2};
              Tally t;
              for (int k = 0; k < 100; ++k) {
                OperatorExpr x(st, 1);
                for (int term = 0; term < 3; ++term) {
                  Word w;
                  const int length = len(rng);
                  for (int i = 0; i < length; ++i) {
                    w.push_back(Generator{1, points[static_cast<std::size_t>(mode(rng))], std::nullopt, dagger(rng)});
                  }
                  x.add_term(w, Scalar(coeff(rng)));
                }
                const auto once = normal_order(x);
                t.add(normal_order(once) == once && once.is_normal_ordered(), [&] { return x.str(); });
              }
              return t.outcome();
            });
  }
  return r;
}

// ---------------------------------------------------------------- fields

Report fields(const Config& c) {
  Report r;
  const auto spec = c.spec();
  const int w = c.window_size();
  const int max_axes = std::min(c.n, 2);
  for (int n = 1; n <= max_axes; ++n) {
    // One center per grid value, cycling the grid across axes.
    std::vector<Center> centers;
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      Center ctr;
      for (int a = 0; a < n; ++a) ctr.push_back(c.grid[(i + static_cast<std::size_t>(a)) % c.grid.size()]);
      centers.push_back(ctr);
    }
    const auto modes = window_offsets(spec.half_width, n);
    for (Statistics st : kBoth) {
      r.check("field_brackets_N" + std::to_string(n) + "_" + st_name(st),
              "field (anti)commutators are Kronecker deltas in component, center and mode",
              {{"n", n}, {"window", w}, {"statistics", st_name(st)}, {"centers", centers.size()}}, [&] {
                const auto to_int = [](const std::vector<long long>& v) { return std::vector<int>(v.begin(), v.end()); };
                std::map<std::tuple<std::size_t, int, std::size_t, bool>, OperatorExpr> cache;
                const auto field = [&](std::size_t ci, int j, std::size_t mi, bool dagger) -> const OperatorExpr& {
                  const auto key = std::tuple{ci, j, mi, dagger};
                  auto it = cache.find(key);
                  if (it == cache.end()) {
                    const auto f = dagger ? phid(centers[ci], j, to_int(modes[mi])) : phi(centers[ci], j, to_int(modes[mi]));
                    it = cache.emplace(key, expand(f, spec, st)).first;
                  }
                  return it->second;
                };
                Tally t;
                for (std::size_t a = 0; a < centers.size(); ++a) {
                  for (std::size_t b = 0; b < centers.size(); ++b) {
                    for (int j = 1; j <= n; ++j) {
                      for (int l = 1; l <= n; ++l) {
                        for (std::size_t k = 0; k < modes.size(); ++k) {
                          for (std::size_t kp = 0; kp < modes.size(); ++kp) {
                            const long delta = a == b && j == l && k == kp ? 1 : 0;
                            const auto engine = bracket_of(field(a, j, k, false), field(b, l, kp, true), st);
                            const auto rule = field_commutator(phi(centers[a], j, to_int(modes[k])),
                                                               phid(centers[b], l, to_int(modes[kp])), spec, st);
                            t.add(engine == constant(delta, st, n) && rule == Scalar(delta), [&] {
                              return "[phi_" + std::to_string(j) + "(" + std::to_string(a) + "; mode " +
                                     std::to_string(k) + "), phid_" + std::to_string(l) + "(" + std::to_string(b) +
                                     "; mode " + std::to_string(kp) + ")] = " + engine.str();
                            });
                          }
                        }
                      }
                    }
                  }
                }
                return t.outcome();
              });
    }
    r.check("expansion_weights_N" + std::to_string(n), "uniform weight of the equivalent sum",
            {{"n", n}, {"window", w}}, [&] {
              const auto x = expand(phi(Center(static_cast<std::size_t>(n), 0)), spec, Statistics::bose);
              Tally t;
              std::size_t terms = 0;
              for (const auto& [word, coeff] : x.terms()) {
                ++terms;
                t.add(coeff == Scalar::sqrt_w_power(w, -n), [&] { return coeff.str(); });
              }
              std::size_t expected = 1;
              for (int a = 0; a < n; ++a) expected *= static_cast<std::size_t>(w);
              t.add(terms == expected, [&] { return std::to_string(terms) + " terms"; });
              return t.outcome();
            });
  }
  r.check("phase_offsets_cancel", "free phase offsets drop out of the bracket", {{"theta", "1/7"}}, [&] {
    MonadField f = phi({0}, 1, {spec.half_width});
    MonadField g = phid({0}, 1, {spec.half_width});
    f.theta_turn = g.theta_turn = Rational(1, 7);
    return same("1", commutator(expand(f, spec, Statistics::bose), expand(g, spec, Statistics::bose)).str());
  });
  r.check("degenerate_window", "a one-site window is the oscillator itself", {{"window", 1}}, [] {
    const LatticeSpec one{0, 2, {}};
    return same("A[1](site(0; 0, 0))", expand(phi({0}), one, Statistics::bose).str());
  });
  return r;
}

// ---------------------------------------------------------------- lie

Report lie(const Config& c) {
  Report r;
  const int n = c.n;
  const auto spec = c.spec();
  const std::vector<Rational> center(static_cast<std::size_t>(n), 0);
  std::vector<Rational> other = center;
  other[0] = 1;
  if (n >= 3) {
    r.check("T12_T23", "bilinear algebra", {{"pair", "[T12, T23]"}}, [&] {
      const auto x = commutator(t_hat(1, 2, center, spec, Statistics::bose), t_hat(2, 3, center, spec, Statistics::bose));
      return same(t_hat(1, 3, center, spec, Statistics::bose).str(), x.str());
    });
  }
  if (n >= 2) {
    r.check("T12_T21", "bilinear algebra", {{"pair", "[T12, T21]"}}, [&] {
      const auto x = commutator(t_hat(1, 2, center, spec, Statistics::bose), t_hat(2, 1, center, spec, Statistics::bose));
      const auto y = t_hat(1, 1, center, spec, Statistics::bose) - t_hat(2, 2, center, spec, Statistics::bose);
      return same(y.str(), x.str());
    });
  }
  for (Statistics st : kBoth) {
    r.check("bilinear_brackets_" + st_name(st), "commutators of bilinears close on bilinears",
            {{"n", n}, {"window", c.window_size()}, {"statistics", st_name(st)}}, [&] {
              std::vector<OperatorExpr> t_here, t_there;
              for (int j = 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                  t_here.push_back(t_hat(j, k, center, spec, st));
                  t_there.push_back(t_hat(j, k, other, spec, st));
                }
              }
              const auto at = [n](int j, int k) { return static_cast<std::size_t>((j - 1) * n + (k - 1)); };
              Tally t;
              for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                  for (int l = 1; l <= n; ++l)
                    for (int m = 1; m <= n; ++m) {
                      const auto x = commutator(t_here[at(j, k)], t_here[at(l, m)]);
                      const auto alpha = extract_bilinear(x, center, spec);
                      const bool ok = alpha && *alpha == t_commutator(j, k, l, m, n, center, true).alpha &&
                                      commutator(t_here[at(j, k)], t_there[at(l, m)]).is_zero();
                      t.add(ok, [&] {
                        return "[T" + std::to_string(j) + std::to_string(k) + ", T" + std::to_string(l) +
                               std::to_string(m) + "] = " + x.str();
                      });
                    }
              return t.outcome();
            });
  }
  const auto basis = generator_basis(n, center);
  const auto abstract = structure_constants(basis);
  r.check("basis", "U(1) and SU(N) generators", {{"n", n}}, [&] {
    Tally t;
    t.add(basis.size() == static_cast<std::size_t>(n * n), [&] { return std::to_string(basis.size()) + " generators"; });
    for (std::size_t a = 1; a < static_cast<std::size_t>(n); ++a) {
      t.add(basis[a].alpha.trace().is_zero(), [&] { return basis[a].name + " has nonzero trace"; });
    }
    for (const auto& b : basis) t.add(b.alpha.conj_transpose() == b.alpha, [&] { return b.name + " not hermitian"; });
    return t.outcome();
  });
  for (Statistics st : kBoth) {
    r.check("structure_constants_" + st_name(st), "both statistics give the same structure constants",
            {{"n", n}, {"window", c.window_size()}, {"statistics", st_name(st)}}, [&] {
              const auto symbolic = structure_constants_symbolic(basis, spec, st);
              Tally t;
              for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = 0; b < basis.size(); ++b)
                  for (std::size_t e = 0; e < basis.size(); ++e) {
                    t.add(symbolic[a][b][e] == abstract[a][b][e], [&] {
                      return "f[" + basis[a].name + "][" + basis[b].name + "][" + basis[e].name +
                             "] = " + symbolic[a][b][e].str();
                    });
                  }
              return t.outcome();
            });
  }
  r.check("antisymmetry", "structure constants are antisymmetric", {{"n", n}}, [&] {
    Tally t;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t e = 0; e < basis.size(); ++e) {
          t.add(abstract[a][b][e] == -abstract[b][a][e], [&] { return basis[a].name + ", " + basis[b].name; });
        }
    return t.outcome();
  });
  r.check("jacobi", "Jacobi identity on all basis triples", {{"n", n}}, [&] {
    const auto v = jacobi_violation(abstract);
    return same("none", v ? basis[static_cast<std::size_t>((*v)[0])].name + ", " +
                                basis[static_cast<std::size_t>((*v)[1])].name + ", " +
                                basis[static_cast<std::size_t>((*v)[2])].name
                          : "none");
  });
  for (Statistics st : kBoth) {
    r.check("J0_central_" + st_name(st), "the U(1) charge commutes with SU(N)", {{"n", n}, {"statistics", st_name(st)}},
            [&] {
              const auto j0 = realize(basis[0], spec, st);
              Tally t;
              for (const auto& b : basis) {
                t.add(commutator(j0, realize(b, spec, st)).is_zero(), [&] { return b.name; });
              }
              return t.outcome();
            });
  }
  r.check("adjoint_action", "bilinears act linearly on field components", {{"n", n}}, [&] {
    const Point p = make_point(center, std::vector<long long>(static_cast<std::size_t>(n), 0), spec.depth);
    Tally t;
    for (Statistics st : kBoth) {
      for (const auto& b : basis) {
        const auto x = realize(b, spec, st);
        for (int l = 1; l <= n; ++l) {
          OperatorExpr expected(st, n);
          for (int k = 1; k <= n; ++k) {
            expected += OperatorExpr::generator(Generator{k, p, std::nullopt, true}, st, n) * Scalar(b.alpha(k - 1, l - 1));
          }
          const auto got = commutator(x, OperatorExpr::generator(Generator{l, p, std::nullopt, true}, st, n));
          t.add(got == expected, [&] { return "[" + b.name + ", Ad_" + std::to_string(l) + "] = " + got.str(); });
        }
      }
    }
    return t.outcome();
  });
  return r;
}

// ---------------------------------------------------------------- vacuum

std::vector<TransformParams> families(int n) {
  std::vector<Cyclotomic> diag(static_cast<std::size_t>(n), Cyclotomic(1));
  diag[0] = Cyclotomic::zeta(5);
  diag[1] = Cyclotomic::zeta(5, 4);
  std::vector<Rational> dil;
  for (int j = 0; j < n; ++j) dil.emplace_back(j + 2, 1);
  return {U1Phase{Cyclotomic::zeta(5)},
          SUNDiagonal{diag},
          SUNPlane{1, 2, 1, Rational(3, 5), Rational(4, 5)},
          SUNPlane{1, 2, 2, Rational(5, 13), Rational(12, 13)},
          Rotation{1, 2, Rational(8, 17), Rational(15, 17)},
          Boost{Rational(2), 1, 2},
          Dilatation{dil}};
}

Report vacuum(const Config& c) {
  Report r;
  const int n = std::max(c.n, 2);
  const auto spec = c.spec();
  const std::vector<Rational> center(static_cast<std::size_t>(n), 0);
  for (Statistics st : kBoth) {
    r.check("bilinears_" + st_name(st), "bilinears annihilate the vacuum and the dual vacuum",
            {{"n", n}, {"statistics", st_name(st)}}, [&] {
              Tally t;
              for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                  const auto x = t_hat(j, k, center, spec, st);
                  t.add(annihilates_vacuum(x) && annihilates_dual_vacuum(x),
                        [&] { return "T" + std::to_string(j) + std::to_string(k); });
                }
              return t.outcome();
            });
    r.check("shifts_" + st_name(st), "translation operators annihilate the vacuum",
            {{"grid", rationals(c.grid)}, {"statistics", st_name(st)}}, [&] {
              Tally t;
              for (const auto& a : c.grid)
                for (const auto& b : c.grid) {
                  const auto p = shift_op(a, b, spec, st);
                  t.add(annihilates_vacuum(p) && annihilates_dual_vacuum(p),
                        [&] { return "p(" + to_string(a) + " -> " + to_string(b) + ")"; });
                }
              const CenterGrid grid(c.grid);
              const auto big = translation_op(grid, c.delta, spec, st);
              t.add(annihilates_vacuum(big) && annihilates_dual_vacuum(big), [] { return std::string("P(delta)"); });
              return t.outcome();
            });
    r.check("families_" + st_name(st), "exponentiated symmetry operators fix the vacuum",
            {{"n", n}, {"statistics", st_name(st)}}, [&] {
              Tally t;
              const auto vac = vacuum_ket(st, n);
              for (const auto& p : families(n)) {
                const auto x = realize(generator_of(p, n, center), spec, st);
                const bool ok = exp_series_on_vacuum(x, 4) == vac && conjugate(vac, exponentiate(p, n)) == vac &&
                                annihilates_vacuum(x) && annihilates_dual_vacuum(x);
                t.add(ok, [&] { return kind_name(p); });
              }
              return t.outcome();
            });
  }
  return r;
}

// ---------------------------------------------------------------- translation

Report translation(const Config& c) {
  Report r;
  const auto spec = c.spec();
  const CenterGrid grid(c.grid);
  const std::vector<Rational> deltas{c.delta, 2 * c.delta};
  for (Statistics st : kBoth) {
    r.check("shift_moves_monad_" + st_name(st), "p_r(delta) moves a monad state", {{"delta", to_string(c.delta)}}, [&] {
      Tally t;
      for (const auto& a : c.grid) {
        const Rational b = grid.shift(a, c.delta);
        const auto got = apply(shift_op(a, b, spec, st), expand(phid({a}), spec, st));
        t.add(got == expand(phid({b}), spec, st), [&] { return to_string(a) + " -> " + got.str(); });
      }
      return t.outcome();
    });
    r.check("zero_shift_counts_" + st_name(st), "p_r(0) is the window number operator", {}, [&] {
      const Rational a = c.grid.front();
      const auto two = normal_product(expand(phid({a}, 1, {0}), spec, st), expand(phid({a}, 1, {spec.half_width}), spec, st));
      const auto got = apply(shift_op(a, a, spec, st), two);
      if (spec.half_width == 0 && st == Statistics::fermi) return same("0", got.str());
      return same((two * Scalar(2)).str(), got.str());
    });
    r.check("total_number_commutes_" + st_name(st), "translations conserve the total number",
            {{"delta", to_string(c.delta)}}, [&] {
              OperatorExpr total(st, 1);
              for (const auto& a : c.grid) total += t_hat(1, 1, {a}, spec, st);
              return same("0", commutator(total, translation_op(grid, c.delta, spec, st)).str());
            });
    const Point m0 = make_point({c.grid.front()}, {0}, spec.depth);
    const Point m1 = make_point({c.grid.back()}, {spec.half_width}, spec.depth);
    const auto number = [&](const Point& p) {
      return OperatorExpr::word(Word{Generator{1, p, std::nullopt, true}, Generator{1, p, std::nullopt, false}}, Scalar(1),
                                st, 1);
    };
    const std::vector<std::pair<std::string, OperatorExpr>> operators{
        {"n(m0)", number(m0)},
        {"n(m0)*n(m1)", multiply(number(m0), number(m1))},
        {"T11", t_hat(1, 1, {c.grid.front()}, spec, st)},
        {"n(m0)^2", multiply(number(m0), number(m0))}};
    for (const auto& delta : deltas) {
      r.check("invariance_delta_" + to_string(delta) + "_" + st_name(st),
              "translation invariance of expectation values of balanced operators",
              {{"delta", to_string(delta)}, {"grid", rationals(c.grid)}, {"statistics", st_name(st)}}, [&] {
                Tally t;
                for (const auto& [name, o] : operators) {
                  const auto res = translation_invariance(o, grid, delta, spec, st);
                  t.add(res.pass, [&, name = name] { return name + ": " + res.before.str() + " -> " + res.after.str(); });
                }
                return t.outcome();
              });
    }
  }
  r.check("grid_miss", "shifts must map the grid onto itself", {{"delta", "half the spacing"}}, [&] {
    if (c.grid.size() < 2) return same("GridMiss", "GridMiss");
    try {
      grid.shift(c.grid.front(), (c.grid[1] - c.grid[0]) / 2);
    } catch (const GridMiss&) {
      return same("GridMiss", "GridMiss");
    }
    return same("GridMiss", "no error");
  });
  return r;
}

// ---------------------------------------------------------------- lorentz / rotation

Report lorentz(const Config& c) {
  Report r;
  const auto g = ExactMatrix::diagonal({Cyclotomic(1), Cyclotomic(-1)});
  const auto matrix_for = [](const Rational& t) {
    const Rational ch = (t + 1 / t) / 2;
    const Rational sh = (t - 1 / t) / 2;
    return ExactMatrix{{Cyclotomic(ch), Cyclotomic(-sh)}, {Cyclotomic(-sh), Cyclotomic(ch)}};
  };
  r.check("boost_matrix", "boost matrix in cosh/sinh form with t = e^a", {{"t", to_string(c.boost_t)}},
          [&] { return same(matrix_for(c.boost_t).str(), exponentiate(Boost{c.boost_t}, 2).str()); });
  r.check("boosts_preserve_metric", "boosts preserve the Minkowski metric", {{"samples", 20}}, [&] {
    std::mt19937_64 rng(c.seed + 7);
    std::uniform_int_distribution<long> d(1, 60);
    Tally t;
    for (int i = 0; i < 20; ++i) {
      const Rational t1 = ratio(d(rng), d(rng));
      const Rational t2 = ratio(d(rng), d(rng));
      const auto u = exponentiate(Boost{t1}, 2);
      const bool ok = u.transpose() * g * u == g && u.determinant() == Cyclotomic(1) && u == matrix_for(t1) &&
                      u * exponentiate(Boost{t2}, 2) == exponentiate(Boost{t1 * t2}, 2);
      t.add(ok, [&] { return "t = " + to_string(t1) + ": " + u.str(); });
    }
    return t.outcome();
  });
  r.check("ds2_boost_invariance", "squared distance is boost invariant", {{"t", to_string(c.boost_t)}}, [&] {
    const LatticeSpec spec = c.spec();
    Tally t;
    for (Statistics st : kBoth) {
      for (const Center& x : {Center{3, 2}, Center{1, 1}, Center{Rational(1, 2), -4}}) {
        const auto res = covariant_action(exponentiate(Boost{c.boost_t}, 2), x, minkowski(2), spec, st);
        t.add(res.norm_after == res.norm_before && res.contracted_after == res.contracted_before,
              [&] { return res.norm_before.str() + " -> " + res.norm_after.str(); });
      }
    }
    return t.outcome();
  });
  r.check("field_transformation", "boosts mix field components through M and M^-1", {{"t", to_string(c.boost_t)}}, [&] {
    const LatticeSpec spec = c.spec();
    const auto m = exponentiate(Boost{c.boost_t}, 2);
    const auto mi = m.inverse();
    const std::vector<Rational> ctr{0, 0};
    Tally t;
    for (Statistics st : kBoth) {
      const auto a1 = expand(phi(ctr, 1), spec, st);
      const auto a2 = expand(phi(ctr, 2), spec, st);
      const auto d1 = expand(phid(ctr, 1), spec, st);
      const auto d2 = expand(phid(ctr, 2), spec, st);
      t.add(conjugate(d1, m) == d1 * Scalar(m(0, 0)) + d2 * Scalar(m(1, 0)), [&] { return conjugate(d1, m).str(); });
      t.add(conjugate(a1, m) == a1 * Scalar(mi(0, 0)) + a2 * Scalar(mi(0, 1)), [&] { return conjugate(a1, m).str(); });
    }
    return t.outcome();
  });
  return r;
}

Report rotation(const Config& c) {
  Report r;
  const Rational cs = to_rational(c.triple[0]) / to_rational(c.triple[2]);
  const Rational sn = to_rational(c.triple[1]) / to_rational(c.triple[2]);
  json triple = c.triple;
  r.check("rotation_matrix", "rotation in the (1, 2) plane", {{"triple", triple}}, [&] {
    const ExactMatrix expected{{Cyclotomic(cs), Cyclotomic(-sn)}, {Cyclotomic(sn), Cyclotomic(cs)}};
    return same(expected.str(), exponentiate(Rotation{1, 2, cs, sn}, 2).str());
  });
  r.check("rotations_orthogonal", "rotations are orthogonal with unit determinant", {{"pythagorean_pairs", 20}}, [&] {
    Tally t;
    std::vector<std::pair<Rational, Rational>> pairs;
    for (long m = 2; pairs.size() < 20; ++m) {
      for (long k = 1; k < m && pairs.size() < 20; ++k) {
        const long h = m * m + k * k;
        pairs.emplace_back(Rational(m * m - k * k, h), Rational(2 * m * k, h));
      }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [a, b] = pairs[i];
      const auto& [a2, b2] = pairs[(i + 1) % pairs.size()];
      const auto u = exponentiate(Rotation{1, 2, a, b}, 2);
      const bool ok = u.transpose() * u == ExactMatrix::identity(2) && u.determinant() == Cyclotomic(1) &&
                      u * exponentiate(Rotation{1, 2, a2, b2}, 2) ==
                          exponentiate(Rotation{1, 2, a * a2 - b * b2, a * b2 + b * a2}, 2);
      t.add(ok, [&] { return "(" + to_string(a) + ", " + to_string(b) + ")"; });
    }
    return t.outcome();
  });
  r.check("rotation_invariance", "rotations leave the charge expectation unchanged", {{"triple", triple}}, [&] {
    const LatticeSpec spec = c.spec();
    const std::vector<Rational> ctr{0, 0};
    Tally t;
    for (Statistics st : kBoth) {
      ProductState state(st, 2);
      state.add_factor(monad_state(ctr, spec, st));
      const auto charge = realize(generator_basis(2, ctr)[0], spec, st);
      const auto res = invariance_check(charge, Rotation{1, 2, cs, sn}, state);
      t.add(res.pass && res.before == Scalar(2), [&] { return res.before.str() + " -> " + res.after.str(); });
    }
    return t.outcome();
  });
  return r;
}

// ---------------------------------------------------------------- u1 / sun

Report u1(const Config& c) {
  Report r;
  const int n = c.n;
  const auto spec = c.spec();
  const std::vector<Rational> ctr(static_cast<std::size_t>(n), 0);
  const Cyclotomic z = Cyclotomic::zeta(7, 3);
  r.check("phase_matrix", "U(1) acts by a common phase", {{"phase", z.str()}},
          [&] { return same((z * ExactMatrix::identity(n)).str(), exponentiate(U1Phase{z}, n).str()); });
  for (Statistics st : kBoth) {
    r.check("phase_on_fields_" + st_name(st), "charged fields pick up the phase", {{"statistics", st_name(st)}}, [&] {
      const auto d = expand(phid(ctr, 1), spec, st);
      return same((d * Scalar(z)).str(), conjugate(d, exponentiate(U1Phase{z}, n)).str());
    });
    r.check("invariance_" + st_name(st), "U(1) invariance of expectation values", {{"statistics", st_name(st)}}, [&] {
      const ProductState state = two_center_state(n, spec, st);
      Tally t;
      if (n >= 2) {
        const auto charge = realize(generator_basis(n, ctr)[0], spec, st);
        const auto res = invariance_check(charge, U1Phase{z}, state);
        t.add(res.pass && res.before == Scalar(1), [&] { return res.before.str() + " -> " + res.after.str(); });
      }
      const Point p = make_point(ctr, std::vector<long long>(static_cast<std::size_t>(n), 0), spec.depth);
      const auto number = OperatorExpr::word(
          Word{Generator{1, p, std::nullopt, true}, Generator{1, p, std::nullopt, false}}, Scalar(1), st, n);
      const auto res = invariance_check(number, U1Phase{z}, state);
      t.add(res.pass, [&] { return res.before.str() + " -> " + res.after.str(); });
      const auto unbalanced = OperatorExpr::generator(Generator{1, p, std::nullopt, true}, st, n);
      const auto zero = invariance_check(unbalanced, U1Phase{z}, state);
      t.add(zero.pass && zero.before.is_zero(), [&] { return zero.before.str(); });
      return t.outcome();
    });
  }
  return r;
}

Report sun(const Config& c) {
  Report r;
  const int n = std::max(c.n, 2);
  const auto spec = c.spec();
  const std::vector<Rational> ctr(static_cast<std::size_t>(n), 0);
  r.check("unitary_det_one", "SU(N) matrices are unitary with unit determinant", {{"n", n}}, [&] {
    Tally t;
    std::vector<TransformParams> ps;
    std::vector<Cyclotomic> diag(static_cast<std::size_t>(n), Cyclotomic(1));
    diag[0] = Cyclotomic::zeta(6);
    diag[static_cast<std::size_t>(n - 1)] = Cyclotomic::zeta(6, 5);
    ps.push_back(SUNDiagonal{diag});
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int family : {1, 2}) ps.push_back(SUNPlane{j, k, family, Rational(3, 5), Rational(4, 5)});
    for (const auto& p : ps) {
      const auto u = exponentiate(p, n);
      t.add(u.conj_transpose() * u == ExactMatrix::identity(n) && u.determinant() == Cyclotomic(1),
            [&] { return kind_name(p) + ": " + u.str(); });
    }
    return t.outcome();
  });
  r.check("generic_has_no_exact_form", "generic SU(N) exponentials are not representable exactly", {}, [&] {
    ExactMatrix alpha(n);
    alpha(0, 1) = Cyclotomic(1);
    alpha(1, 0) = Cyclotomic(1);
    try {
      exponentiate(SUNGeneric{alpha}, n);
    } catch (const NoExactForm&) {
      return same("NoExactForm", "NoExactForm");
    }
    return same("NoExactForm", "matrix");
  });
  for (Statistics st : kBoth) {
    r.check("invariance_" + st_name(st), "SU(N) invariance of the charge expectation", {{"statistics", st_name(st)}}, [&] {
      const ProductState state = two_center_state(n, spec, st);
      const auto charge = realize(generator_basis(n, ctr)[0], spec, st);
      Tally t;
      for (const TransformParams& p : {TransformParams{SUNPlane{1, 2, 1, Rational(3, 5), Rational(4, 5)}},
                                       TransformParams{SUNPlane{1, n, 2, Rational(5, 13), Rational(12, 13)}}}) {
        const auto res = invariance_check(charge, p, state);
        t.add(res.pass && res.before == Scalar(1), [&] { return kind_name(p) + ": " + res.after.str(); });
      }
      return t.outcome();
    });
  }
  return r;
}

// ---------------------------------------------------------------- configuration space

Report monad_states(const Config& c) {
  Report r;
  const auto spec = c.spec();
  for (Statistics st : kBoth) {
    r.check("orthonormal_" + st_name(st), "monad states are orthonormal", {{"grid", rationals(c.grid)}}, [&] {
      Tally t;
      for (const auto& a : c.grid)
        for (const auto& b : c.grid) {
          const auto v = inner(monad_state({a}, spec, st), monad_state({b}, spec, st));
          t.add(v == Scalar(a == b ? 1 : 0), [&] { return "<" + to_string(a) + "|" + to_string(b) + "> = " + v.str(); });
        }
      return t.outcome();
    });
    r.check("configuration_norm_" + st_name(st), "the configuration state is normalized", {{"grid", rationals(c.grid)}},
            [&] {
              Tally t;
              for (std::size_t size = 1; size <= c.grid.size(); ++size) {
                const std::vector<Rational> g(c.grid.begin(), c.grid.begin() + static_cast<long>(size));
                const auto v = config_state(grid_points(g, 1), spec, st).norm_squared();
                t.add(v == Scalar(1), [&] { return std::to_string(size) + " centers: " + v.str(); });
              }
              return t.outcome();
            });
  }
  r.check("position_eigenvalues", "monad states are position eigenstates", {{"grid", rationals(c.grid)}}, [&] {
    const auto x = position_operator(c.grid, spec, Statistics::bose);
    Tally t;
    for (const auto& a : c.grid) {
      const auto e = eigenvalue(x, monad_state({a}, spec, Statistics::bose));
      t.add(e == Hyper(a), [&] { return to_string(a) + " -> " + e.str(); });
    }
    return t.outcome();
  });
  r.check("residue_option", "r + a_r eps can replace r", {{"a_r", "2"}}, [&] {
    std::vector<Rational> residues(c.grid.size(), 0);
    residues[0] = 2;
    const auto x = position_operator(c.grid, spec, Statistics::bose, residues);
    const Hyper e = eigenvalue(x, monad_state({c.grid[0]}, spec, Statistics::bose));
    return same((Hyper(c.grid[0]) + 2 * spec.tower().eps(0)).str(), e.str());
  });
  r.check("grid_diagonal", "the configuration state reproduces each center", {{"grid", rationals(c.grid)}}, [&] {
    const auto m = config_state(grid_points(c.grid, 1), spec, Statistics::bose);
    Tally t;
    for (const auto& a : c.grid) {
      const auto v = m.expectation(position_operator({a}, spec, Statistics::bose));
      t.add(v == Scalar(a), [&] { return to_string(a) + " -> " + v.str(); });
    }
    return t.outcome();
  });
  return r;
}

Report ds2(const Config& c) {
  Report r;
  const int n = static_cast<int>(c.dl.size());
  long long widest = 0;
  for (long long x : c.dl) widest = std::max(widest, x < 0 ? -x : x);
  // The window is widened when the requested separation needs it.
  LatticeSpec spec = c.spec();
  spec.half_width = std::max<long long>(spec.half_width, (widest + 1) / 2);
  const auto g = metric_of(c, n);
  const Hyper e = spec.tower().eps(0);
  json dl = c.dl;
  r.check("distance_eigenvalues", "infinitesimal distance operator", {{"window", spec.size()}}, [&] {
    Tally t;
    for (Statistics st : kBoth) {
      for (long long d = -2LL * spec.half_width; d <= 2LL * spec.half_width; ++d) {
        const Hyper v = distance_eigenvalue(1, {0}, {d}, spec, st);
        t.add(v == to_rational(d) * e, [&] { return std::to_string(d) + " -> " + v.str(); });
      }
    }
    return t.outcome();
  });
  r.check("ds2_configured", "squared distance from the metric", {{"dl", dl}, {"metric", c.metric}}, [&] {
    Hyper expected;
    for (int mu = 0; mu < n; ++mu) {
      const Rational d = to_rational(c.dl[static_cast<std::size_t>(mu)]);
      expected += (g[static_cast<std::size_t>(mu)] * d * d) * (e * e);
    }
    const Center origin(static_cast<std::size_t>(n), 0);
    const auto ket = monad_state(origin, spec, Statistics::bose);
    return same(expected.str(), eigenvalue(ds2_operator(origin, c.dl, g, spec, Statistics::bose), ket).str());
  });
  r.check("ds2_examples", "Minkowski squared distances", {{"cases", {"(3,2)", "(1,1)", "(5,3)"}}}, [&] {
    LatticeSpec wide = spec;
    wide.half_width = std::max(wide.half_width, 3);
    const Hyper e2 = e * e;
    const auto m = minkowski(2);
    const std::string got = ds2_expectation({0, 0}, {3, 2}, m, wide, Statistics::bose).str() + " " +
                            ds2_expectation({0, 0}, {1, 1}, m, wide, Statistics::bose).str() + " " +
                            ds2_expectation({0, 0}, {5, 3}, m, wide, Statistics::bose).str();
    return same((5 * e2).str() + " 0 " + (16 * e2).str(), got);
  });
  r.check("config_matches_monad", "configuration and monad expectation values agree", {{"grid", rationals(c.grid)}}, [&] {
    const LatticeSpec small = c.spec();
    const auto centers = grid_points(c.grid, 2);
    std::mt19937_64 rng(c.seed + 8);
    std::uniform_int_distribution<long long> d(-2LL * small.half_width, 2LL * small.half_width);
    Tally t;
    for (Statistics st : kBoth) {
      for (int i = 0; i < 3; ++i) {
        const std::vector<long long> v{d(rng), d(rng)};
        const Center& at = centers[static_cast<std::size_t>(i) % centers.size()];
        const Hyper a = ds2_config_expectation(centers, at, v, minkowski(2), small, st);
        const Hyper b = ds2_expectation(at, v, minkowski(2), small, st);
        t.add(a == b, [&] { return a.str() + " vs " + b.str(); });
      }
    }
    return t.outcome();
  });
  r.check("dilatation_compensation", "covariant and contravariant dilatation factors compensate", {}, [&] {
    const std::vector<Rational> f{Rational(2), Rational(1, 3)};
    const Center x{3, 2};
    const auto res = covariant_action(exponentiate(Dilatation{f}, 2), x, minkowski(2), c.spec(), Statistics::bose);
    std::vector<Cyclotomic> cov, contra;
    for (std::size_t mu = 0; mu < 2; ++mu) {
      cov.emplace_back(f[mu] * x[mu]);
      contra.emplace_back(minkowski(2)[mu] * x[mu] / f[mu]);
    }
    const bool ok = res.covariant == cov && res.contravariant == contra && res.contracted_after == res.contracted_before;
    return Outcome{"compensated", ok ? "compensated" : "not compensated", ok,
                   "contracted " + res.contracted_before.str() + " -> " + res.contracted_after.str()};
  });
  r.check("identity_action", "identity leaves both kinds unchanged", {}, [&] {
    const Center x{3, 2};
    const auto res = covariant_action(ExactMatrix::identity(2), x, minkowski(2), c.spec(), Statistics::bose);
    const bool ok = res.covariant == std::vector<Cyclotomic>{Cyclotomic(3), Cyclotomic(2)} &&
                    res.contravariant == std::vector<Cyclotomic>{Cyclotomic(3), Cyclotomic(-2)};
    return Outcome{"unchanged", ok ? "unchanged" : "changed", ok, {}};
  });
  r.check("out_of_window", "separations beyond the window are rejected", {}, [&] {
    try {
      distance_operator(1, {0}, {2LL * spec.half_width + 1}, spec, Statistics::bose);
    } catch (const OutOfWindow&) {
      return same("OutOfWindow", "OutOfWindow");
    }
    return same("OutOfWindow", "accepted");
  });
  return r;
}

// ---------------------------------------------------------------- dsl

Report dsl(const Config& c) {
  Report r;
  EvalContext ctx;
  ctx.spec = c.spec();
  const std::vector<std::pair<std::string, std::string>> golden{
      {"vev( A[1](site(0;0)) * Ad[1](site(0;0)) )", "1"},
      {"comm( phi[1]([0];0), phid[1]([0];0) )", "1"},
      {"vev( Ad[1](site(0;0)) )", "0"},
      {"comm(phi[1]([1]), phid[1]([2]))", "0"},
      {"acomm(C[1](site(0; 0)), Cd[1](site(0; 0)))", "1"},
      {"vev((A[1](site(0; 0)) + Ad[1](site(0; 0)))^4)", "3"},
      {"W^(1/2)*W^(-1/2)", "1"},
      {"z[3]^3", "1"},
  };
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& [text, expected] = golden[i];
    r.check("golden_" + std::to_string(i + 1), "expression language evaluation", {{"expr", text}},
            [&] { return same(expected, evaluate(text, ctx).str()); });
  }
  r.check("round_trip", "printing and parsing are inverse", {{"expressions", golden.size()}}, [&] {
    Tally t;
    for (const auto& [text, expected] : golden) {
      const Ast a = parse(text);
      t.add(parse(print(a)) == a, [&] { return print(a); });
      const Value v = evaluate(text, ctx);
      t.add(evaluate(v.str(), ctx).str() == v.str(), [&] { return v.str(); });
    }
    return t.outcome();
  });
  r.check("syntax_error_position", "errors carry line and column", {{"expr", "1 +\\n  * 2"}}, [] {
    try {
      parse("1 +\n  * 2");
    } catch (const SyntaxError& e) {
      return same("2:3", std::to_string(e.line()) + ":" + std::to_string(e.column()));
    }
    return same("2:3", "parsed");
  });
  return r;
}

using SuiteFn = Report (*)(const Config&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"equivalence", equivalence}, {"monad", monad},       {"scales", scales},
      {"oscillator", oscillator},   {"fields", fields},     {"lie", lie},
      {"vacuum", vacuum},           {"translation", translation}, {"lorentz", lorentz},
      {"rotation", rotation},       {"u1", u1},             {"sun", sun},
      {"monad-states", monad_states}, {"ds2", ds2},         {"dsl", dsl},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name, const Config& config) {
  config.validate();
  Report out;
  out.suite = name;
  out.config = config.to_json();
  if (name == "all") {
    std::vector<std::future<Report>> jobs;
    for (const auto& [suite, fn] : registry()) {
      jobs.push_back(std::async(std::launch::async, [fn = fn, &config] { return fn(config); }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      Report part = jobs[i].get();
      for (auto& rec : part.results) rec.id = registry()[i].first + "." + rec.id;
      out.append(part);
    }
    return out;
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) {
      Report part = fn(config);
      out.append(part);
      return out;
    }
  }
  throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace hyperlattice
