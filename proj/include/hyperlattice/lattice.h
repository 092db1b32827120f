#ifndef HYPERLATTICE_LATTICE_H
#define HYPERLATTICE_LATTICE_H

#include <compare>
#include <string>
#include <vector>

#include "hyperlattice/hyper.h"
#include "hyperlattice/rational.h"

namespace hyperlattice {

/// Finite stand-in for one monad: offsets -half_width..half_width at scale 0,
/// scale depth L, and the truncation window for d-expansions.
struct LatticeSpec {
  int half_width = 1;
  int depth = 2;
  Window window{};

  int size() const { return 2 * half_width + 1; }
  ScaleTower tower() const { return ScaleTower(depth, window); }
  /// Throws std::invalid_argument for a negative half width or bad depth.
  void validate() const;
};

/// Lattice point r + sum_l m_l eps(l) of the monad of the rational r.
/// Sites carry the zero-residue representative, so st(value()) == r.
class MonadSite {
 public:
  MonadSite() = default;
  MonadSite(Rational standard, std::vector<long long> offsets);
  /// Center of the monad of r at the given depth (all offsets zero).
  static MonadSite center(const Rational& standard, int depth);

  const Rational& standard() const { return standard_; }
  const std::vector<long long>& offsets() const { return offsets_; }
  int depth() const { return static_cast<int>(offsets_.size()); }

  Hyper value(Window window = {}) const;

  friend bool operator==(const MonadSite& a, const MonadSite& b) {
    return a.standard_ == b.standard_ && a.offsets_ == b.offsets_;
  }
  friend std::strong_ordering operator<=>(const MonadSite& a, const MonadSite& b);

  /// DSL literal "site(r; m0, m1, ...)".
  std::string str() const;

 private:
  Rational standard_;
  std::vector<long long> offsets_;
};

/// One MonadSite per space axis.
using Point = std::vector<MonadSite>;

std::string to_string(const Point& p);

/// Point with standard coordinates `center` and scale-0 offsets `offsets`.
Point make_point(const std::vector<Rational>& center, const std::vector<long long>& offsets, int depth);

/// All offset tuples in [-half_width, half_width]^axes, lexicographic.
std::vector<std::vector<long long>> window_offsets(int half_width, int axes);

MonadSite site_add(const MonadSite& a, const MonadSite& b);

/// Class of the site in the quotient by Mon(0): its standard coordinate.
Rational quotient_rep(const MonadSite& s);

/// Multiplies a pure-offset site by lambda^-from_scale, moving the offset at
/// scale j to scale j - from_scale. ScaleOverflow when an offset would move
/// below scale 0.
MonadSite rescale(const MonadSite& s, int from_scale);

/// Inverse of rescale: multiplies by lambda^to_scale. ScaleOverflow when an
/// offset would move past scale L-1.
MonadSite unrescale(const MonadSite& s, int to_scale);

struct TransitivityResult {
  bool chain_ok = false;
  bool endpoints_ok = false;
};

/// Chain x_i = i*step over the rationals with the error relation
/// |x - y| <= error.
TransitivityResult transitivity_demo(const Rational& step, const Rational& error, long long n_steps);

/// Same chain over Hyper values with the monad relation.
TransitivityResult transitivity_demo(const Hyper& step, long long n_steps);

/// The W = 2*half_width + 1 sites around the center of Mon(r), offsets at scale 0.
class MonadWindow {
 public:
  MonadWindow(Rational standard, int half_width, int depth);

  const MonadSite& center() const { return center_; }
  int half_width() const { return half_width_; }
  int size() const { return 2 * half_width_ + 1; }

  MonadSite site(long long offset) const;
  std::vector<MonadSite> sites() const;
  bool contains(const MonadSite& s) const;

 private:
  MonadSite center_;
  int half_width_;
};

}  // namespace hyperlattice

#endif  // HYPERLATTICE_LATTICE_H
