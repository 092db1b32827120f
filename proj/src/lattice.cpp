#include "hyperlattice/lattice.h"

#include <sstream>
#include <stdexcept>

#include "hyperlattice/errors.h"

namespace hyperlattice {

void LatticeSpec::validate() const {
  if (half_width < 0) throw std::invalid_argument("window half width must be non-negative");
  (void)tower();
}

MonadSite::MonadSite(Rational standard, std::vector<long long> offsets)
    : standard_(std::move(standard)), offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw std::invalid_argument("a monad site needs at least one scale");
  standard_.canonicalize();
}

MonadSite MonadSite::center(const Rational& standard, int depth) {
  return MonadSite(standard, std::vector<long long>(static_cast<std::size_t>(depth), 0));
}

Hyper MonadSite::value(Window window) const {
  Hyper v(standard_, window);
  const int depth = this->depth();
  for (int l = 0; l < depth; ++l) {
    if (offsets_[l] != 0) v += Hyper::monomial(to_rational(offsets_[l]), depth - l, window);
  }
  return v;
}

std::strong_ordering operator<=>(const MonadSite& a, const MonadSite& b) {
  if (auto c = compare(a.standard_, b.standard_); c != 0) return c;
  return a.offsets_ <=> b.offsets_;
}

std::string MonadSite::str() const {
  std::ostringstream os;
  os << "site(" << to_string(standard_) << ';';
  for (std::size_t i = 0; i < offsets_.size(); ++i) os << (i ? ", " : " ") << offsets_[i];
  os << ')';
  return os.str();
}

std::string to_string(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].str();
  }
  return out;
}

Point make_point(const std::vector<Rational>& center, const std::vector<long long>& offsets, int depth) {
  if (center.size() != offsets.size()) throw DimensionError("point needs one offset per axis");
  Point p;
  p.reserve(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) {
    std::vector<long long> m(static_cast<std::size_t>(depth), 0);
    m[0] = offsets[i];
    p.emplace_back(center[i], std::move(m));
  }
  return p;
}

std::vector<std::vector<long long>> window_offsets(int half_width, int axes) {
  std::vector<std::vector<long long>> out{{}};
  for (int a = 0; a < axes; ++a) {
    std::vector<std::vector<long long>> next;
    for (const auto& prefix : out) {
      for (long long l = -half_width; l <= half_width; ++l) {
        next.push_back(prefix);
        next.back().push_back(l);
      }
    }
    out = std::move(next);
  }
  return out;
}

MonadSite site_add(const MonadSite& a, const MonadSite& b) {
  if (a.depth() != b.depth()) {
    throw DimensionError("site_add: depths " + std::to_string(a.depth()) + " and " +
                         std::to_string(b.depth()) + " differ");
  }
  std::vector<long long> offsets(a.offsets());
  for (std::size_t l = 0; l < offsets.size(); ++l) offsets[l] += b.offsets()[l];
  return MonadSite(a.standard() + b.standard(), std::move(offsets));
}

Rational quotient_rep(const MonadSite& s) { return s.standard(); }

namespace {

void check_pure_offset(const MonadSite& s, int scale) {
  if (s.standard() != 0) throw std::invalid_argument("rescaling applies to pure-offset sites (r = 0)");
  if (scale < 1 || scale > s.depth() - 1) {
    throw std::out_of_range("rescale scale " + std::to_string(scale) + " outside 1.." +
                            std::to_string(s.depth() - 1));
  }
}

}  // namespace

MonadSite rescale(const MonadSite& s, int from_scale) {
  check_pure_offset(s, from_scale);
  const auto& in = s.offsets();
  std::vector<long long> out(in.size(), 0);
  for (int l = 0; l < s.depth(); ++l) {
    if (in[l] == 0) continue;
    if (l - from_scale < 0) {
      throw ScaleOverflow("offset " + std::to_string(in[l]) + " at scale " + std::to_string(l) +
                          " leaves the scale hierarchy when rescaled by lambda^-" +
                          std::to_string(from_scale));
    }
    out[l - from_scale] = in[l];
  }
  return MonadSite(Rational(0), std::move(out));
}

MonadSite unrescale(const MonadSite& s, int to_scale) {
  check_pure_offset(s, to_scale);
  const auto& in = s.offsets();
  std::vector<long long> out(in.size(), 0);
  for (int l = 0; l < s.depth(); ++l) {
    if (in[l] == 0) continue;
    if (l + to_scale >= s.depth()) {
      throw ScaleOverflow("offset " + std::to_string(in[l]) + " at scale " + std::to_string(l) +
                          " leaves the scale hierarchy when rescaled by lambda^" +
                          std::to_string(to_scale));
    }
    out[l + to_scale] = in[l];
  }
  return MonadSite(Rational(0), std::move(out));
}

TransitivityResult transitivity_demo(const Rational& step, const Rational& error, long long n_steps) {
  if (step < 0 || error < 0) throw std::invalid_argument("step and error must be non-negative");
  const auto related = [&](const Rational& x, const Rational& y) { return abs(x - y) <= error; };
  TransitivityResult result{true, true};
  Rational x(0);
  const Rational first = x;
  for (long long i = 0; i < n_steps; ++i) {
    Rational next = x + step;
    if (!related(x, next)) result.chain_ok = false;
    x = std::move(next);
  }
  result.endpoints_ok = related(first, x);
  return result;
}

TransitivityResult transitivity_demo(const Hyper& step, long long n_steps) {
  TransitivityResult result{true, true};
  Hyper x(Rational(0), step.window());
  const Hyper first = x;
  for (long long i = 0; i < n_steps; ++i) {
    Hyper next = x;
    next += step;
    if (!monad_equiv(x, next)) result.chain_ok = false;
    x = std::move(next);
  }
  result.endpoints_ok = monad_equiv(first, x);
  return result;
}

MonadWindow::MonadWindow(Rational standard, int half_width, int depth)
    : center_(MonadSite::center(standard, depth)), half_width_(half_width) {
  if (half_width < 0) throw std::invalid_argument("window half width must be non-negative");
}

MonadSite MonadWindow::site(long long offset) const {
  if (offset < -half_width_ || offset > half_width_) {
    throw OutOfWindow("offset " + std::to_string(offset) + " outside -" + std::to_string(half_width_) +
                      ".." + std::to_string(half_width_));
  }
  std::vector<long long> offsets(center_.offsets());
  offsets[0] = offset;
  return MonadSite(center_.standard(), std::move(offsets));
}

std::vector<MonadSite> MonadWindow::sites() const {
  std::vector<MonadSite> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (long long l = -half_width_; l <= half_width_; ++l) out.push_back(site(l));
  return out;
}

bool MonadWindow::contains(const MonadSite& s) const {
  if (s.standard() != center_.standard() || s.depth() != center_.depth()) return false;
  for (int l = 1; l < s.depth(); ++l) {
    if (s.offsets()[l] != 0) return false;
  }
  return s.offsets()[0] >= -half_width_ && s.offsets()[0] <= half_width_;
}

}  // namespace hyperlattice
