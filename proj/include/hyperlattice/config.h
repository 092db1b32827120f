#ifndef HYPERLATTICE_CONFIG_H
#define HYPERLATTICE_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperlattice/lattice.h"
#include "json.hpp"

namespace hyperlattice {

/// Run configuration shared by every suite. Precedence when assembled by the
/// CLI: flags over config file over these defaults.
struct Config {
  int n = 2;
  int half_width = 1;  // window size W = 2*half_width + 1
  int scales = 2;
  std::vector<Rational> grid{0, 1, 2};
  std::size_t oracle_max_dim = 4096;

  Rational boost_t = 2;
  std::vector<long long> triple{3, 4, 5};
  Rational delta = 1;
  std::vector<long long> dl{3, 2};
  std::string metric = "mink";
  std::uint64_t seed = 20240611;

  int window_size() const { return 2 * half_width + 1; }
  LatticeSpec spec() const { return LatticeSpec{half_width, scales, {}}; }

  /// Throws std::invalid_argument on inconsistent values.
  void validate() const;

  nlohmann::ordered_json to_json() const;
  /// Overlays the keys present in `j` onto `base`. Window keys:
  /// "window": {"half_width": h} or "window": {"size": W}.
  static Config from_json(const nlohmann::json& j, Config base);
};

/// "r1,r2,..." into rationals.
std::vector<Rational> parse_rational_list(const std::string& text);
/// "a,b,..." into integers.
std::vector<long long> parse_integer_list(const std::string& text);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_CONFIG_H
