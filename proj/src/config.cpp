#include "hyperlattice/config.h"

#include <sstream>
#include <stdexcept>

namespace hyperlattice {

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text)) out.push_back(parse_rational(item));
  return out;
}

std::vector<long long> parse_integer_list(const std::string& text) {
  std::vector<long long> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("malformed integer: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

void Config::validate() const {
  if (n < 1 || n > 4) throw std::invalid_argument("n must be in 1..4");
  if (half_width < 0 || half_width > 6) throw std::invalid_argument("window size must be an odd number in 1..13");
  if (scales < 1 || scales > 4) throw std::invalid_argument("scales must be in 1..4");
  if (grid.empty()) throw std::invalid_argument("grid must not be empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw std::invalid_argument("grid must be strictly increasing");
  }
  if (oracle_max_dim < 1) throw std::invalid_argument("oracle.max_dim must be positive");
  if (!(boost_t > 0)) throw std::invalid_argument("boost parameter t must be positive");
  if (triple.size() != 3 || triple[0] * triple[0] + triple[1] * triple[1] != triple[2] * triple[2] || triple[2] == 0) {
    throw std::invalid_argument("rotation triple must satisfy a^2 + b^2 = c^2 with c != 0");
  }
  if (metric != "mink" && metric != "euclid") throw std::invalid_argument("metric must be 'mink' or 'euclid'");
  if (dl.empty()) throw std::invalid_argument("dl must not be empty");
}

nlohmann::ordered_json Config::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["window"] = {{"half_width", half_width}, {"size", window_size()}};
  j["scales"] = scales;
  auto& g = j["grid"] = nlohmann::ordered_json::array();
  for (const auto& r : grid) g.push_back(to_string(r));
  j["oracle"] = {{"max_dim", oracle_max_dim}};
  j["t"] = to_string(boost_t);
  j["triple"] = triple;
  j["delta"] = to_string(delta);
  j["dl"] = dl;
  j["metric"] = metric;
  j["seed"] = seed;
  return j;
}

Config Config::from_json(const nlohmann::json& j, Config base) {
  const auto rational = [](const nlohmann::json& v) {
    return v.is_string() ? parse_rational(v.get<std::string>()) : to_rational(v.get<long long>());
  };
  if (j.contains("n")) base.n = j.at("n").get<int>();
  if (j.contains("window")) {
    const auto& w = j.at("window");
    if (w.contains("half_width")) base.half_width = w.at("half_width").get<int>();
    if (w.contains("size")) {
      const int size = w.at("size").get<int>();
      if (size < 1 || size % 2 == 0) throw std::invalid_argument("window.size must be odd and positive");
      base.half_width = (size - 1) / 2;
    }
  }
  if (j.contains("scales")) base.scales = j.at("scales").get<int>();
  if (j.contains("grid")) {
    base.grid.clear();
    for (const auto& v : j.at("grid")) base.grid.push_back(rational(v));
  }
  if (j.contains("oracle") && j.at("oracle").contains("max_dim")) {
    base.oracle_max_dim = j.at("oracle").at("max_dim").get<std::size_t>();
  }
  if (j.contains("t")) base.boost_t = rational(j.at("t"));
  if (j.contains("triple")) base.triple = j.at("triple").get<std::vector<long long>>();
  if (j.contains("delta")) base.delta = rational(j.at("delta"));
  if (j.contains("dl")) base.dl = j.at("dl").get<std::vector<long long>>();
  if (j.contains("metric")) base.metric = j.at("metric").get<std::string>();
  if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
  return base;
}

}  // namespace hyperlattice
