#ifndef HYPERLATTICE_REPORT_H
#define HYPERLATTICE_REPORT_H

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hyperlattice {

/// One checked identity.
struct Record {
  std::string id;
  std::string paper_anchor;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string expected;
  std::string got;
  bool pass = false;
  std::optional<std::string> witness;
  double elapsed_ms = 0;
};

struct Outcome {
  std::string expected;
  std::string got;
  bool pass = false;
  std::string witness;  // empty: the got value serves as witness
};

/// pass iff the renderings agree.
Outcome same(std::string expected, std::string got);

struct Report {
  std::string suite;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<Record> results;

  std::size_t passed() const;
  std::size_t failed() const { return results.size() - passed(); }
  bool ok() const { return failed() == 0; }

  /// Runs `body`, timing it; an exception becomes a failing record whose
  /// witness is the error message.
  void check(std::string id, std::string anchor, nlohmann::ordered_json inputs, const std::function<Outcome()>& body);

  void append(const Report& other);

  /// Schema-conforming document; timing fields are omitted when
  /// `timing` is false so identical inputs give identical bytes.
  nlohmann::ordered_json to_json(bool timing = true) const;
};

}  // namespace hyperlattice

#endif  // HYPERLATTICE_REPORT_H
