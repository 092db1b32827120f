#include "hyperlattice/report.h"

#include <algorithm>
#include <chrono>
#include <exception>

namespace hyperlattice {

Outcome same(std::string expected, std::string got) {
  const bool pass = expected == got;
  return Outcome{std::move(expected), std::move(got), pass, {}};
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const Record& r) { return r.pass; }));
}

void Report::check(std::string id, std::string anchor, nlohmann::ordered_json inputs,
                   const std::function<Outcome()>& body) {
  Record r;
  r.id = std::move(id);
  r.paper_anchor = std::move(anchor);
  r.inputs = inputs.is_null() ? nlohmann::ordered_json::object() : std::move(inputs);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    r.expected = std::move(o.expected);
    r.got = std::move(o.got);
    r.pass = o.pass;
    if (!r.pass) r.witness = o.witness.empty() ? r.got : std::move(o.witness);
  } catch (const std::exception& e) {
    r.pass = false;
    r.got = "error";
    r.witness = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  results.push_back(std::move(r));
}

void Report::append(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

nlohmann::ordered_json Report::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = config;
  auto& rows = j["results"] = nlohmann::ordered_json::array();
  double total = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["paper_anchor"] = r.paper_anchor;
    row["inputs"] = r.inputs;
    row["pass"] = r.pass;
    row["expected"] = r.expected;
    row["got"] = r.got;
    if (r.witness) row["witness"] = *r.witness;
    if (timing) row["elapsed_ms"] = r.elapsed_ms;
    total += r.elapsed_ms;
    rows.push_back(std::move(row));
  }
  j["summary"] = {{"total", results.size()}, {"passed", passed()}, {"failed", failed()}};
  if (timing) j["summary"]["elapsed_ms"] = total;
  return j;
}

}  // namespace hyperlattice
