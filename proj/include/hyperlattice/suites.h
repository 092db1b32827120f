#ifndef HYPERLATTICE_SUITES_H
#define HYPERLATTICE_SUITES_H

#include <string>
#include <vector>

#include "hyperlattice/config.h"
#include "hyperlattice/report.h"

namespace hyperlattice {

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" runs every suite concurrently and merges the
/// records in suite_names() order with ids prefixed by the suite name.
/// UnknownSuite for any other name.
Report run_suite(const std::string& name, const Config& config);

}  // namespace hyperlattice

#endif  // HYPERLATTICE_SUITES_H
