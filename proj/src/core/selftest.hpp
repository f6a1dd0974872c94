#pragma once

#include <string>

namespace domcert {

struct SelfTestReport {
    bool ok = false;
    std::string json;
};

// Re-runs the engine's internal consistency checks and returns a JSON
// report. The checks are split into units that may run on any number of
// threads; the report is byte-identical for every jobs value.
SelfTestReport run_selftest(int jobs);

}  // namespace domcert
