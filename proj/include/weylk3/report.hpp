#pragma once

#include <functional>
#include <string>
#include <vector>

namespace weylk3 {

struct CheckResult {
    std::string id;
    std::string anchor;      // which computation/fact this reproduces
    std::string expected;    // printable expected value with its provenance
    std::string computed;
    std::string provenance;  // published | definition | recomputed
    bool pass = false;
    double seconds = 0.0;
};

struct CheckDef {
    std::string id;
    std::string suite;  // core | schemes | extended
    std::function<std::vector<CheckResult>()> run;
};

// the full catalog, sorted by id
const std::vector<CheckDef>& check_catalog();

// run a selection; results sorted by id
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids);
std::vector<std::string> suite_ids(const std::string& suite);

std::string results_to_jsonl(const std::vector<CheckResult>& results, bool with_timing);
std::string results_to_table(const std::vector<CheckResult>& results);

}  // namespace weylk3
