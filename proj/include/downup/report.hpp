#pragma once

#include <string>
#include <utility>
#include <vector>

namespace downup::report {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> details;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckResult> checks;
    int exit_status = 0;
};

// 0 when every check passed, 2 otherwise.
int status_from_checks(const std::vector<CheckResult>& checks);

// Deterministic JSON with sorted object keys, two-space indent, and a
// trailing newline. Identical reports serialize to identical bytes.
std::string to_json(const Report& r);

// Plain-text rendering, one "key: value" line per entry.
std::string to_text(const Report& r);

}  // namespace downup::report
