#include "downup/report.hpp"

#include "json.hpp"

#include <sstream>

namespace downup::report {

int status_from_checks(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return 2;
    return 0;
}

std::string to_json(const Report& r) {
    nlohmann::json root;
    root["command"] = r.command;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    root["parameters"] = std::move(params);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json entry;
        entry["name"] = c.name;
        entry["status"] = c.pass ? "pass" : "fail";
        nlohmann::json details = nlohmann::json::object();
        for (const auto& [k, v] : c.details) details[k] = v;
        entry["details"] = std::move(details);
        checks.push_back(std::move(entry));
    }
    root["checks"] = std::move(checks);
    root["exit_status"] = r.exit_status;
    return root.dump(2) + "\n";
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    if (!r.parameters.empty()) {
        out << "parameters:\n";
        for (const auto& [k, v] : r.parameters) out << "  " << k << ": " << v << "\n";
    }
    for (const auto& c : r.checks) {
        out << "check " << c.name << ": " << (c.pass ? "pass" : "fail") << "\n";
        for (const auto& [k, v] : c.details) out << "  " << k << ": " << v << "\n";
    }
    out << "exit_status: " << r.exit_status << "\n";
    return out.str();
}

}  // namespace downup::report
