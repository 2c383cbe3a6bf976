#ifndef QHILB_REPORT_HPP
#define QHILB_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhilb::cli
{

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string details;
};

struct RunReport {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckResult> results;
    long elapsed_ms = 0;

    bool passed() const;
    // {"command", "parameters", "results": [{"name", "status", "details"}], "elapsed_ms", "status"}
    nlohmann::json to_json() const;
    // One "PASS|FAIL  name  details" line per result and a summary line.
    std::string to_text() const;
};

struct VerifyOptions {
    std::optional<std::filesystem::path> cache_dir;
    // Added to every triangle weight w(l) before pairing. Nonzero only in
    // mutation tests.
    long triangle_weight_offset = 0;
    // Run the per-p suites on separate threads.
    bool parallel = true;
};

// Every check of the suite for each p, in the order of ps; then the
// p-independent Jacobi triple product check.
RunReport run_verify(const std::vector<int> &ps, int order, const VerifyOptions &options = {});

// Only the generating-function identities.
RunReport run_identities(const std::vector<int> &ps, int order, const VerifyOptions &options = {});

} // namespace qhilb::cli

#endif
