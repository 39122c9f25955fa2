#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asmdpp {

struct CheckResult {
    std::string name;
    std::string params;
    bool passed = false;
    std::string detail;  // failure reason, empty on success
    double elapsed_ms = 0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    // Overrides every size cap of a suite when set.
    std::optional<std::size_t> max_n;
    std::uint64_t seed = 1;
};

// theorem1, counting, table, sixvertex, ik, lgv, omega, aux, oscillating,
// m0, symmetry, parity, boundary
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts);
// Suites run concurrently; results come back in suite_names() order.
std::vector<VerifyReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opts);

std::string format_text(const std::vector<VerifyReport>& reports, bool timing = false);
std::string format_json(const std::vector<VerifyReport>& reports, bool timing = false);

}  // namespace asmdpp
