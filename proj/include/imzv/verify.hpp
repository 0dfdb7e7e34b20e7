// Verification suites: each runs one identity over a parameter grid and
// reports every case where the two sides disagree.
#ifndef IMZV_VERIFY_HPP
#define IMZV_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace imzv {

struct VerifyFailure {
    nlohmann::json params;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> diff;
};

struct VerifyReport {
    std::string suite;
    int cases_total = 0;
    int cases_passed = 0;
    std::vector<VerifyFailure> failures;  // sorted by parameters
    double wall_time_s = 0.0;

    bool ok() const { return cases_passed == cases_total; }
    nlohmann::json to_json() const;  // {"schema": 1, suite, cases_total, ...}
    static VerifyReport from_json(const nlohmann::json& j);
    std::string to_text() const;
};

// Grid bounds and seeds; unset values take the suite's defaults.
struct VerifyOptions {
    std::optional<long> max;         // general bound (lemma31, eq42, eq48, euler, cor42, prop43, ...)
    std::optional<long> r, s;        // theorem22: depth bounds
    std::optional<long> max_exp;     // theorem22 / height2: exponent bound
    std::optional<long> k, p;        // prop41 / cor42 / prop43: single k or p
    std::optional<long> count;       // homomorphism-numeric: number of pairs
    std::optional<long> max_weight;  // numeric suites
    std::optional<double> tol;       // numeric suites
    std::uint64_t seed = 20240601;   // randomized suites
};

// Names accepted by run_suite, in a stable order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite or invalid bounds.
VerifyReport run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace imzv

#endif  // IMZV_VERIFY_HPP
