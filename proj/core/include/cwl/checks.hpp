#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cwl/error.hpp"
#include "cwl/quad.hpp"

namespace cwl::checks {

struct CheckSpec {
    std::string check_id;
    std::map<std::string, double> params;
    double tolerance = 1e-6;
    QuadConfig quad_cfg{};
};

struct CheckResult {
    std::string check_id;
    std::map<std::string, double> params;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    std::string lhs_source;
    std::string rhs_source;
    double wall_time = 0.0; // seconds
    double tolerance = 0.0;
    std::string note;
};

// Registry order is fixed; reports list checks in this order.
const std::vector<std::string>& registry_ids();
bool registry_has(const std::string& id);

// Default tolerance for a registry check.
double default_tolerance(const std::string& id);

// Built-in grid for a check.  grid_scale >= 1; values above 1 densify the grid
// by linear interpolation between consecutive base points, dropping any
// interpolated point that leaves the check's regime.
std::vector<CheckSpec> default_grid(const std::string& id, int grid_scale = 1);

// True when params satisfy the check's regime predicate.
bool params_in_regime(const std::string& id, const std::map<std::string, double>& params);

// Evaluates one check.  Throws DomainError for an unknown id or params outside
// the regime; numerical trouble is reported in-band (passed=false + note).
CheckResult run_check(const CheckSpec& spec);

struct SuiteConfig {
    std::vector<std::string> enabled;          // empty = whole registry
    int grid_scale = 1;
    std::string out_dir = "reports";
    std::string format = "both";               // json | csv | both
    std::map<std::string, double> tolerance_override;
    std::map<std::string, std::vector<std::map<std::string, double>>> points_override;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plain-text config: top-level `key = value` lines plus [CHECK-ID] sections
// holding `tolerance = ...` and repeated `point = name=value name=value ...`
// lines.  '#' starts a comment.  Malformed input throws ConfigError.
SuiteConfig parse_config(std::istream& in);
SuiteConfig parse_config_file(const std::string& path);

std::string to_json(const std::vector<CheckResult>& results);
std::string to_csv(const std::vector<CheckResult>& results);

// Runs the configured checks, writes reports, logs one line per result.
// Returns 0 when all pass, 1 otherwise.
int run_suite(const SuiteConfig& cfg, std::ostream& log);

} // namespace cwl::checks
