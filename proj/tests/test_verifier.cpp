#include "doctest.h"

#include "cwl/checks.hpp"

#include <sstream>

using namespace cwl::checks;

TEST_CASE("registry holds the fixed check set in order") {
    const auto& ids = registry_ids();
    CHECK(ids.size() == 18);
    CHECK(ids.front() == "THM1");
    for (const auto& id : ids) CHECK(registry_has(id));
    CHECK(registry_has("THM5"));
    CHECK(registry_has("AUX-2.3.6"));
    CHECK_FALSE(registry_has("THM6"));
    CHECK(default_tolerance("REFL") > 0.0);
    CHECK_THROWS_AS((void)default_tolerance("THM6"), cwl::DomainError);
}

TEST_CASE("default_grid densification respects the regime") {
    for (const auto& id : registry_ids()) {
        auto base = default_grid(id, 1);
        CHECK(!base.empty());
        auto dense = default_grid(id, 3);
        CHECK(dense.size() >= base.size());
        for (const auto& s : dense) {
            CHECK(s.check_id == id);
            CHECK(params_in_regime(id, s.params));
        }
    }
    CHECK_THROWS_AS((void)default_grid("THM1", 0), cwl::DomainError);
}

TEST_CASE("run_check: passing check, unknown id, out-of-regime params") {
    auto specs = default_grid("REFL", 1);
    CheckResult r = run_check(specs.front());
    CHECK(r.check_id == "REFL");
    CHECK(r.passed);
    CHECK(r.abs_err <= r.tolerance * std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)}));
    CHECK(!r.lhs_source.empty());
    CHECK(!r.rhs_source.empty());
    CHECK(r.wall_time >= 0.0);

    CheckSpec bogus{"THM6", {}, 1e-6, {}};
    CHECK_THROWS_AS((void)run_check(bogus), cwl::DomainError);

    CheckSpec bad = specs.front();
    bad.params["lambda"] = -3.0;
    CHECK_THROWS_AS((void)run_check(bad), cwl::DomainError);
}

TEST_CASE("parse_config: valid input") {
    std::istringstream in(
        "# suite options\n"
        "checks = THM1, REFL\n"
        "grid_scale = 2\n"
        "out = /tmp/cwl-reports\n"
        "format = json\n"
        "\n"
        "[REFL]\n"
        "tolerance = 1e-9\n"
        "point = sigma=-0.25 rho=0.5 lambda=1.5\n"
        "point = sigma=-0.3 rho=1.0 lambda=2.0\n");
    SuiteConfig cfg = parse_config(in);
    CHECK(cfg.enabled == std::vector<std::string>{"THM1", "REFL"});
    CHECK(cfg.grid_scale == 2);
    CHECK(cfg.out_dir == "/tmp/cwl-reports");
    CHECK(cfg.format == "json");
    CHECK(cfg.tolerance_override.at("REFL") == 1e-9);
    REQUIRE(cfg.points_override.at("REFL").size() == 2);
    CHECK(cfg.points_override.at("REFL")[0].at("lambda") == 1.5);
}

TEST_CASE("parse_config: malformed input throws ConfigError") {
    auto reject = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS((void)parse_config(in), ConfigError);
    };
    reject("format = yaml\n");
    reject("grid_scale = zero\n");
    reject("checks = THM1, NOPE\n");
    reject("[NOPE]\ntolerance = 1e-6\n");
    reject("[THM1]\npoint = lambda\n");
    reject("stray line without equals\n");
    CHECK_THROWS_AS((void)parse_config_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("to_json / to_csv: schema and determinism") {
    auto specs = default_grid("AUX-2.5.48", 1);
    std::vector<CheckResult> results{run_check(specs.front())};
    results[0].wall_time = 0.0; // pinned: wall time is the one nondeterministic field

    std::string js = to_json(results);
    for (const char* key : {"\"check_id\"", "\"params\"", "\"lhs\"", "\"rhs\"",
                            "\"re\"", "\"im\"", "\"abs_err\"", "\"rel_err\"",
                            "\"passed\"", "\"lhs_source\"", "\"rhs_source\"",
                            "\"wall_time\"", "\"tolerance\"", "\"note\""})
        CHECK(js.find(key) != std::string::npos);

    std::string csv = to_csv(results);
    CHECK(csv.rfind("check_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
                    "tolerance,passed,lhs_source,rhs_source,wall_time,note", 0) == 0);

    // Same inputs, byte-identical reports.
    std::vector<CheckResult> again{run_check(specs.front())};
    again[0].wall_time = 0.0;
    CHECK(to_json(again) == js);
    CHECK(to_csv(again) == csv);
}

TEST_CASE("run_suite writes reports and reports failures in the exit code") {
    std::ostringstream log;
    SuiteConfig cfg;
    cfg.enabled = {"AUX-2.5.48"};
    cfg.out_dir = "test-reports-tmp";
    cfg.format = "both";
    CHECK(run_suite(cfg, log) == 0);
    CHECK(log.str().find("AUX-2.5.48") != std::string::npos);

    // An impossible tolerance must flip the exit code, not throw.
    cfg.tolerance_override["AUX-2.5.48"] = 1e-30;
    std::ostringstream log2;
    CHECK(run_suite(cfg, log2) == 1);
}
