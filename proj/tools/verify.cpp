#include <iostream>

#include "CLI11.hpp"
#include "cwl/checks.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the Coulomb/Lorentz integral identities"};
    std::string config_path, check_list, out_dir, format;
    int grid_scale = 0;
    bool list = false;
    app.add_option("--config", config_path, "Config file (plain-text key/value)");
    app.add_option("--check", check_list, "Comma-separated check IDs to run");
    app.add_option("--grid-scale", grid_scale, "Grid densification factor (>= 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "Report output directory");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    app.add_flag("--list", list, "List registry check IDs and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& id : cwl::checks::registry_ids()) std::cout << id << "\n";
        return 0;
    }

    try {
        cwl::checks::SuiteConfig cfg;
        if (!config_path.empty()) cfg = cwl::checks::parse_config_file(config_path);
        if (!check_list.empty()) {
            cfg.enabled.clear();
            std::stringstream ss(check_list);
            std::string id;
            while (std::getline(ss, id, ',')) {
                if (!cwl::checks::registry_has(id)) {
                    std::cerr << "unknown check id: " << id << "\n";
                    return 2;
                }
                cfg.enabled.push_back(id);
            }
        }
        if (grid_scale > 0) cfg.grid_scale = grid_scale;
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!format.empty()) cfg.format = format;
        return cwl::checks::run_suite(cfg, std::cout);
    } catch (const cwl::checks::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
