#include "thermolen/config.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitConfig = 64;
constexpr int kExitNumeric = 70;

int do_run(const thermolen::RunConfig& cfg) {
    const thermolen::RunResult result = thermolen::run_to_file(cfg);
    std::cout << "wrote " << result.rows << " rows to " << result.out_path << "\n";
    for (const std::string& w : result.warnings) std::cout << "warning: " << w << "\n";
    if (!result.violations.empty()) {
        for (const std::string& v : result.violations)
            std::cerr << "violation: " << v << "\n";
        return kExitViolation;
    }
    return 0;
}

int do_check(const std::string& path) {
    thermolen::RunConfig cfg;
    try {
        cfg = thermolen::load_config(path);
    } catch (const thermolen::ConfigError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitConfig;
    }
    const thermolen::CheckReport rep = thermolen::check_config(cfg);
    for (const std::string& e : rep.errors) std::cerr << "error: " << e << "\n";
    for (const std::string& w : rep.warnings) std::cout << "warning: " << w << "\n";
    if (rep.ok) {
        std::cout << "ok\n";
        return 0;
    }
    return kExitConfig;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy production of the driven quantum oscillator, with "
                 "thermodynamic-length bounds"};
    app.require_subcommand(1);

    std::string run_config, check_config_path;
    std::string fig1_out = "figure1.csv", fig2_out = "figure2.csv";

    CLI::App* cmd_run = app.add_subcommand("run", "evaluate a config and write a CSV");
    cmd_run->add_option("config", run_config, "key=value config file")->required();

    CLI::App* cmd_check = app.add_subcommand("check", "validate a config without computing");
    cmd_check->add_option("config", check_config_path, "key=value config file")->required();

    CLI::App* cmd_fig1 =
        app.add_subcommand("figure1", "entropy production and Bures bounds against Q*");
    cmd_fig1->add_option("--out", fig1_out, "CSV destination");

    CLI::App* cmd_fig2 =
        app.add_subcommand("figure2", "sudden-switch frequency sweep with the trace bound");
    cmd_fig2->add_option("--out", fig2_out, "CSV destination");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (cmd_run->parsed()) return do_run(thermolen::load_config(run_config));
        if (cmd_check->parsed()) return do_check(check_config_path);
        if (cmd_fig1->parsed()) {
            thermolen::RunConfig cfg = thermolen::figure1_config();
            cfg.out_path = fig1_out;
            return do_run(cfg);
        }
        if (cmd_fig2->parsed()) {
            thermolen::RunConfig cfg = thermolen::figure2_config();
            cfg.out_path = fig2_out;
            return do_run(cfg);
        }
    } catch (const thermolen::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const thermolen::Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
