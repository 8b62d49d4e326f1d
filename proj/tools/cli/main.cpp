#include <iostream>
#include <string>

#include <CLI/CLI.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Planar Cosserat elasticity: simulation, dispersion and identity checks"};
    app.require_subcommand(1);

    std::string config;
    std::string out = ".";
    bool svg = false;

    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out, "Output directory");
        return sub;
    };
    add("simulate", "Integrate the equations of motion and write energies and snapshots");
    add("dispersion", "Sweep plane-wave branches over k")->add_flag("--svg", svg, "Also write SVG plots");
    add("homogeneous", "Homogeneous rotation roots and residuals");
    add("verify", "Run the full identity suite");
    add("reduce3d", "Run the 3D reduction checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cosserat::cli::kExitConfigError;
    }

    cosserat::cli::CommandOptions opt;
    opt.out = out;
    opt.svg = svg;
    opt.log = &std::cout;
    return cosserat::cli::run_command(app.get_subcommands().front()->get_name(), config, opt);
}
