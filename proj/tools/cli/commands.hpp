#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "config.hpp"
#include "cosserat/report.hpp"

namespace cosserat::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitNumericalFailure = 2,
    kExitVerificationFailure = 3,
};

struct CommandOptions {
    std::filesystem::path out = ".";
    bool svg = false;
    std::ostream* log = nullptr;  ///< progress and summaries; null is silent
};

/// timeseries.csv and, when sim.output_every > 0, snapshots/step_NNNNNNNN.csv.
int cmd_simulate(const ScenarioConfig& c, const CommandOptions& opt);
/// dispersion.csv, velocity_ratio.csv and optionally dispersion.svg, velocity_ratio.svg.
int cmd_dispersion(const ScenarioConfig& c, const CommandOptions& opt);
/// homogeneous.csv (one row per evaluated angle) and homogeneous_roots.csv.
int cmd_homogeneous(const ScenarioConfig& c, const CommandOptions& opt);
/// report.csv and notes.csv for the full identity suite; exit 3 on any failure.
int cmd_verify(const ScenarioConfig& c, const CommandOptions& opt);
/// report.csv and notes.csv for the 3D reduction checks only.
int cmd_reduce3d(const ScenarioConfig& c, const CommandOptions& opt);

VerificationReport verification_suite(const ScenarioConfig& c);
VerificationReport reduction_suite(const ScenarioConfig& c);

/// Loads the config, dispatches on name and maps errors to exit codes:
/// ConfigError and IoError give 1, any other library error gives 2.
int run_command(std::string_view name, const std::filesystem::path& config, const CommandOptions& opt);

}  // namespace cosserat::cli
