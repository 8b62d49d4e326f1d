#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cosserat/dynamics.hpp"
#include "cosserat/fields.hpp"
#include "cosserat/material.hpp"

namespace cosserat::cli {

struct SimSettings {
    double dt = 0.0;  ///< 0 selects 0.1 * stable_dt_estimate
    int steps = 100;
    int output_every = 0;  ///< snapshot period in steps, 0 disables snapshots
    double eps_reg = 1e-8;
    Equations equations = Equations::Full;

    friend bool operator==(const SimSettings&, const SimSettings&) = default;
};

struct WaveSettings {
    double k_min = 0.5;
    double k_max = 20.0;
    int k_steps = 40;
    double ratio_max = 20.0;
    int ratio_samples = 201;

    friend bool operator==(const WaveSettings&, const WaveSettings&) = default;
};

enum class InitialKind { Zero, RandomSmooth, PlaneWave };

struct InitialSpec {
    InitialKind kind = InitialKind::RandomSmooth;
    std::uint64_t seed = 2;
    double amplitude = 0.05;
    int modes = 3;
    double k = 6.283185307179586;
    int branch = 0;

    friend bool operator==(const InitialSpec&, const InitialSpec&) = default;
};

struct VerifySettings {
    double tolerance_scale = 1.0;
    int fd_nodes = 50;
    std::uint64_t seed = 12345;

    friend bool operator==(const VerifySettings&, const VerifySettings&) = default;
};

/// Scenario loaded from JSON.  Every key is optional; unknown keys are
/// rejected.  material.liu.A, when present, sets the chiral constants with
/// MaterialParams::liu_preset.
struct ScenarioConfig {
    MaterialParams material = default_material();
    std::optional<double> liu_A = 0.2;
    ModelSelector model;
    Grid grid{32, 32, 1.0, 1.0};
    SimSettings sim;
    WaveSettings wave;
    InitialSpec initial;
    VerifySettings verify;

    static MaterialParams default_material();

    Model make_model() const;
    /// sim.dt, or 0.1 * stable_dt_estimate when sim.dt is 0.
    double time_step() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws ConfigError on malformed JSON, wrong types, unknown keys or
/// invalid values.
ScenarioConfig parse_config(std::string_view json_text);
/// Throws IoError when the file cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path);
/// Complete JSON document; parse_config(dump_config(c)) == c.
std::string dump_config(const ScenarioConfig& c);

FieldState initial_state(const ScenarioConfig& c);

}  // namespace cosserat::cli
