#include "config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cosserat/errors.hpp"
#include "cosserat/initial.hpp"
#include "cosserat/waves.hpp"

namespace cosserat::cli {
namespace {

using nlohmann::json;

void expect_object(const json& j, std::string_view where) {
    if (!j.is_object()) throw ConfigError(fmt::format("'{}' must be an object", where));
}

void reject_unknown(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (std::string_view a : allowed) ok = ok || item.key() == a;
        if (!ok) throw ConfigError(fmt::format("unknown key '{}' in '{}'", item.key(), where));
    }
}

template <class T>
void read(const json& j, const char* key, T& out, std::string_view where) {
    const auto it = j.find(key);
    if (it == j.end()) return;
    try {
        out = it->template get<T>();
    } catch (const json::exception&) {
        throw ConfigError(fmt::format("'{}.{}' has the wrong type", where, key));
    }
}

double read_number(const json& j, const char* key, double fallback, std::string_view where) {
    read(j, key, fallback, where);
    return fallback;
}

template <class E, std::size_t N>
E read_enum(const json& j, const char* key, E fallback, std::string_view where,
            const std::array<std::pair<std::string_view, E>, N>& names) {
    std::string s;
    read(j, key, s, where);
    if (s.empty()) return fallback;
    for (const auto& [name, value] : names)
        if (s == name) return value;
    throw ConfigError(fmt::format("'{}.{}' has unsupported value '{}'", where, key, s));
}

constexpr std::array<std::pair<std::string_view, ModelKind>, 2> kKindNames{{
    {"nonchiral", ModelKind::NonChiral}, {"chiral", ModelKind::Chiral}}};
constexpr std::array<std::pair<std::string_view, CouplingKind>, 2> kCouplingNames{{
    {"polar", CouplingKind::Polar}, {"skew", CouplingKind::Skew}}};
constexpr std::array<std::pair<std::string_view, Equations>, 2> kEquationNames{{
    {"full", Equations::Full}, {"linearized", Equations::Linearized}}};
constexpr std::array<std::pair<std::string_view, InitialKind>, 3> kInitialNames{{
    {"zero", InitialKind::Zero}, {"random_smooth", InitialKind::RandomSmooth}, {"plane_wave", InitialKind::PlaneWave}}};

template <class E, std::size_t N>
std::string name_of(E value, const std::array<std::pair<std::string_view, E>, N>& names) {
    for (const auto& [name, v] : names)
        if (v == value) return std::string(name);
    return {};
}

void parse_material(const json& j, ScenarioConfig& c) {
    expect_object(j, "material");
    reject_unknown(j, "material",
                   {"mu", "lambda", "mu_c", "L_c", "chi", "rho", "rho_rot", "mu_s", "lambda_s", "mu_c_s", "m1", "m2",
                    "m3", "mu_c1", "liu"});
    MaterialParams& p = c.material;
    read(j, "mu", p.mu, "material");
    read(j, "lambda", p.lambda, "material");
    read(j, "mu_c", p.mu_c, "material");
    read(j, "L_c", p.L_c, "material");
    read(j, "chi", p.chi, "material");
    read(j, "rho", p.rho, "material");
    read(j, "rho_rot", p.rho_rot, "material");
    read(j, "m3", p.m3, "material");
    read(j, "mu_c1", p.mu_c1, "material");

    const auto liu = j.find("liu");
    if (liu != j.end() && liu->is_null()) {
        c.liu_A.reset();
    } else if (liu != j.end()) {
        expect_object(*liu, "material.liu");
        reject_unknown(*liu, "material.liu", {"A"});
        if (!liu->contains("A")) throw ConfigError("'material.liu' requires 'A'");
        c.liu_A = read_number(*liu, "A", 0.0, "material.liu");
    } else if (j.contains("mu_s") || j.contains("lambda_s") || j.contains("mu_c_s") || j.contains("m1") ||
               j.contains("m2")) {
        c.liu_A.reset();
    }

    if (c.liu_A) {
        p = MaterialParams::liu_preset(p, *c.liu_A);
        const std::initializer_list<std::pair<const char*, double>> fixed{
            {"mu_s", p.mu_s}, {"lambda_s", p.lambda_s}, {"mu_c_s", p.mu_c_s}, {"m1", p.m1}, {"m2", p.m2}};
        for (const auto& [key, value] : fixed)
            if (j.contains(key) && read_number(j, key, value, "material") != value)
                throw ConfigError(fmt::format("'material.{}' conflicts with 'material.liu'", key));
    } else {
        p.mu_s = p.lambda_s = p.mu_c_s = p.m1 = p.m2 = 0.0;
        read(j, "mu_s", p.mu_s, "material");
        read(j, "lambda_s", p.lambda_s, "material");
        read(j, "mu_c_s", p.mu_c_s, "material");
        read(j, "m1", p.m1, "material");
        read(j, "m2", p.m2, "material");
    }
    p.validate();
}

void parse_model(const json& j, ScenarioConfig& c) {
    expect_object(j, "model");
    reject_unknown(j, "model", {"kind", "coupling"});
    c.model.kind = read_enum(j, "kind", c.model.kind, "model", kKindNames);
    c.model.coupling = read_enum(j, "coupling", c.model.coupling, "model", kCouplingNames);
}

void parse_grid(const json& j, ScenarioConfig& c) {
    expect_object(j, "grid");
    reject_unknown(j, "grid", {"nx", "ny", "lx", "ly"});
    int nx = c.grid.nx, ny = c.grid.ny;
    double lx = c.grid.lx, ly = c.grid.ly;
    read(j, "nx", nx, "grid");
    read(j, "ny", ny, "grid");
    read(j, "lx", lx, "grid");
    read(j, "ly", ly, "grid");
    c.grid = Grid(nx, ny, lx, ly);
}

void parse_sim(const json& j, ScenarioConfig& c) {
    expect_object(j, "sim");
    reject_unknown(j, "sim", {"dt", "steps", "output_every", "eps_reg", "equations"});
    SimSettings& s = c.sim;
    read(j, "dt", s.dt, "sim");
    read(j, "steps", s.steps, "sim");
    read(j, "output_every", s.output_every, "sim");
    read(j, "eps_reg", s.eps_reg, "sim");
    s.equations = read_enum(j, "equations", s.equations, "sim", kEquationNames);
    if (!(s.dt >= 0.0) || !std::isfinite(s.dt)) throw ConfigError("'sim.dt' must be finite and nonnegative");
    if (s.steps < 0) throw ConfigError("'sim.steps' must be nonnegative");
    if (s.output_every < 0) throw ConfigError("'sim.output_every' must be nonnegative");
    if (!(s.eps_reg >= 0.0)) throw ConfigError("'sim.eps_reg' must be nonnegative");
}

void parse_wave(const json& j, ScenarioConfig& c) {
    expect_object(j, "wave");
    reject_unknown(j, "wave", {"k_min", "k_max", "k_steps", "ratio_max", "ratio_samples"});
    WaveSettings& w = c.wave;
    read(j, "k_min", w.k_min, "wave");
    read(j, "k_max", w.k_max, "wave");
    read(j, "k_steps", w.k_steps, "wave");
    read(j, "ratio_max", w.ratio_max, "wave");
    read(j, "ratio_samples", w.ratio_samples, "wave");
    if (!(w.k_min > 0.0) || !(w.k_max >= w.k_min)) throw ConfigError("'wave' requires 0 < k_min <= k_max");
    if (w.k_steps < 1) throw ConfigError("'wave.k_steps' must be at least 1");
    if (!(w.ratio_max > 0.0)) throw ConfigError("'wave.ratio_max' must be positive");
    if (w.ratio_samples < 2) throw ConfigError("'wave.ratio_samples' must be at least 2");
}

void parse_initial(const json& j, ScenarioConfig& c) {
    expect_object(j, "initial");
    reject_unknown(j, "initial", {"type", "seed", "amplitude", "modes", "k", "branch"});
    InitialSpec& s = c.initial;
    s.kind = read_enum(j, "type", s.kind, "initial", kInitialNames);
    read(j, "seed", s.seed, "initial");
    read(j, "amplitude", s.amplitude, "initial");
    read(j, "modes", s.modes, "initial");
    read(j, "k", s.k, "initial");
    read(j, "branch", s.branch, "initial");
    if (!std::isfinite(s.amplitude)) throw ConfigError("'initial.amplitude' must be finite");
    if (s.modes < 1) throw ConfigError("'initial.modes' must be at least 1");
    if (!(s.k > 0.0)) throw ConfigError("'initial.k' must be positive");
    if (s.branch < 0 || s.branch > 2) throw ConfigError("'initial.branch' must be 0, 1 or 2");
}

void parse_verify(const json& j, ScenarioConfig& c) {
    expect_object(j, "verify");
    reject_unknown(j, "verify", {"tolerance_scale", "fd_nodes", "seed"});
    VerifySettings& v = c.verify;
    read(j, "tolerance_scale", v.tolerance_scale, "verify");
    read(j, "fd_nodes", v.fd_nodes, "verify");
    read(j, "seed", v.seed, "verify");
    if (!(v.tolerance_scale >= 0.0)) throw ConfigError("'verify.tolerance_scale' must be nonnegative");
    if (v.fd_nodes < 1) throw ConfigError("'verify.fd_nodes' must be at least 1");
}

}  // namespace

MaterialParams ScenarioConfig::default_material() {
    MaterialParams p;
    p.mu = 1.0;
    p.lambda = 1.0;
    p.mu_c = 0.5;
    p.L_c = 0.1;
    p.chi = 0.6;
    return MaterialParams::liu_preset(p, 0.2);
}

Model ScenarioConfig::make_model() const {
    Model m;
    m.material = material;
    m.selector = model;
    m.eps_reg = sim.eps_reg;
    return m;
}

double ScenarioConfig::time_step() const {
    return sim.dt > 0.0 ? sim.dt : 0.1 * stable_dt_estimate(grid, material);
}

ScenarioConfig parse_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("malformed JSON: {}", e.what()));
    }
    expect_object(j, "config");
    reject_unknown(j, "config", {"material", "model", "grid", "sim", "wave", "initial", "verify"});

    ScenarioConfig c;
    if (j.contains("material")) parse_material(j["material"], c);
    if (j.contains("model")) parse_model(j["model"], c);
    if (j.contains("grid")) parse_grid(j["grid"], c);
    if (j.contains("sim")) parse_sim(j["sim"], c);
    if (j.contains("wave")) parse_wave(j["wave"], c);
    if (j.contains("initial")) parse_initial(j["initial"], c);
    if (j.contains("verify")) parse_verify(j["verify"], c);
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot read config '{}'", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ScenarioConfig& c) {
    const MaterialParams& p = c.material;
    json material = {{"mu", p.mu},         {"lambda", p.lambda},     {"mu_c", p.mu_c},     {"L_c", p.L_c},
                     {"chi", p.chi},       {"rho", p.rho},           {"rho_rot", p.rho_rot}, {"mu_s", p.mu_s},
                     {"lambda_s", p.lambda_s}, {"mu_c_s", p.mu_c_s}, {"m1", p.m1},         {"m2", p.m2},
                     {"m3", p.m3},         {"mu_c1", p.mu_c1}};
    material["liu"] = c.liu_A ? json{{"A", *c.liu_A}} : json(nullptr);

    const json j = {
        {"material", material},
        {"model", {{"kind", name_of(c.model.kind, kKindNames)}, {"coupling", name_of(c.model.coupling, kCouplingNames)}}},
        {"grid", {{"nx", c.grid.nx}, {"ny", c.grid.ny}, {"lx", c.grid.lx}, {"ly", c.grid.ly}}},
        {"sim",
         {{"dt", c.sim.dt},
          {"steps", c.sim.steps},
          {"output_every", c.sim.output_every},
          {"eps_reg", c.sim.eps_reg},
          {"equations", name_of(c.sim.equations, kEquationNames)}}},
        {"wave",
         {{"k_min", c.wave.k_min},
          {"k_max", c.wave.k_max},
          {"k_steps", c.wave.k_steps},
          {"ratio_max", c.wave.ratio_max},
          {"ratio_samples", c.wave.ratio_samples}}},
        {"initial",
         {{"type", name_of(c.initial.kind, kInitialNames)},
          {"seed", c.initial.seed},
          {"amplitude", c.initial.amplitude},
          {"modes", c.initial.modes},
          {"k", c.initial.k},
          {"branch", c.initial.branch}}},
        {"verify",
         {{"tolerance_scale", c.verify.tolerance_scale}, {"fd_nodes", c.verify.fd_nodes}, {"seed", c.verify.seed}}},
    };
    return j.dump(2) + "\n";
}

FieldState initial_state(const ScenarioConfig& c) {
    switch (c.initial.kind) {
        case InitialKind::Zero: return FieldState(c.grid);
        case InitialKind::RandomSmooth:
            return random_smooth_state(c.grid, c.initial.seed, c.initial.amplitude, c.initial.modes);
        case InitialKind::PlaneWave:
            return plane_wave_state(c.grid, c.initial.k, c.initial.branch, c.initial.amplitude,
                                    WaveParams::from_material(c.material));
    }
    return FieldState(c.grid);
}

}  // namespace cosserat::cli
