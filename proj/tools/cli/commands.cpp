#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cosserat/csv.hpp"
#include "cosserat/dynamics.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/random.hpp"
#include "cosserat/reduction3d.hpp"
#include "cosserat/waves.hpp"
#include "svg.hpp"

namespace cosserat::cli {
namespace {

namespace fs = std::filesystem;

template <class... Args>
void log(const CommandOptions& opt, fmt::format_string<Args...> f, Args&&... args) {
    if (opt.log) *opt.log << fmt::format(f, std::forward<Args>(args)...) << '\n';
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError(fmt::format("cannot write '{}'", path.string()));
    return f;
}

double wave_k(const WaveSettings& w, int i) {
    return w.k_steps == 1 ? w.k_min : w.k_min + (w.k_max - w.k_min) * i / (w.k_steps - 1);
}

/// Amplitude ratio u^/v^ of a branch.  The closed form is used where its
/// denominator is nonzero, the nullspace components otherwise.
double branch_ratio(const WaveBranch& b, const WaveParams& wp) {
    if (wp.A == 0.0) return 0.0;
    try {
        return amplitude_ratio(b.k, b.omega, wp);
    } catch (const ZeroDenominator&) {
        const double v = b.v_hat.real();
        return std::abs(v) > 1e-14 ? b.u_hat.real() / v : std::numeric_limits<double>::infinity();
    }
}

double velocity_or_nan(double ratio, const WaveParams& wp) {
    try {
        return phase_velocity(ratio, wp);
    } catch (const Error&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

void write_report(const VerificationReport& rep, const CommandOptions& opt) {
    ensure_dir(opt.out);
    auto f = open_out(opt.out / "report.csv");
    rep.write_csv(f);
    auto n = open_out(opt.out / "notes.csv");
    rep.write_notes_csv(n);
    for (const Check& c : rep.checks()) {
        if (c.status == CheckStatus::Fail)
            log(opt, "FAIL {} error {:.3e} > tolerance {:.3e}", c.name, c.max_abs_error, c.tolerance);
        else if (c.status == CheckStatus::Skipped)
            log(opt, "SKIP {}: {}", c.name, c.reason);
    }
    for (const Note& note : rep.notes()) log(opt, "note {} = {:.6g}  ({})", note.name, note.value, note.comment);
    log(opt, "{} checks, {} failed", rep.checks().size(), rep.failures());
}

LinearJet random_jet(SplitMix64& rng) {
    LinearJet j;
    for (double* v : {&j.u1x, &j.u1y, &j.u2x, &j.u2y, &j.u1xx, &j.u1xy, &j.u1yy, &j.u2xx, &j.u2xy, &j.u2yy, &j.phi,
                      &j.phix, &j.phiy, &j.phixx, &j.phiyy})
        *v = rng.uniform(-1.0, 1.0);
    return j;
}

void homogeneous_checks(const MaterialParams& p, const ModelSelector& sel, const std::string& tag, double scale,
                        VerificationReport& rep) {
    double trivial = 0.0;
    for (double t : {0.0, std::numbers::pi}) trivial = std::max(trivial, std::abs(homogeneous_residual(t, p, sel)));
    rep.add(fmt::format("homogeneous_{}_trivial_roots", tag), trivial, 1e-14 * scale);
    try {
        const HomogeneousRoots r = homogeneous_roots(p, sel);
        double err = 0.0;
        for (double t : r.nontrivial_roots) err = std::max(err, std::abs(homogeneous_residual(t, p, sel)));
        if (r.nontrivial_roots.empty())
            rep.note(fmt::format("homogeneous_{}_nontrivial_cos", tag), r.nontrivial_cos.value_or(std::nan("")),
                     "no admissible nontrivial root");
        else
            rep.add(fmt::format("homogeneous_{}_nontrivial_roots", tag), err, 1e-12 * scale);
    } catch (const ZeroDenominator& e) {
        rep.skip(fmt::format("homogeneous_{}_nontrivial_roots", tag), e.what());
    }
}

}  // namespace

// --- simulate ----------------------------------------------------------------

int cmd_simulate(const ScenarioConfig& c, const CommandOptions& opt) {
    ensure_dir(opt.out);
    const Model model = c.make_model();
    const double dt = c.time_step();
    const bool snapshots = c.sim.output_every > 0;
    if (snapshots) ensure_dir(opt.out / "snapshots");

    auto ts = open_out(opt.out / "timeseries.csv");
    ts << "step,time," << kEnergyCsvHeader << '\n';
    auto record = [&](const FieldState& s, long step, double time) {
        ts << step << ',' << format_double(time) << ',' << energy_csv_row(total_energy(s, model)) << '\n';
        if (snapshots && step % c.sim.output_every == 0) {
            auto f = open_out(opt.out / "snapshots" / fmt::format("step_{:08d}.csv", step));
            write_snapshot(f, s);
        }
    };

    log(opt, "simulate: {}x{} grid, dt = {:.6g}, {} steps", c.grid.nx, c.grid.ny, dt, c.sim.steps);
    try {
        LeapfrogIntegrator integ(initial_state(c), make_rhs(model, c.sim.equations));
        record(integ.state(), 0, 0.0);
        for (int n = 0; n < c.sim.steps; ++n) {
            integ.step(dt);
            record(integ.state(), integ.steps(), integ.time());
        }
    } catch (const NonFiniteState& e) {
        ts.flush();
        log(opt, "simulate: non-finite state: {}", e.what());
        return kExitNumericalFailure;
    } catch (const DegenerateDeformation& e) {
        ts.flush();
        log(opt, "simulate: degenerate deformation: {}", e.what());
        return kExitNumericalFailure;
    }
    return kExitOk;
}

// --- dispersion --------------------------------------------------------------

int cmd_dispersion(const ScenarioConfig& c, const CommandOptions& opt) {
    ensure_dir(opt.out);
    const WaveParams wp = WaveParams::from_material(c.material);
    const WaveSettings& w = c.wave;

    std::map<int, PlotSeries> branch_series;
    auto disp = open_out(opt.out / "dispersion.csv");
    disp << "k,branch_index,omega,u_hat,v_hat,phi_hat_imag,ratio,phase_velocity\n";
    int flagged = 0;
    for (int i = 0; i < w.k_steps; ++i) {
        const double k = wave_k(w, i);
        std::vector<WaveBranch> branches;
        try {
            branches = dispersion_branches(k, wp);
        } catch (const NoRealBranch&) {
            ++flagged;
            log(opt, "dispersion: no real branch at k = {}", format_double(k));
            continue;
        }
        int count = 0;
        for (std::size_t b = 0; b < branches.size(); ++b) {
            const WaveBranch& br = branches[b];
            disp << format_double(k) << ',' << b << ',' << format_double(br.omega) << ','
                 << format_double(br.u_hat.real()) << ',' << format_double(br.v_hat.real()) << ','
                 << format_double(br.phi_hat.imag()) << ',' << format_double(branch_ratio(br, wp)) << ','
                 << format_double(br.omega / k) << '\n';
            PlotSeries& s = branch_series[static_cast<int>(b)];
            s.label = fmt::format("branch {}", b);
            s.markers = true;
            s.x.push_back(k);
            s.y.push_back(br.omega);
            count += br.multiplicity;
        }
        if (count < 3) {
            ++flagged;
            log(opt, "dispersion: {} branch(es) with omega >= 0 at k = {}", count, format_double(k));
        }
    }

    PlotSeries curve{"v(u/v)", {}, {}, false, false};
    auto vel = open_out(opt.out / "velocity_ratio.csv");
    vel << "ratio,velocity\n";
    for (int i = 0; i < w.ratio_samples; ++i) {
        const double r = w.ratio_max * i / (w.ratio_samples - 1);
        const double v = velocity_or_nan(r, wp);
        vel << format_double(r) << ',' << format_double(v) << '\n';
        curve.x.push_back(r);
        curve.y.push_back(v);
    }
    const double v_inf = velocity_or_nan(std::numeric_limits<double>::infinity(), wp);
    vel << "inf," << format_double(v_inf) << '\n';

    if (opt.svg) {
        std::vector<PlotSeries> s;
        for (auto& [idx, series] : branch_series) s.push_back(std::move(series));
        auto f = open_out(opt.out / "dispersion.svg");
        write_svg_plot(f, "Dispersion branches", "k", "omega", s);

        const double vt_value = vt(wp);
        std::vector<PlotSeries> v{curve,
                                  {"v_t", {0.0, w.ratio_max}, {vt_value, vt_value}, true, false},
                                  {"v_l", {0.0, w.ratio_max}, {v_inf, v_inf}, true, false}};
        auto g = open_out(opt.out / "velocity_ratio.svg");
        write_svg_plot(g, "Phase velocity against amplitude ratio", "u/v", "v", v);
    }
    log(opt, "dispersion: {} wavenumbers, {} flagged", w.k_steps, flagged);
    return kExitOk;
}

// --- homogeneous -------------------------------------------------------------

int cmd_homogeneous(const ScenarioConfig& c, const CommandOptions& opt) {
    ensure_dir(opt.out);
    const MaterialParams& p = c.material;
    const ModelSelector sel = c.model;
    const HomogeneousRoots roots = homogeneous_roots(p, sel);

    auto f = open_out(opt.out / "homogeneous.csv");
    f << "case,theta0,residual,variational_residual\n";
    auto row = [&](const std::string& name, double t, const MaterialParams& q, const ModelSelector& s) {
        const double r = homogeneous_residual(t, q, s);
        f << name << ',' << format_double(t) << ',' << format_double(r) << ','
          << format_double(homogeneous_variational_residual(t, q, s)) << '\n';
        log(opt, "{}: theta0 = {:.17g}, residual = {:.6e}", name, t, r);
    };
    for (double t : roots.trivial_roots) row("trivial", t, p, sel);
    for (double t : roots.nontrivial_roots) row("nontrivial", t, p, sel);

    // The mu_c = 0, theta0 = pi/2 case of the non-chiral relation.
    MaterialParams q = p;
    q.mu_c = 0.0;
    const ModelSelector nonchiral{ModelKind::NonChiral, sel.coupling};
    row("pi_half_mu_c_zero", std::numbers::pi / 2, q, nonchiral);
    if (homogeneous_residual(std::numbers::pi / 2, q, nonchiral) != 0.0)
        log(opt, "flag: theta0 = pi/2 does not solve the non-chiral relation at mu_c = 0 (residual = lambda + mu)");

    auto g = open_out(opt.out / "homogeneous_roots.csv");
    g << "model,nontrivial_cos,fraction,feasible,root_count\n";
    g << (sel.kind == ModelKind::Chiral ? "chiral" : "nonchiral") << ','
      << format_double(roots.nontrivial_cos.value_or(std::nan(""))) << ',' << format_double(roots.fraction) << ','
      << (roots.feasible ? "true" : "false") << ',' << roots.trivial_roots.size() + roots.nontrivial_roots.size()
      << '\n';
    return kExitOk;
}

// --- verify ------------------------------------------------------------------

VerificationReport reduction_suite(const ScenarioConfig& c) {
    const double tol = 1e-10 * c.verify.tolerance_scale;
    const PlanarSample3D sample = PlanarSample3D::standard(c.verify.seed, 50);
    VerificationReport rep = first_problem_check(sample, tol);
    rep.merge(second_problem_check(sample, tol));
    rep.merge(chirality_inversion_check(ChiralProbe::standard(c.verify.seed, 50), tol));
    rep.merge(chirality_inversion_check(ChiralProbe::planar(sample), tol));
    return rep;
}

VerificationReport verification_suite(const ScenarioConfig& c) {
    const double scale = c.verify.tolerance_scale;
    VerificationReport rep;

    // energy gradients and equations of motion
    const FieldState state = initial_state(c);
    ConsistencyOptions co;
    co.tol_exact *= scale;
    co.tol_regularized *= scale;
    co.fd_tol *= scale;
    co.fd_nodes = c.verify.fd_nodes;
    co.fd_seed = c.verify.seed;
    for (const ModelSelector sel : {ModelSelector{ModelKind::NonChiral, CouplingKind::Polar},
                                    ModelSelector{ModelKind::NonChiral, CouplingKind::Skew},
                                    ModelSelector{ModelKind::Chiral, CouplingKind::Skew}}) {
        Model m = c.make_model();
        m.selector = sel;
        try {
            rep.merge(verify_variational_consistency(state, m, co));
        } catch (const DegenerateDeformation& e) {
            rep.skip(fmt::format("variational_consistency_{}", sel.kind == ModelKind::Chiral ? "chiral" : "nonchiral"),
                     e.what());
        }
    }

    // homogeneous solutions
    homogeneous_checks(c.material, {ModelKind::NonChiral, CouplingKind::Polar}, "nonchiral", scale, rep);
    homogeneous_checks(c.material, {ModelKind::Chiral, CouplingKind::Skew}, "chiral", scale, rep);
    {
        MaterialParams q = c.material;
        q.mu_c = 0.0;
        rep.note("homogeneous_pi_half_mu_c_zero_residual",
                 homogeneous_residual(std::numbers::pi / 2, q, {ModelKind::NonChiral, CouplingKind::Polar}),
                 "theta0 = pi/2 at mu_c = 0 leaves lambda + mu in the non-chiral relation");
    }

    // linearized equations under the Liu identification
    if (c.material.is_liu_preset()) {
        SplitMix64 rng(c.verify.seed);
        const LinearCoefficients lc = LinearCoefficients::from_material(c.material);
        double err = 0.0;
        for (int n = 0; n < 20; ++n) {
            const LinearJet j = random_jet(rng);
            err = std::max(err, std::abs(linear_chiral_pointwise(j, lc).f3 -
                                         liu_rotational_force(j, 2.0 * lc.d1, c.material.mu_s, c.material.mu_c)));
        }
        rep.add("linear_liu_rotational_equation", err, 1e-13 * scale);
    } else {
        rep.skip("linear_liu_rotational_equation", "chiral constants do not follow the Liu identification");
    }

    // plane waves
    const WaveParams wp = WaveParams::from_material(c.material);
    double det_err = 0.0, null_err = 0.0;
    int branches = 0;
    for (int i = 0; i < c.wave.k_steps; ++i) {
        const double k = wave_k(c.wave, i);
        try {
            for (const WaveBranch& b : dispersion_branches(k, wp)) {
                det_err = std::max(det_err, det_relative_residual(k, b.omega, wp));
                null_err = std::max(null_err, nullspace_residual(b, wp));
                ++branches;
            }
        } catch (const NoRealBranch&) {
        }
    }
    if (branches > 0) {
        rep.add("wave_branch_determinant", det_err, 1e-10 * scale);
        rep.add("wave_branch_nullspace", null_err, 1e-10 * scale);
    } else {
        rep.skip("wave_branch_determinant", "no real branch on the configured k range");
    }
    try {
        const double v_l = vl(wp);
        rep.add("wave_limit_vt", std::abs(phase_velocity(1e-14, wp) - std::sqrt(wp.mu / wp.rho)), 1e-8 * scale);
        rep.add("wave_limit_vl", std::abs(phase_velocity(1e14, wp) - v_l), 1e-8 * scale);
    } catch (const Error& e) {
        rep.skip("wave_limits", e.what());
    }
    if (wp.A != 0.0 && wp.mu_c > 0.0) {
        try {
            double err = 0.0;
            for (double k : {0.5, 1.0, 2.0})
                for (double w : {0.5, 1.5}) err = std::max(err, transverse_free_solution(k, w, wp).residual);
            rep.add("wave_transverse_free_residual", err, 1e-10 * scale);
        } catch (const Error& e) {
            rep.skip("wave_transverse_free_residual", e.what());
        }
    } else {
        rep.skip("wave_transverse_free_residual", "requires A != 0 and mu_c > 0");
    }

    rep.merge(reduction_suite(c));
    return rep;
}

int cmd_verify(const ScenarioConfig& c, const CommandOptions& opt) {
    const VerificationReport rep = verification_suite(c);
    write_report(rep, opt);
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_reduce3d(const ScenarioConfig& c, const CommandOptions& opt) {
    const VerificationReport rep = reduction_suite(c);
    write_report(rep, opt);
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

// --- dispatch ----------------------------------------------------------------

int run_command(std::string_view name, const fs::path& config, const CommandOptions& opt) {
    try {
        const ScenarioConfig c = load_config(config);
        if (name == "simulate") return cmd_simulate(c, opt);
        if (name == "dispersion") return cmd_dispersion(c, opt);
        if (name == "homogeneous") return cmd_homogeneous(c, opt);
        if (name == "verify") return cmd_verify(c, opt);
        if (name == "reduce3d") return cmd_reduce3d(c, opt);
        log(opt, "unknown command '{}'", name);
        return kExitConfigError;
    } catch (const ConfigError& e) {
        log(opt, "config error: {}", e.what());
        return kExitConfigError;
    } catch (const IoError& e) {
        log(opt, "i/o error: {}", e.what());
        return kExitConfigError;
    } catch (const Error& e) {
        log(opt, "numerical failure: {}", e.what());
        return kExitNumericalFailure;
    }
}

}  // namespace cosserat::cli
