#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "cosserat/dynamics.hpp"
#include "cosserat/random.hpp"

namespace cosserat {
namespace {

double max_abs(const Vec2Field& f) {
    double m = 0.0;
    for (const Vec2& v : f.values) m = std::max({m, std::abs(v.x), std::abs(v.y)});
    return m;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double relative(double err, double scale) { return scale > 0.0 ? err / scale : err; }

bool has_flat_node(const FieldState& s) {
    for (const Vec2& g : grad_scalar(s.theta).values)
        if (g.x == 0.0 && g.y == 0.0) return true;
    return false;
}

}  // namespace

VerificationReport fd_gradient_check(const FieldState& state, const Model& model, Term term,
                                     const ConsistencyOptions& opt) {
    VerificationReport rep;
    const std::string name = fmt::format("fd_gradient_{}", term_name(term));
    if (term == kInteraction && model.material.chi != 0.0 && model.eps_reg == 0.0 && has_flat_node(state)) {
        rep.skip(name, "interaction norm is not differentiable where grad theta = 0 and eps_reg = 0");
        return rep;
    }

    const Variations an = analytic_variations(state, model, term);
    const Grid& g = state.grid;
    const double area = g.cell_area();
    const double h = opt.fd_step;
    const double scale = std::max(max_abs(an.dV_du), max_abs(an.dV_dtheta));

    SplitMix64 rng(opt.fd_seed);
    FieldState s = state;
    double err = 0.0;
    auto fd = [&](ScalarField& f, std::size_t k) {
        const double x0 = f[k];
        f[k] = x0 + h;
        const double ep = total_energy(s, model, term).potential();
        f[k] = x0 - h;
        const double em = total_energy(s, model, term).potential();
        f[k] = x0;
        return (ep - em) / (2.0 * h * area);
    };
    for (int n = 0; n < opt.fd_nodes; ++n) {
        const std::size_t k = rng.next() % g.size();
        err = std::max(err, std::abs(fd(s.u1, k) - an.dV_du[k].x));
        err = std::max(err, std::abs(fd(s.u2, k) - an.dV_du[k].y));
        err = std::max(err, std::abs(fd(s.theta, k) - an.dV_dtheta[k]));
    }
    rep.add(name, relative(err, scale), opt.fd_tol);
    return rep;
}

VerificationReport verify_variational_consistency(const FieldState& state, const Model& model,
                                                  const ConsistencyOptions& opt) {
    VerificationReport rep;
    const MaterialParams& p = model.material;
    const TermSet terms = model.terms();
    const bool regularized = (terms & kInteraction) && p.chi != 0.0;
    const double tol = regularized ? opt.tol_regularized : opt.tol_exact;
    const std::string tag = model.selector.kind == ModelKind::Chiral ? "chiral"
                            : model.selector.coupling == CouplingKind::Polar ? "nonchiral_polar"
                                                                               : "nonchiral_skew";

    const Variations v = analytic_variations(state, model);
    const RhsFields r = rhs_full(state, model);
    const Grid& g = state.grid;

    double eu = 0.0, et = 0.0, ru = 0.0, rt = 0.0;
    Vec2 momentum{};
    double momentum_scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Vec2 f = p.rho * r.acc_u[k];
        eu = std::max({eu, std::abs(f.x + v.dV_du[k].x), std::abs(f.y + v.dV_du[k].y)});
        et = std::max(et, std::abs(2.0 * p.rho_rot * r.acc_theta[k] + v.dV_dtheta[k]));
        ru += p.rho_rot * r.acc_theta[k] * v.dV_dtheta[k];
        rt += v.dV_dtheta[k] * v.dV_dtheta[k];
        momentum += f;
        momentum_scale += std::abs(f.x) + std::abs(f.y);
    }
    rep.add(fmt::format("{}_rhs_u_vs_energy_gradient", tag), relative(eu, max_abs(v.dV_du)), tol);
    rep.add(fmt::format("{}_rhs_theta_vs_energy_gradient", tag), relative(et, max_abs(v.dV_dtheta)), tol);
    rep.add(fmt::format("{}_momentum_balance", tag),
            relative(std::max(std::abs(momentum.x), std::abs(momentum.y)), momentum_scale), 1e-12);
    if (ru != 0.0)
        rep.note(fmt::format("{}_rotational_normalization", tag), -rt / ru,
                 "m with m * rho_rot * theta_tt = -dV/dtheta; the kinetic energy rho_rot |theta_t|^2 gives 2");

    if (model.selector.kind == ModelKind::Chiral) {
        const RhsFields pr = rhs_chiral_printed(state, model);
        double du = 0.0, dt = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            du = std::max({du, std::abs(pr.acc_u[k].x - r.acc_u[k].x), std::abs(pr.acc_u[k].y - r.acc_u[k].y)});
            dt = std::max(dt, std::abs(pr.acc_theta[k] - r.acc_theta[k]));
        }
        rep.note("chiral_printed_u_equation_mismatch", relative(du, max_abs(r.acc_u)),
                 "relative max difference between the published chiral u-equation and the energy gradient");
        rep.note("chiral_printed_theta_equation_mismatch", relative(dt, max_abs(r.acc_theta)),
                 "relative max difference between the published chiral theta-equation and the energy gradient");
    }

    if (opt.include_fd) {
        for (Term t : {kElastic, kCurvature, kInteraction, kCouplingPolar, kCouplingSkew, kChiralElastic, kMixing}) {
            if (!(terms & t)) continue;
            VerificationReport sub = fd_gradient_check(state, model, t, opt);
            for (const Check& c : sub.checks()) {
                if (c.status == CheckStatus::Skipped)
                    rep.skip(fmt::format("{}_{}", tag, c.name), c.reason);
                else
                    rep.add(fmt::format("{}_{}", tag, c.name), c.max_abs_error, c.tolerance);
            }
        }
    }
    return rep;
}

}  // namespace cosserat
