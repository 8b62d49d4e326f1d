#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "cosserat/dynamics.hpp"
#include "cosserat/errors.hpp"

namespace cosserat {
namespace {

void kick(FieldState& s, const RhsFields& a, double h) {
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        s.v1[k] += h * a.acc_u[k].x;
        s.v2[k] += h * a.acc_u[k].y;
        s.omega[k] += h * a.acc_theta[k];
    }
}

void drift(FieldState& s, double h) {
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        s.u1[k] += h * s.v1[k];
        s.u2[k] += h * s.v2[k];
        s.theta[k] += h * s.omega[k];
    }
}

void require_finite(const FieldState& s, double t) {
    if (!s.all_finite()) throw NonFiniteState(fmt::format("state became non-finite at t = {}", t));
}

}  // namespace

RhsFunction make_rhs(const Model& model, Equations eq) {
    if (eq == Equations::Linearized)
        return [p = model.material](const FieldState& s) { return rhs_linear_chiral(s, p); };
    return [model](const FieldState& s) { return rhs_full(s, model); };
}

FieldState step_leapfrog(const FieldState& state, double dt, const RhsFunction& rhs) {
    FieldState s = state;
    kick(s, rhs(s), 0.5 * dt);
    drift(s, dt);
    kick(s, rhs(s), 0.5 * dt);
    require_finite(s, dt);
    return s;
}

LeapfrogIntegrator::LeapfrogIntegrator(FieldState initial, RhsFunction rhs)
    : state_(std::move(initial)), rhs_(std::move(rhs)) {
    require_finite(state_, 0.0);
    acc_ = rhs_(state_);
}

void LeapfrogIntegrator::step(double dt) {
    kick(state_, acc_, 0.5 * dt);
    drift(state_, dt);
    acc_ = rhs_(state_);
    kick(state_, acc_, 0.5 * dt);
    time_ += dt;
    ++steps_;
    require_finite(state_, time_);
}

double stable_dt_estimate(const Grid& grid, const MaterialParams& p) {
    return std::min(grid.hx(), grid.hy()) / std::sqrt((p.lambda + 2.0 * p.mu) / p.rho);
}

}  // namespace cosserat
