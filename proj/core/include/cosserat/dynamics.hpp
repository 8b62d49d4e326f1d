#pragma once

// Equations of motion of the planar model.
//
// Full equations are assembled in divergence form from nodal quantities:
//   rho u_tt          = Div S
//   rho_rot theta_tt  = div q + r
// with S a stress-like matrix, q a couple-flux vector and r a local torque.
// Using the same discrete Div/div as the energy module makes the right-hand
// sides exact duals of the discrete potential.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/fields.hpp"
#include "cosserat/material.hpp"
#include "cosserat/report.hpp"

namespace cosserat {

struct RhsFields {
    Vec2Field acc_u;
    ScalarField acc_theta;
};

/// Nodal terms of a divergence-form right-hand side.
struct NodeForces {
    Mat2 stress{};
    Vec2 flux{};
    double torque = 0.0;
};

/// Non-chiral equations: elastic + curvature + interaction + the coupling
/// selected in model.selector.coupling.  Throws DegenerateDeformation when
/// the polar coupling meets det F <= 0.
NodeForces nonlinear_node_forces(const NodeInputs& in, const Model& model);
RhsFields rhs_nonlinear(const FieldState& state, const Model& model);

/// Chiral equations (elastic, curvature, skew coupling, starred elastic and
/// mixing terms), written term by term.
NodeForces chiral_node_forces(const NodeInputs& in, const MaterialParams& p);
RhsFields rhs_chiral(const FieldState& state, const Model& model);

/// Literal transcription of the published chiral equations, kept as a
/// diagnostic.  Contractions are read as: M:eps = eps^T M for matrices and
/// vectors, tr(eps X) = X_12 - X_21, R = Rb.  It is not an energy gradient;
/// compare with rhs_chiral to measure the difference.
NodeForces chiral_printed_node_forces(const NodeInputs& in, const MaterialParams& p);
RhsFields rhs_chiral_printed(const FieldState& state, const Model& model);

/// Full equations of the model's kind (non-chiral or chiral).
RhsFields rhs_full(const FieldState& state, const Model& model);

// --- linearized chiral equations --------------------------------------------

/// Derivatives of (u1, u2, phi) at a point, phi = -theta.
struct LinearJet {
    double u1x = 0, u1y = 0, u2x = 0, u2y = 0;
    double u1xx = 0, u1xy = 0, u1yy = 0;
    double u2xx = 0, u2xy = 0, u2yy = 0;
    double phi = 0, phix = 0, phiy = 0, phixx = 0, phiyy = 0;
};

/// Coefficients of the linear equations derived from MaterialParams with
/// d1 = mu L_c^2 and varrho_rot = 4 rho_rot.  Only m1/2 + m2 enters.
struct LinearCoefficients {
    double rho = 1.0;
    double varrho_rot = 4.0;
    double d1 = 0.0;
    double mu = 0.0, lambda = 0.0, mu_c = 0.0;
    double mu_s = 0.0, lambda_s = 0.0, mu_c_s = 0.0;
    double m = 0.0;  ///< m1/2 + m2

    static LinearCoefficients from_material(const MaterialParams& p);
};

/// Right-hand sides (forces, not accelerations) of the three linear
/// equations: rho u1_tt = f1, rho u2_tt = f2, varrho_rot phi_tt = f3.
struct LinearForces {
    double f1 = 0.0, f2 = 0.0, f3 = 0.0;
};

LinearForces linear_chiral_pointwise(const LinearJet& j, const LinearCoefficients& c);

/// The reduced rotational equation with gamma = 2 d1 and the chiral
/// modulus A: gamma Lap phi - 4(mu_c + A) phi + 2 mu_c (u2x - u1y) - 2A (u1x + u2y).
double liu_rotational_force(const LinearJet& j, double gamma, double A, double mu_c);

/// Grid evaluation with central first differences, three-point second
/// differences and d_xy = d_x d_y.  Returns theta_tt = -phi_tt.
RhsFields rhs_linear_chiral(const FieldState& state, const MaterialParams& p);

// --- homogeneous solutions ---------------------------------------------------

/// Printed residual of u = 0, theta = theta0:
///   non-chiral  (lambda + mu + mu_c - (lambda + mu) cos t) sin t
///   chiral      [-m1 - 2m2 - lambda + lambda* - mu - mu_c1 + mu*
///                + (m1 + 2m2 - m3 - mu_c - mu_c* + lambda + lambda* + mu + mu*) cos t] sin t
double homogeneous_residual(double theta0, const MaterialParams& p, const ModelSelector& sel);

/// -1/2 of the rotational torque of the energy-consistent equations at
/// u = 0, theta = theta0.  For the non-chiral model this equals the printed
/// residual; for the chiral model it equals minus the printed residual when
/// mu_c1 = 2(lambda* + mu*).
double homogeneous_variational_residual(double theta0, const MaterialParams& p, const ModelSelector& sel);

struct HomogeneousRoots {
    std::vector<double> trivial_roots;     ///< 0 and pi
    std::optional<double> nontrivial_cos;  ///< cos theta0 of the non-trivial branch
    std::vector<double> nontrivial_roots;  ///< +-arccos when admissible and distinct from 0, pi
    double fraction = 0.0;                 ///< cos theta0 - 1
    bool feasible = false;
};

/// Throws ZeroDenominator when lambda + mu = 0 (non-chiral) or the chiral
/// denominator vanishes.  Feasible iff cos theta0 - 1 lies in [-2, 0].
HomogeneousRoots homogeneous_roots(const MaterialParams& p, const ModelSelector& sel);

// --- time integration --------------------------------------------------------

enum class Equations { Full, Linearized };

using RhsFunction = std::function<RhsFields(const FieldState&)>;

RhsFunction make_rhs(const Model& model, Equations eq);

/// One velocity-Verlet step.  Throws NonFiniteState on overflow or NaN.
FieldState step_leapfrog(const FieldState& state, double dt, const RhsFunction& rhs);

/// Velocity Verlet that reuses the acceleration of the previous step.
class LeapfrogIntegrator {
public:
    LeapfrogIntegrator(FieldState initial, RhsFunction rhs);

    void step(double dt);
    const FieldState& state() const { return state_; }
    double time() const { return time_; }
    long steps() const { return steps_; }

private:
    FieldState state_;
    RhsFunction rhs_;
    RhsFields acc_;
    double time_ = 0.0;
    long steps_ = 0;
};

/// min(hx, hy) / sqrt((lambda + 2 mu) / rho).
double stable_dt_estimate(const Grid& grid, const MaterialParams& p);

// --- verification ------------------------------------------------------------

struct ConsistencyOptions {
    double tol_exact = 1e-10;       ///< chi = 0
    double tol_regularized = 1e-8;  ///< chi != 0
    double fd_step = 1e-6;
    double fd_tol = 1e-6;
    int fd_nodes = 50;
    std::uint64_t fd_seed = 12345;
    bool include_fd = true;
};

/// Compares rho u_tt and 2 rho_rot theta_tt of the model's full equations
/// with minus the discrete energy gradient, checks momentum balance, and
/// (optionally) compares each term's analytic gradient with central
/// differences of total_energy at randomly chosen nodes.
VerificationReport verify_variational_consistency(const FieldState& state, const Model& model,
                                                  const ConsistencyOptions& opt = {});

/// Central-difference check of analytic_variations for a single term.
/// Error is max |analytic - fd| over the sampled unknowns divided by the
/// largest analytic entry of that term (absolute if the term vanishes).
VerificationReport fd_gradient_check(const FieldState& state, const Model& model, Term term,
                                     const ConsistencyOptions& opt = {});

}  // namespace cosserat
