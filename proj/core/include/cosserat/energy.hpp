#pragma once

// Energy densities of the planar Cosserat model, their first derivatives,
// the discrete total energy and its exact discrete variational derivative.

#include <iosfwd>
#include <string>

#include "cosserat/algebra.hpp"
#include "cosserat/fields.hpp"
#include "cosserat/material.hpp"

namespace cosserat {

// --- densities --------------------------------------------------------------

/// mu |sym(Rb^T F) - 1|^2 + lambda/2 (tr(sym(Rb^T F) - 1))^2 with Rb = rot2(theta).
double elastic_density(const Mat2& F, double theta, const MaterialParams& p);

/// The same energy in expanded trace form
/// 2mu - 2mu tr(F Rb^T) + mu/2 (tr(Rb^T F Rb^T F) + tr(F F^T)) + 2lambda - 2lambda tr(Rb^T F) + lambda/2 tr(Rb^T F)^2.
double elastic_density_expanded(const Mat2& F, double theta, const MaterialParams& p);

/// mu L_c^2 |grad theta|^2.
double curvature_density(const Vec2& grad_theta, const MaterialParams& p);

/// sqrt(|g|^2 + eps^2) - eps; equals |g| for eps = 0 and vanishes at g = 0.
double regularized_norm(const Vec2& g, double eps_reg);

/// mu L_c chi |grad theta|_reg tr(Rb^T F).
double interaction_density(const Mat2& F, double theta, const Vec2& grad_theta, const MaterialParams& p,
                           double eps_reg);

/// mu_c |Rb^T polar(F) - 1|^2.  Throws DegenerateDeformation for det F <= 0.
double coupling_density(const Mat2& F, double theta, const MaterialParams& p);

/// 4 mu_c - 2 mu_c tr(Rb^T polar(F)).
double coupling_density_expanded(const Mat2& F, double theta, const MaterialParams& p);

/// mu_c |skew(Rb^T F - 1)|^2.
double coupling2_density(const Mat2& F, double theta, const MaterialParams& p);

/// 3 mu_c + mu_c/2 tr[F^T F - Rb^T F Rb^T F], the trace form with its printed
/// constant.  In 2D this exceeds coupling2_density by exactly 3 mu_c.
double coupling2_density_trace_form(const Mat2& F, double theta, const MaterialParams& p);

/// Elastic energy of F* with (mu*, lambda*) plus mu_c* |skew(Rb^T F* - 1)|^2.
double chiral_elastic_density(const Mat2& Fstar, double theta, const MaterialParams& p);

/// m1 tr[(sym(Rb^T F*) - 1)^T (sym(Rb^T F) - 1)] + m2 tr(Rb^T F* - 1) tr(Rb^T F - 1)
/// + m3 tr[skew(Rb^T F* - 1)^T skew(Rb^T F - 1)].
double mixing_density(const Mat2& F, const Mat2& Fstar, double theta, const MaterialParams& p);

// --- pointwise derivatives ---------------------------------------------------

struct NodeInputs {
    Mat2 F = Mat2::identity();
    Mat2 Fstar = Mat2::identity();
    double theta = 0.0;
    Vec2 grad_theta{};
};

/// Value and partial derivatives of a density with respect to each of its
/// arguments, with the microrotation handled through Rb.
struct DensityJet {
    double value = 0.0;
    Mat2 dF{};      ///< dW/dF
    Mat2 dFstar{};  ///< dW/dF*
    Mat2 dRbar{};   ///< dW/dRb, F and F* held fixed
    Vec2 dgrad{};   ///< dW/d(grad theta)
    bool interaction_singular = false;

    /// dW/dtheta = <dW/dRb, -eps Rb>.
    double dtheta(double theta) const { return frobenius(dRbar, drot2(theta)); }
};

/// Sum of the jets of every term in `terms`.
DensityJet density_jet(const NodeInputs& in, const Model& model, TermSet terms);

// --- totals ------------------------------------------------------------------

struct EnergyBreakdown {
    double elastic = 0.0;
    double curvature = 0.0;
    double interaction = 0.0;
    double coupling = 0.0;  ///< polar or skew variant, whichever is active
    double chiral_elastic = 0.0;
    double mixing = 0.0;
    double kinetic_translational = 0.0;
    double kinetic_rotational = 0.0;

    double potential() const { return elastic + curvature + interaction + coupling + chiral_elastic + mixing; }
    double kinetic() const { return kinetic_translational + kinetic_rotational; }
    double total() const { return potential() + kinetic(); }
};

/// Nodal sums times cell area.  Kinetic terms: rho/2 |u_t|^2 and rho_rot theta_t^2.
EnergyBreakdown total_energy(const FieldState& state, const Model& model);
EnergyBreakdown total_energy(const FieldState& state, const Model& model, TermSet terms);

inline constexpr const char* kEnergyCsvHeader =
    "elastic,curvature,interaction,coupling,chiral_elastic,mixing,kin_trans,kin_rot,total";
std::string energy_csv_row(const EnergyBreakdown& e);

struct Variations {
    Vec2Field dV_du;
    ScalarField dV_dtheta;
    /// The interaction gradient was requested with eps_reg = 0 at a node
    /// where grad theta = 0; those entries are set to zero.
    bool interaction_singular = false;
};

/// Variational derivative of the discrete potential per unit area:
/// dV_total / d(nodal unknown) = cell_area * (returned value), exactly.
Variations analytic_variations(const FieldState& state, const Model& model);
Variations analytic_variations(const FieldState& state, const Model& model, TermSet terms);

}  // namespace cosserat
