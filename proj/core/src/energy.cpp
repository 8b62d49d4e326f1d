#include "cosserat/energy.hpp"

#include <cmath>

#include "cosserat/csv.hpp"

namespace cosserat {
namespace {

const Mat2 kI = Mat2::identity();

// mu |sym(Rb^T X) - 1|^2 + lambda/2 (tr(Rb^T X) - 2)^2 and its derivatives.
DensityJet elastic_jet(const Mat2& X, const Mat2& Rb, double mu, double lambda) {
    const Mat2 B = transpose(Rb) * X;
    const double trB = trace(B);
    DensityJet j;
    j.value = mu * norm2(sym(B) - kI) + 0.5 * lambda * (trB - 2.0) * (trB - 2.0);
    j.dF = mu * (Rb * transpose(X) * Rb + X) - 2.0 * (mu + lambda) * Rb + lambda * trB * Rb;
    j.dRbar = mu * (X * transpose(Rb) * X) - 2.0 * (mu + lambda) * X + lambda * trB * X;
    return j;
}

// c |skew(Rb^T X)|^2 = c/2 tr[X^T X - Rb^T X Rb^T X].
DensityJet skew_coupling_jet(const Mat2& X, const Mat2& Rb, double c) {
    const Mat2 B = transpose(Rb) * X;
    DensityJet j;
    j.value = c * norm2(skew(B));
    j.dF = c * (X - Rb * transpose(X) * Rb);
    j.dRbar = -c * (X * transpose(Rb) * X);
    return j;
}

DensityJet polar_coupling_jet(const Mat2& F, const Mat2& Rb, double mu_c) {
    const Polar2 pd = polar2(F);
    DensityJet j;
    j.value = mu_c * norm2(transpose(Rb) * pd.R - kI);
    j.dF = (-2.0 * mu_c / pd.trU) * (Rb - pd.R * transpose(Rb) * pd.R);
    j.dRbar = -2.0 * mu_c * pd.R;
    return j;
}

DensityJet interaction_jet(const Mat2& F, const Mat2& Rb, const Vec2& g, double coef, double eps) {
    const double t = trace(transpose(Rb) * F);
    const double n = regularized_norm(g, eps);
    const double root = std::sqrt(dot(g, g) + eps * eps);
    DensityJet j;
    j.value = coef * n * t;
    j.dF = coef * n * Rb;
    j.dRbar = coef * n * F;
    if (root > 0.0) {
        j.dgrad = (coef * t / root) * g;
    } else if (coef != 0.0) {
        j.interaction_singular = true;
    }
    return j;
}

// A = Rb^T F*, B = Rb^T F.
DensityJet mixing_jet(const Mat2& F, const Mat2& Fs, const Mat2& Rb, const MaterialParams& p) {
    const Mat2 A = transpose(Rb) * Fs;
    const Mat2 B = transpose(Rb) * F;
    const double trA = trace(A);
    const double trB = trace(B);
    const Mat2 gB = p.m1 * (sym(A) - kI) + p.m2 * (trA - 2.0) * kI + p.m3 * skew(A);
    const Mat2 gA = p.m1 * (sym(B) - kI) + p.m2 * (trB - 2.0) * kI + p.m3 * skew(B);
    DensityJet j;
    j.value = p.m1 * frobenius(sym(A) - kI, sym(B) - kI) + p.m2 * (trA - 2.0) * (trB - 2.0) +
              p.m3 * frobenius(skew(A), skew(B));
    j.dF = Rb * gB;
    j.dFstar = Rb * gA;
    j.dRbar = F * transpose(gB) + Fs * transpose(gA);
    return j;
}

void accumulate(DensityJet& into, const DensityJet& j) {
    into.value += j.value;
    into.dF += j.dF;
    into.dFstar += j.dFstar;
    into.dRbar += j.dRbar;
    into.dgrad += j.dgrad;
    into.interaction_singular = into.interaction_singular || j.interaction_singular;
}

// Jet of a starred elastic term expressed in the F* slot.
DensityJet as_star(DensityJet j) {
    j.dFstar = j.dF;
    j.dF = Mat2::zero();
    return j;
}

}  // namespace

double elastic_density(const Mat2& F, double theta, const MaterialParams& p) {
    const Mat2 B = transpose(rot2(theta)) * F;
    const double tr_dev = trace(sym(B) - kI);
    return p.mu * norm2(sym(B) - kI) + 0.5 * p.lambda * tr_dev * tr_dev;
}

double elastic_density_expanded(const Mat2& F, double theta, const MaterialParams& p) {
    const Mat2 Rb = rot2(theta);
    const Mat2 B = transpose(Rb) * F;
    const double trB = trace(B);
    return 2.0 * p.mu - 2.0 * p.mu * trace(F * transpose(Rb)) +
           0.5 * p.mu * (trace(B * B) + trace(F * transpose(F))) + 2.0 * p.lambda - 2.0 * p.lambda * trB +
           0.5 * p.lambda * trB * trB;
}

double curvature_density(const Vec2& g, const MaterialParams& p) { return p.mu * p.L_c * p.L_c * dot(g, g); }

double regularized_norm(const Vec2& g, double eps_reg) {
    if (eps_reg == 0.0) return norm(g);
    // sqrt(|g|^2 + e^2) - e without cancellation
    const double g2 = dot(g, g);
    return g2 / (std::sqrt(g2 + eps_reg * eps_reg) + eps_reg);
}

double interaction_density(const Mat2& F, double theta, const Vec2& g, const MaterialParams& p, double eps_reg) {
    if (p.chi == 0.0) return 0.0;
    return p.mu * p.L_c * p.chi * regularized_norm(g, eps_reg) * trace(transpose(rot2(theta)) * F);
}

double coupling_density(const Mat2& F, double theta, const MaterialParams& p) {
    const Polar2 pd = polar2(F);
    return p.mu_c * norm2(transpose(rot2(theta)) * pd.R - kI);
}

double coupling_density_expanded(const Mat2& F, double theta, const MaterialParams& p) {
    const Polar2 pd = polar2(F);
    return 4.0 * p.mu_c - 2.0 * p.mu_c * trace(transpose(rot2(theta)) * pd.R);
}

double coupling2_density(const Mat2& F, double theta, const MaterialParams& p) {
    return p.mu_c * norm2(skew(transpose(rot2(theta)) * F - kI));
}

double coupling2_density_trace_form(const Mat2& F, double theta, const MaterialParams& p) {
    const Mat2 B = transpose(rot2(theta)) * F;
    return 3.0 * p.mu_c + 0.5 * p.mu_c * trace(transpose(F) * F - B * B);
}

double chiral_elastic_density(const Mat2& Fstar, double theta, const MaterialParams& p) {
    const Mat2 A = transpose(rot2(theta)) * Fstar;
    const double tr_dev = trace(sym(A) - kI);
    return p.mu_s * norm2(sym(A) - kI) + 0.5 * p.lambda_s * tr_dev * tr_dev + p.mu_c_s * norm2(skew(A - kI));
}

double mixing_density(const Mat2& F, const Mat2& Fstar, double theta, const MaterialParams& p) {
    const Mat2 Rb = rot2(theta);
    const Mat2 A = transpose(Rb) * Fstar - kI;
    const Mat2 B = transpose(Rb) * F - kI;
    return p.m1 * trace(transpose(sym(A)) * sym(B)) + p.m2 * trace(A) * trace(B) +
           p.m3 * trace(transpose(skew(A)) * skew(B));
}

DensityJet density_jet(const NodeInputs& in, const Model& model, TermSet terms) {
    const MaterialParams& p = model.material;
    const Mat2 Rb = rot2(in.theta);
    DensityJet total;
    if (terms & kElastic) accumulate(total, elastic_jet(in.F, Rb, p.mu, p.lambda));
    if (terms & kCurvature) {
        DensityJet j;
        const double c = p.mu * p.L_c * p.L_c;
        j.value = c * dot(in.grad_theta, in.grad_theta);
        j.dgrad = 2.0 * c * in.grad_theta;
        accumulate(total, j);
    }
    if ((terms & kInteraction) && p.chi != 0.0)
        accumulate(total, interaction_jet(in.F, Rb, in.grad_theta, p.mu * p.L_c * p.chi, model.eps_reg));
    if ((terms & kCouplingPolar) && p.mu_c != 0.0) accumulate(total, polar_coupling_jet(in.F, Rb, p.mu_c));
    if (terms & kCouplingSkew) accumulate(total, skew_coupling_jet(in.F, Rb, p.mu_c));
    if (terms & kChiralElastic) {
        accumulate(total, as_star(elastic_jet(in.Fstar, Rb, p.mu_s, p.lambda_s)));
        accumulate(total, as_star(skew_coupling_jet(in.Fstar, Rb, p.mu_c_s)));
    }
    if (terms & kMixing) accumulate(total, mixing_jet(in.F, in.Fstar, Rb, p));
    return total;
}

EnergyBreakdown total_energy(const FieldState& state, const Model& model) {
    return total_energy(state, model, model.terms());
}

EnergyBreakdown total_energy(const FieldState& s, const Model& model, TermSet terms) {
    const MaterialParams& p = model.material;
    const DeformationGradients d = deformation_gradients(s);
    const Vec2Field g = grad_scalar(s.theta);
    EnergyBreakdown e;
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        const Mat2& F = d.F[k];
        const double th = s.theta[k];
        if (terms & kElastic) e.elastic += elastic_density(F, th, p);
        if (terms & kCurvature) e.curvature += curvature_density(g[k], p);
        if (terms & kInteraction) e.interaction += interaction_density(F, th, g[k], p, model.eps_reg);
        if ((terms & kCouplingPolar) && p.mu_c != 0.0) e.coupling += coupling_density(F, th, p);
        if (terms & kCouplingSkew) e.coupling += coupling2_density(F, th, p);
        if (terms & kChiralElastic) e.chiral_elastic += chiral_elastic_density(d.Fstar[k], th, p);
        if (terms & kMixing) e.mixing += mixing_density(F, d.Fstar[k], th, p);
        e.kinetic_translational += 0.5 * p.rho * (s.v1[k] * s.v1[k] + s.v2[k] * s.v2[k]);
        e.kinetic_rotational += p.rho_rot * s.omega[k] * s.omega[k];
    }
    const double area = s.grid.cell_area();
    for (double* v : {&e.elastic, &e.curvature, &e.interaction, &e.coupling, &e.chiral_elastic, &e.mixing,
                      &e.kinetic_translational, &e.kinetic_rotational})
        *v *= area;
    return e;
}

std::string energy_csv_row(const EnergyBreakdown& e) {
    std::string row;
    for (double v : {e.elastic, e.curvature, e.interaction, e.coupling, e.chiral_elastic, e.mixing,
                     e.kinetic_translational, e.kinetic_rotational, e.total()}) {
        if (!row.empty()) row += ',';
        row += format_double(v);
    }
    return row;
}

Variations analytic_variations(const FieldState& state, const Model& model) {
    return analytic_variations(state, model, model.terms());
}

Variations analytic_variations(const FieldState& s, const Model& model, TermSet terms) {
    const Grid& grid = s.grid;
    const DeformationGradients d = deformation_gradients(s);
    const Vec2Field g = grad_scalar(s.theta);
    const Mat2 epsT = transpose(levi_civita2());

    // Stress conjugate to grad u (the F* slot enters through grad u* = eps grad u),
    // flux conjugate to grad theta, and the local theta derivative.
    Mat2Field stress(grid);
    Vec2Field flux(grid);
    ScalarField local(grid);
    Variations out;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const DensityJet j = density_jet({d.F[k], d.Fstar[k], s.theta[k], g[k]}, model, terms);
        stress[k] = j.dF + epsT * j.dFstar;
        flux[k] = j.dgrad;
        local[k] = j.dtheta(s.theta[k]);
        out.interaction_singular = out.interaction_singular || j.interaction_singular;
    }

    out.dV_du = div_matrix(stress);
    for (Vec2& v : out.dV_du.values) v = -v;
    const ScalarField div_flux = div_vector(flux);
    out.dV_dtheta = ScalarField(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) out.dV_dtheta[k] = local[k] - div_flux[k];
    return out;
}

}  // namespace cosserat
