#include "cosserat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cosserat/errors.hpp"

namespace cosserat {
namespace {

const Mat2 kI = Mat2::identity();
const Mat2 kEps = levi_civita2();
const Mat2 kEpsT = transpose(levi_civita2());

// Elastic part shared by both models.
void add_elastic(NodeForces& f, const Mat2& F, const Mat2& Rb, const MaterialParams& p) {
    const Mat2 B = transpose(Rb) * F;
    const double t = trace(B);
    f.stress += 2.0 * p.mu * (Rb * sym(B)) + p.lambda * t * Rb - 2.0 * (p.mu + p.lambda) * Rb;
    f.torque += -(p.mu + p.lambda) * eps_contract(B) + 0.5 * p.mu * eps_contract(B * B) +
                0.5 * p.lambda * t * eps_contract(B);
}

template <class NodeFn>
RhsFields assemble(const FieldState& s, double rho, double rho_rot, NodeFn&& node) {
    const Grid& g = s.grid;
    const DeformationGradients d = deformation_gradients(s);
    const Vec2Field grad = grad_scalar(s.theta);
    Mat2Field stress(g);
    Vec2Field flux(g);
    ScalarField torque(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const NodeForces f = node(NodeInputs{d.F[k], d.Fstar[k], s.theta[k], grad[k]});
        stress[k] = f.stress;
        flux[k] = f.flux;
        torque[k] = f.torque;
    }
    RhsFields out{div_matrix(stress), div_vector(flux)};
    for (std::size_t k = 0; k < g.size(); ++k) {
        out.acc_u[k] *= 1.0 / rho;
        out.acc_theta[k] = (out.acc_theta[k] + torque[k]) / rho_rot;
    }
    return out;
}

}  // namespace

NodeForces nonlinear_node_forces(const NodeInputs& in, const Model& model) {
    const MaterialParams& p = model.material;
    const Mat2& F = in.F;
    const Mat2 Rb = rot2(in.theta);
    const Mat2 B = transpose(Rb) * F;
    NodeForces f;
    add_elastic(f, F, Rb, p);
    f.flux = p.mu * p.L_c * p.L_c * in.grad_theta;

    if (p.chi != 0.0) {
        const double k = p.mu * p.L_c * p.chi;
        const double n = regularized_norm(in.grad_theta, model.eps_reg);
        const double root = std::sqrt(dot(in.grad_theta, in.grad_theta) + model.eps_reg * model.eps_reg);
        const Vec2 unit = root > 0.0 ? (1.0 / root) * in.grad_theta : Vec2{};
        f.stress += k * n * Rb;
        f.flux += 0.5 * k * trace(B) * unit;
        f.torque += 0.5 * k * n * eps_contract(B);
    }

    if (model.selector.coupling == CouplingKind::Polar) {
        if (p.mu_c != 0.0) {
            const Polar2 pd = polar2(F);
            const Mat2 RbR = transpose(Rb) * pd.R;
            f.stress += (4.0 * p.mu_c / pd.trU) * (pd.R * skew(RbR));
            f.torque += -p.mu_c * eps_contract(RbR);
        }
    } else {
        f.stress += p.mu_c * (F - Rb * transpose(F) * Rb);
        f.torque += -0.5 * p.mu_c * eps_contract(B * B);
    }
    return f;
}

RhsFields rhs_nonlinear(const FieldState& s, const Model& model) {
    return assemble(s, model.material.rho, model.material.rho_rot,
                    [&](const NodeInputs& in) { return nonlinear_node_forces(in, model); });
}

NodeForces chiral_node_forces(const NodeInputs& in, const MaterialParams& p) {
    const Mat2& F = in.F;
    const Mat2& Fs = in.Fstar;
    const Mat2 Rb = rot2(in.theta);
    const Mat2 A = transpose(Rb) * Fs;
    const Mat2 B = transpose(Rb) * F;
    const double trA = trace(A);
    const double trB = trace(B);
    const Mat2 RFsR = Rb * transpose(Fs) * Rb;
    const Mat2 RFR = Rb * transpose(F) * Rb;

    NodeForces f;
    add_elastic(f, F, Rb, p);
    f.flux = p.mu * p.L_c * p.L_c * in.grad_theta;

    // coupling(2)
    f.stress += p.mu_c * (F - RFR);
    f.torque += -0.5 * p.mu_c * eps_contract(B * B);

    // starred elastic energy, conjugate to F*
    Mat2 star = p.mu_s * (RFsR + Fs) - 2.0 * (p.mu_s + p.lambda_s) * Rb + p.lambda_s * trA * Rb +
                p.mu_c_s * (Fs - RFsR);
    f.torque += -(p.mu_s + p.lambda_s) * eps_contract(A) + 0.5 * p.mu_s * eps_contract(A * A) +
                0.5 * p.lambda_s * trA * eps_contract(A) - 0.5 * p.mu_c_s * eps_contract(A * A);

    // mixing
    f.stress += p.m1 * (0.5 * (Fs + RFsR) - Rb) + p.m2 * (trA - 2.0) * Rb + 0.5 * p.m3 * (Fs - RFsR);
    star += p.m1 * (0.5 * (F + RFR) - Rb) + p.m2 * (trB - 2.0) * Rb + 0.5 * p.m3 * (F - RFR);
    const double ec_ab = eps_contract(A * B + B * A);
    f.torque += p.m1 * (0.25 * ec_ab - 0.5 * eps_contract(A) - 0.5 * eps_contract(B)) +
                0.5 * p.m2 * ((trB - 2.0) * eps_contract(A) + (trA - 2.0) * eps_contract(B)) - 0.25 * p.m3 * ec_ab;

    // grad u* = eps grad u, so the F*-conjugate enters the u-equation as eps^T (.)
    f.stress += kEpsT * star;
    return f;
}

RhsFields rhs_chiral(const FieldState& s, const Model& model) {
    const MaterialParams& p = model.material;
    return assemble(s, p.rho, p.rho_rot, [&](const NodeInputs& in) { return chiral_node_forces(in, p); });
}

NodeForces chiral_printed_node_forces(const NodeInputs& in, const MaterialParams& p) {
    const Mat2& F = in.F;
    const Mat2& Fs = in.Fstar;
    const Mat2 Rb = rot2(in.theta);
    const Mat2 RbT = transpose(Rb);
    const Mat2 A = RbT * Fs;
    const Mat2 B = RbT * F;
    const double trA = trace(A);
    const double trB = trace(B);
    const Mat2 RFsR = Rb * transpose(Fs) * Rb;
    const Mat2 RFR = Rb * transpose(F) * Rb;
    const Mat2 cross = F * RbT * kEpsT * F + kEpsT * F * Rb * F;

    NodeForces f;
    f.stress = 2.0 * p.mu * (Rb * sym(B)) + p.lambda * trB * Rb - 2.0 * (p.mu + p.lambda) * Rb +
               p.mu_c * (F - RFR);
    f.stress -= kEpsT * (p.mu_s * (RFsR + Fs) - 2.0 * (p.mu_s + p.lambda_s) * Rb + p.lambda_s * trA * Rb +
                         p.mu_c_s * (RFsR - Fs));
    f.stress -= 0.5 * p.m1 * (kEpsT * RFR + RFsR + kEpsT * F + Fs - 2.0 * (kEpsT * Rb + Rb)) +
                p.m2 * (trA * Rb + trB * (kEpsT * Rb) - (kEpsT * Rb + Rb)) +
                0.5 * p.m3 * (kEpsT * F + Fs - cross);

    f.flux = p.mu * p.L_c * p.L_c * in.grad_theta;
    f.torque = -(p.mu + p.lambda) * eps_contract(B) + 0.5 * p.mu * eps_contract(B * B) +
               0.5 * p.lambda * trB * eps_contract(B) + p.mu_c * eps_contract(RbT * F * RbT);
    const Mat2 bracket = p.mu_s * (Fs * RbT * Fs) - 2.0 * (p.mu_s + p.lambda_s) * Fs + p.lambda_s * trA * Fs +
                         p.mu_c_s * (Fs * RbT * Fs) + 0.5 * p.m1 * (cross - 2.0 * (F + Fs)) +
                         p.m2 * (trA * F + trB * Fs - (F + Fs)) - 0.5 * p.m3 * cross;
    f.torque += frobenius(bracket, -(kEps * Rb));
    return f;
}

RhsFields rhs_chiral_printed(const FieldState& s, const Model& model) {
    const MaterialParams& p = model.material;
    return assemble(s, p.rho, p.rho_rot, [&](const NodeInputs& in) { return chiral_printed_node_forces(in, p); });
}

RhsFields rhs_full(const FieldState& s, const Model& model) {
    return model.selector.kind == ModelKind::Chiral ? rhs_chiral(s, model) : rhs_nonlinear(s, model);
}

// --- linear ------------------------------------------------------------------

LinearCoefficients LinearCoefficients::from_material(const MaterialParams& p) {
    LinearCoefficients c;
    c.rho = p.rho;
    c.varrho_rot = 4.0 * p.rho_rot;
    c.d1 = p.mu * p.L_c * p.L_c;
    c.mu = p.mu;
    c.lambda = p.lambda;
    c.mu_c = p.mu_c;
    c.mu_s = p.mu_s;
    c.lambda_s = p.lambda_s;
    c.mu_c_s = p.mu_c_s;
    c.m = 0.5 * p.m1 + p.m2;
    return c;
}

LinearForces linear_chiral_pointwise(const LinearJet& j, const LinearCoefficients& c) {
    const double ca = c.lambda + 2.0 * c.mu + c.mu_s + c.mu_c_s;
    const double cb = c.mu + c.mu_c + c.lambda_s + 2.0 * c.mu_s;
    const double cc = c.lambda + c.mu - c.mu_c - c.lambda_s - c.mu_s + c.mu_c_s;
    const double s = 2.0 * c.lambda_s + 2.0 * c.mu_s - c.mu_c_s;
    LinearForces f;
    f.f1 = ca * j.u1xx + cb * j.u1yy + cc * j.u2xy + c.m * (-2.0 * j.u1xy + j.u2xx - j.u2yy) - 2.0 * s * j.phix +
           2.0 * c.mu_c * j.phiy;
    f.f2 = cb * j.u2xx + ca * j.u2yy + cc * j.u1xy + c.m * (j.u1xx - j.u1yy + 2.0 * j.u2xy) -
           2.0 * c.mu_c * j.phix - 2.0 * s * j.phiy;
    f.f3 = 2.0 * c.d1 * (j.phixx + j.phiyy) + 4.0 * (s - c.mu_c) * j.phi + 2.0 * c.mu_c * (j.u2x - j.u1y) -
           2.0 * (c.mu_c_s - 2.0 * c.lambda_s - 2.0 * c.mu_s) * (j.u1x + j.u2y);
    return f;
}

double liu_rotational_force(const LinearJet& j, double gamma, double A, double mu_c) {
    return gamma * (j.phixx + j.phiyy) - 4.0 * (mu_c + A) * j.phi + 2.0 * mu_c * (j.u2x - j.u1y) -
           2.0 * A * (j.u1x + j.u2y);
}

RhsFields rhs_linear_chiral(const FieldState& s, const MaterialParams& p) {
    const Grid& g = s.grid;
    const LinearCoefficients c = LinearCoefficients::from_material(p);
    ScalarField phi(g);
    for (std::size_t k = 0; k < g.size(); ++k) phi[k] = -s.theta[k];

    const ScalarField u1x = diff_x(s.u1), u1y = diff_y(s.u1);
    const ScalarField u2x = diff_x(s.u2), u2y = diff_y(s.u2);
    const ScalarField u1xx = diff_xx(s.u1), u1yy = diff_yy(s.u1), u1xy = diff_x(u1y);
    const ScalarField u2xx = diff_xx(s.u2), u2yy = diff_yy(s.u2), u2xy = diff_x(u2y);
    const ScalarField px = diff_x(phi), py = diff_y(phi), pxx = diff_xx(phi), pyy = diff_yy(phi);

    RhsFields out{Vec2Field(g), ScalarField(g)};
    for (std::size_t k = 0; k < g.size(); ++k) {
        const LinearJet j{u1x[k], u1y[k], u2x[k], u2y[k], u1xx[k], u1xy[k], u1yy[k], u2xx[k],
                          u2xy[k], u2yy[k], phi[k], px[k], py[k], pxx[k], pyy[k]};
        const LinearForces f = linear_chiral_pointwise(j, c);
        out.acc_u[k] = {f.f1 / c.rho, f.f2 / c.rho};
        out.acc_theta[k] = -f.f3 / c.varrho_rot;
    }
    return out;
}

// --- homogeneous -------------------------------------------------------------

double homogeneous_residual(double t, const MaterialParams& p, const ModelSelector& sel) {
    if (sel.kind == ModelKind::NonChiral)
        return (p.lambda + p.mu + p.mu_c - (p.lambda + p.mu) * std::cos(t)) * std::sin(t);
    const double c0 = -p.m1 - 2.0 * p.m2 - p.lambda + p.lambda_s - p.mu - p.mu_c1 + p.mu_s;
    const double c1 = p.m1 + 2.0 * p.m2 - p.m3 - p.mu_c - p.mu_c_s + p.lambda + p.lambda_s + p.mu + p.mu_s;
    return (c0 + c1 * std::cos(t)) * std::sin(t);
}

double homogeneous_variational_residual(double t, const MaterialParams& p, const ModelSelector& sel) {
    const NodeInputs in{kI, kI, t, {}};
    if (sel.kind == ModelKind::Chiral) return -0.5 * chiral_node_forces(in, p).torque;
    Model m{p, sel};
    return -0.5 * nonlinear_node_forces(in, m).torque;
}

HomogeneousRoots homogeneous_roots(const MaterialParams& p, const ModelSelector& sel) {
    HomogeneousRoots r;
    r.trivial_roots = {0.0, std::numbers::pi};
    double num = 0.0;
    double den = 0.0;
    if (sel.kind == ModelKind::NonChiral) {
        num = p.mu_c;
        den = p.lambda + p.mu;
    } else {
        num = p.mu_c1 + p.mu_c + p.mu_c_s - 2.0 * p.lambda_s - 2.0 * p.mu_s + p.m3;
        den = p.lambda + p.lambda_s + p.mu + p.mu_s - p.mu_c - p.mu_c_s + p.m1 + 2.0 * p.m2 - p.m3;
    }
    if (den == 0.0) throw ZeroDenominator("homogeneous solution: denominator of cos(theta0) vanishes");
    r.fraction = num / den;
    r.nontrivial_cos = 1.0 + r.fraction;
    r.feasible = r.fraction >= -2.0 && r.fraction <= 0.0;
    if (r.feasible) {
        const double a = std::acos(std::clamp(*r.nontrivial_cos, -1.0, 1.0));
        if (a > 0.0 && a < std::numbers::pi) r.nontrivial_roots = {a, -a};
    }
    return r;
}

}  // namespace cosserat
