#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <cosserat/dynamics.hpp>
#include <cosserat/energy.hpp>
#include <cosserat/errors.hpp>
#include <cosserat/initial.hpp>

#include "test_support.hpp"

using namespace cosserat;
using cosserat::testing::random_deformation;
using cosserat::testing::random_mat2;

namespace {

MaterialParams chiral_params() {
    MaterialParams p;
    p.mu = 1.3;
    p.lambda = 0.7;
    p.mu_c = 0.4;
    p.L_c = 0.2;
    p.mu_s = 0.3;
    p.lambda_s = 0.2;
    p.mu_c_s = 0.15;
    p.m1 = 0.1;
    p.m2 = -0.05;
    p.m3 = 0.07;
    return p;
}

Model make_model(ModelKind kind, CouplingKind coupling, const MaterialParams& p) {
    Model m;
    m.material = p;
    m.selector = {kind, coupling};
    return m;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(ElasticDensity, ReferenceAndRigidRotation) {
    const MaterialParams p;
    EXPECT_EQ(elastic_density(Mat2::identity(), 0.0, p), 0.0);
    SplitMix64 rng(31);
    for (int n = 0; n < 50; ++n) {
        const double t = rng.uniform(-3.0, 3.0);
        EXPECT_NEAR(elastic_density(rot2(t), t, p), 0.0, 1e-28);
    }
}

TEST(ElasticDensity, ExpandedFormAgrees) {
    MaterialParams p;
    p.mu = 1.7;
    p.lambda = 2.3;
    SplitMix64 rng(32);
    for (int n = 0; n < 1000; ++n) {
        const Mat2 F = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0);
        const double a = elastic_density(F, t, p), b = elastic_density_expanded(F, t, p);
        EXPECT_LT(std::abs(a - b) / std::max(std::abs(a), 1.0), 1e-12);
    }
}

TEST(CurvatureDensity, Values) {
    MaterialParams p;
    EXPECT_EQ(curvature_density({0.0, 0.0}, p), 0.0);
    p.mu = 1.0;
    p.L_c = 0.5;
    EXPECT_DOUBLE_EQ(curvature_density({1.0, 2.0}, p), 1.25);
}

TEST(CurvatureDensity, MatchesCurlForm) {
    const Grid g(128, 128, 1.0, 1.0);
    ScalarField th(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
            th(i, j) = 0.4 * std::sin(2 * std::numbers::pi * g.x(i)) * std::sin(2 * std::numbers::pi * g.y(j));
    const MaterialParams p;
    const Mat2Field R = rotation_field(th);
    const Vec2Field c = curl2_matrix(R);
    const Vec2Field gt = grad_scalar(th);
    double err = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Vec2 rc = transpose(R[k]) * c[k];
        const double w = curvature_density(gt[k], p);
        err = std::max(err, std::abs(p.mu * p.L_c * p.L_c * dot(rc, rc) - w));
        scale = std::max(scale, w);
    }
    EXPECT_LT(err / scale, 2e-3);
}

TEST(InteractionDensity, Values) {
    MaterialParams p;
    p.chi = 0.0;
    EXPECT_EQ(interaction_density(Mat2{{1.2, 0.3, -0.1, 0.9}}, 0.4, {1.0, 2.0}, p, 1e-8), 0.0);
    p.chi = 1.0;
    EXPECT_EQ(interaction_density(Mat2{{1.2, 0.3, -0.1, 0.9}}, 0.4, {0.0, 0.0}, p, 0.0), 0.0);
    EXPECT_EQ(interaction_density(Mat2{{1.2, 0.3, -0.1, 0.9}}, 0.4, {0.0, 0.0}, p, 1e-8), 0.0);
    p.mu = 1.0;
    p.L_c = 1.0;
    EXPECT_DOUBLE_EQ(interaction_density(Mat2::identity(), 0.0, {3.0, 4.0}, p, 0.0), 10.0);
}

TEST(RegularizedNorm, Limits) {
    EXPECT_EQ(regularized_norm({3.0, 4.0}, 0.0), 5.0);
    EXPECT_EQ(regularized_norm({0.0, 0.0}, 1e-8), 0.0);
    EXPECT_NEAR(regularized_norm({3.0, 4.0}, 1e-8), 5.0 - 1e-8, 1e-15);
}

TEST(CouplingDensity, Values) {
    MaterialParams p;
    p.mu_c = 0.7;
    EXPECT_EQ(coupling_density(Mat2::identity(), 0.0, p), 0.0);
    SplitMix64 rng(33);
    for (int n = 0; n < 20; ++n) {
        const double t = rng.uniform(-3.0, 3.0);
        EXPECT_NEAR(coupling_density(rot2(t), t, p), 0.0, 1e-28);
    }
    // |(-1) - 1|^2 by direct Frobenius evaluation
    const Mat2 d = transpose(rot2(std::numbers::pi)) - Mat2::identity();
    EXPECT_NEAR(coupling_density(Mat2::identity(), std::numbers::pi, p), p.mu_c * norm2(d), 1e-14);
    EXPECT_NEAR(coupling_density(Mat2::identity(), std::numbers::pi, p), 8.0 * p.mu_c, 1e-14);
    EXPECT_THROW(coupling_density(Mat2{{1, 0, 0, -1}}, 0.0, p), DegenerateDeformation);
}

TEST(CouplingDensity, ExpandedFormAgrees) {
    MaterialParams p;
    p.mu_c = 0.9;
    SplitMix64 rng(34);
    for (int n = 0; n < 500; ++n) {
        const Mat2 F = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0);
        EXPECT_NEAR(coupling_density(F, t, p), coupling_density_expanded(F, t, p), 1e-13);
    }
}

TEST(Coupling2Density, SymmetricStretchIsFree) {
    MaterialParams p;
    const double t = 0.8;
    const Mat2 S{{1.3, 0.2, 0.2, 0.9}};
    EXPECT_NEAR(coupling2_density(rot2(t) * S, t, p), 0.0, 1e-30);
}

TEST(Coupling2Density, SmallAngleAgreesWithPolar) {
    MaterialParams p;
    p.mu_c = 1.0;
    for (double t : {1e-1, 5e-2, 2.5e-2}) {
        const double a = coupling2_density(Mat2::identity(), t, p);
        const double b = coupling_density(Mat2::identity(), t, p);
        EXPECT_NEAR(a, 2.0 * std::sin(t) * std::sin(t), 1e-15);
        EXPECT_LT(std::abs(a - b), 0.6 * t * t * t * t);
    }
}

// The printed trace form carries 3 mu_c where the 2D identity gives none.
TEST(Coupling2Density, TraceFormConstant) {
    MaterialParams p;
    p.mu_c = 0.65;
    SplitMix64 rng(35);
    for (int n = 0; n < 200; ++n) {
        const Mat2 F = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0);
        EXPECT_NEAR(coupling2_density_trace_form(F, t, p) - coupling2_density(F, t, p), 3.0 * p.mu_c, 1e-12);
    }
}

TEST(ChiralElasticDensity, ZeroCases) {
    MaterialParams p = chiral_params();
    EXPECT_EQ(chiral_elastic_density(Mat2::identity(), 0.0, p), 0.0);
    p.mu_s = p.lambda_s = p.mu_c_s = 0.0;
    EXPECT_EQ(chiral_elastic_density(Mat2{{1.3, 0.1, 0.4, 0.8}}, 0.3, p), 0.0);
}

TEST(ChiralElasticDensity, Compositional) {
    const MaterialParams p = chiral_params();
    MaterialParams starred = p;
    starred.mu = p.mu_s;
    starred.lambda = p.lambda_s;
    starred.mu_c = p.mu_c_s;
    SplitMix64 rng(36);
    for (int n = 0; n < 200; ++n) {
        const Mat2 Fs = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0);
        const double expect = elastic_density(Fs, t, starred) + coupling2_density(Fs, t, starred);
        EXPECT_NEAR(chiral_elastic_density(Fs, t, p), expect, 1e-13);
    }
}

TEST(MixingDensity, ZeroCasesAndSymmetry) {
    MaterialParams p = chiral_params();
    EXPECT_EQ(mixing_density(Mat2::identity(), Mat2::identity(), 0.0, p), 0.0);
    SplitMix64 rng(37);
    p.m3 = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Mat2 F = random_deformation(rng), Fs = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0);
        EXPECT_NEAR(mixing_density(F, Fs, t, p), mixing_density(Fs, F, t, p), 1e-13);
    }
    p.m1 = p.m2 = p.m3 = 0.0;
    EXPECT_EQ(mixing_density(Mat2{{1.1, 0.2, 0.3, 0.9}}, Mat2{{0.7, 0.1, 0.2, 1.4}}, 0.5, p), 0.0);
}

TEST(Densities, NonNegative) {
    const MaterialParams p = chiral_params();
    SplitMix64 rng(38);
    for (int n = 0; n < 1000; ++n) {
        const Mat2 F = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0);
        const Vec2 g{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        EXPECT_GE(elastic_density(F, t, p), 0.0);
        EXPECT_GE(curvature_density(g, p), 0.0);
        EXPECT_GE(coupling_density(F, t, p), -1e-15);
        EXPECT_GE(coupling2_density(F, t, p), 0.0);
        EXPECT_GE(chiral_elastic_density(F, t, p), 0.0);
    }
}

TEST(Densities, FrameIndifference) {
    MaterialParams p;
    p.chi = 0.3;
    SplitMix64 rng(39);
    for (int n = 0; n < 200; ++n) {
        const Mat2 F = random_deformation(rng);
        const double t = rng.uniform(-3.0, 3.0), a = rng.uniform(-3.0, 3.0);
        const Vec2 g{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Mat2 QF = rot2(a) * F;
        EXPECT_LT(rel(elastic_density(QF, t + a, p), elastic_density(F, t, p)), 1e-13);
        EXPECT_LT(rel(interaction_density(QF, t + a, g, p, 1e-8), interaction_density(F, t, g, p, 1e-8)), 1e-13);
        EXPECT_LT(rel(coupling_density(QF, t + a, p), coupling_density(F, t, p)), 1e-13);
        EXPECT_LT(rel(coupling2_density(QF, t + a, p), coupling2_density(F, t, p)), 1e-13);
    }
}

TEST(DensityJet, InteractionVanishesAtFlatTraceFreeNode) {
    MaterialParams p;
    p.chi = 0.8;
    Model m;
    m.material = p;
    m.eps_reg = 0.0;
    NodeInputs in;
    in.theta = 0.3;
    in.F = rot2(0.3) * Mat2{{1.0, 0.4, -0.2, -1.0}};  // tr(Rb^T F) = 0
    in.grad_theta = {0.0, 0.0};
    const DensityJet j = density_jet(in, m, kInteraction);
    EXPECT_EQ(j.value, 0.0);
    EXPECT_EQ(j.dF, Mat2::zero());
    EXPECT_EQ(j.dRbar, Mat2::zero());
    EXPECT_EQ(j.dgrad, (Vec2{0.0, 0.0}));
}

TEST(TotalEnergy, ZeroState) {
    const Grid g(8, 8, 1.0, 1.0);
    MaterialParams p = chiral_params();
    p.chi = 0.5;
    for (auto sel : {ModelSelector{ModelKind::NonChiral, CouplingKind::Polar},
                     ModelSelector{ModelKind::NonChiral, CouplingKind::Skew}, ModelSelector{ModelKind::Chiral, {}}}) {
        Model m;
        m.material = p;
        m.selector = sel;
        const EnergyBreakdown e = total_energy(FieldState(g), m);
        EXPECT_EQ(e.potential(), 0.0);
        EXPECT_EQ(e.kinetic(), 0.0);
    }
}

TEST(TotalEnergy, ConstantSpin) {
    const Grid g(8, 6, 2.0, 1.5);
    MaterialParams p;
    p.rho_rot = 0.7;
    FieldState s(g);
    s.omega = ScalarField(g, 1.3);
    Model m;
    m.material = p;
    const EnergyBreakdown e = total_energy(s, m);
    EXPECT_NEAR(e.kinetic_rotational, 0.7 * 1.3 * 1.3 * 3.0, 1e-13);
    EXPECT_EQ(e.kinetic_translational, 0.0);
}

// tr(dRb/dt^T dRb/dt) = 2 |theta_t|^2
TEST(TotalEnergy, RotationalKineticAlternative) {
    SplitMix64 rng(40);
    for (int n = 0; n < 100; ++n) {
        const double t = rng.uniform(-3, 3), w = rng.uniform(-2, 2);
        const Mat2 Rdot = w * drot2(t);
        EXPECT_NEAR(trace(transpose(Rdot) * Rdot), 2.0 * w * w, 1e-14);
    }
}

TEST(TotalEnergy, CsvRow) {
    EnergyBreakdown e;
    e.elastic = 0.5;
    e.kinetic_rotational = 0.25;
    EXPECT_EQ(energy_csv_row(e), "0.5,0,0,0,0,0,0,0.25,0.75");
    EXPECT_STREQ(kEnergyCsvHeader, "elastic,curvature,interaction,coupling,chiral_elastic,mixing,kin_trans,kin_rot,total");
}

TEST(AnalyticVariations, ZeroStateIsCritical) {
    const Grid g(8, 8, 1.0, 1.0);
    MaterialParams p = chiral_params();
    p.chi = 0.5;
    for (auto sel : {ModelSelector{ModelKind::NonChiral, CouplingKind::Polar}, ModelSelector{ModelKind::Chiral, {}}}) {
        Model m;
        m.material = p;
        m.selector = sel;
        const Variations v = analytic_variations(FieldState(g), m);
        for (std::size_t k = 0; k < g.size(); ++k) {
            EXPECT_EQ(v.dV_du[k].x, 0.0);
            EXPECT_EQ(v.dV_du[k].y, 0.0);
            EXPECT_EQ(v.dV_dtheta[k], 0.0);
        }
    }
}

class FdGradient : public ::testing::TestWithParam<Term> {};

TEST_P(FdGradient, MatchesCentralDifferences) {
    const Grid g(32, 32, 1.0, 1.0);
    // min |grad theta| is about 4e-3 on this state
    const FieldState s = random_smooth_state(g, 2, 0.05, 3);
    MaterialParams p = chiral_params();
    p.chi = 0.6;
    const Term t = GetParam();
    const ModelKind kind = (t == kChiralElastic || t == kMixing) ? ModelKind::Chiral : ModelKind::NonChiral;
    const CouplingKind cpl = t == kCouplingSkew ? CouplingKind::Skew : CouplingKind::Polar;
    const VerificationReport r = fd_gradient_check(s, make_model(kind, cpl, p), t);
    ASSERT_EQ(r.checks().size(), 1u);
    EXPECT_EQ(r.checks()[0].status, CheckStatus::Pass) << r.checks()[0].name << " " << r.checks()[0].max_abs_error;
}

INSTANTIATE_TEST_SUITE_P(AllTerms, FdGradient,
                         ::testing::Values(kElastic, kCurvature, kInteraction, kCouplingPolar, kCouplingSkew,
                                           kChiralElastic, kMixing),
                         [](const auto& info) { return std::string(term_name(info.param)); });

// Near a node with small |grad theta| the difference quotient of the
// regularized norm converges at second order towards the analytic value.
TEST(FdGradient, InteractionConvergesNearFlatNodes) {
    const Grid g(32, 32, 1.0, 1.0);
    const FieldState s = random_smooth_state(g, 77, 0.05, 3);
    double min_g = 1e9;
    for (const Vec2& v : grad_scalar(s.theta).values) min_g = std::min(min_g, norm(v));
    ASSERT_LT(min_g, 1e-3);
    MaterialParams p = chiral_params();
    p.chi = 0.6;
    const Model m = make_model(ModelKind::NonChiral, CouplingKind::Polar, p);
    double prev = 0.0;
    for (double h : {1e-5, 1e-6, 1e-7}) {
        ConsistencyOptions o;
        o.fd_step = h;
        const double e = fd_gradient_check(s, m, kInteraction, o).checks()[0].max_abs_error;
        if (prev > 0.0) EXPECT_NEAR(prev / e, 100.0, 5.0);
        prev = e;
    }
}

TEST(FdGradient, InteractionSkippedWhenSingular) {
    const Grid g(8, 8, 1.0, 1.0);
    FieldState s = random_smooth_state(g, 3, 0.05, 2);
    s.theta = ScalarField(g, 0.2);
    Model m;
    m.material.chi = 0.5;
    m.eps_reg = 0.0;
    const VerificationReport r = fd_gradient_check(s, m, kInteraction);
    ASSERT_EQ(r.checks().size(), 1u);
    EXPECT_EQ(r.checks()[0].status, CheckStatus::Skipped);
    EXPECT_FALSE(r.checks()[0].reason.empty());
}
