#include <gtest/gtest.h>

#include <cmath>

#include <cosserat/reduction3d.hpp>

#include "test_support.hpp"

using namespace cosserat;

namespace {

double max_abs(const Mat3& m) {
    double r = 0.0;
    for (double v : m.m) r = std::max(r, std::abs(v));
    return r;
}

void expect_all_pass(const VerificationReport& r) {
    EXPECT_TRUE(r.all_pass());
    for (const Check& c : r.checks())
        EXPECT_EQ(c.status, CheckStatus::Pass) << c.name << " err=" << c.max_abs_error << " tol=" << c.tolerance;
}

}  // namespace

TEST(Dual3, ChainRule) {
    const Dual3 x = Dual3::variable(0.7, 0);
    const Dual3 y = Dual3::variable(-0.3, 1);
    const Dual3 f = sin(x * y) / (x + 2.0) + sqrt(x * x + 1.0);
    const double fx = std::cos(0.7 * -0.3) * -0.3 / 2.7 - std::sin(0.7 * -0.3) / (2.7 * 2.7) + 0.7 / std::sqrt(1.49);
    const double fy = std::cos(0.7 * -0.3) * 0.7 / 2.7;
    EXPECT_NEAR(f.d[0], fx, 1e-15);
    EXPECT_NEAR(f.d[1], fy, 1e-15);
    EXPECT_EQ(f.d[2], 0.0);
}

TEST(Rodrigues, OrthogonalAndSeriesContinuous) {
    SplitMix64 rng(71);
    for (int n = 0; n < 100; ++n) {
        const Mat3 R = to_mat3(rodrigues(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)));
        EXPECT_LT(max_abs(transpose(R) * R - Mat3::identity()), 1e-14);
        EXPECT_NEAR(det(R), 1.0, 1e-14);
    }
    const Mat3 a = to_mat3(rodrigues(0.99e-4, 0.0, 0.0));
    const Mat3 b = to_mat3(rodrigues(1.01e-4, 0.0, 0.0));
    EXPECT_LT(max_abs(a - b), 3e-6);
}

TEST(Curl3, ConstantIsZero) {
    const MatrixJet3 j = to_jet(rodrigues(Dual3(0.3), Dual3(-0.2), Dual3(0.5)));
    EXPECT_EQ(max_abs(curl3_matrix(j)), 0.0);
}

// Analytic derivatives of a rotation field against central differences.
TEST(Curl3, JetMatchesFiniteDifferences) {
    auto w = [](double x, double y, double z) {
        return std::array<double, 3>{0.3 * std::sin(y) + 0.2 * z, 0.4 * std::cos(x + z), 0.5 * std::sin(x * y)};
    };
    const std::array<double, 3> p{0.3, -0.7, 0.4};
    const std::array<Dual3, 3> X{Dual3::variable(p[0], 0), Dual3::variable(p[1], 1), Dual3::variable(p[2], 2)};
    const MatrixJet3 jet = to_jet(rodrigues(0.3 * sin(X[1]) + 0.2 * X[2], 0.4 * cos(X[0] + X[2]), 0.5 * sin(X[0] * X[1])));
    const double h = 1e-6;
    for (int m = 0; m < 3; ++m) {
        auto at = [&](double s) {
            std::array<double, 3> q = p;
            q[static_cast<std::size_t>(m)] += s;
            const auto v = w(q[0], q[1], q[2]);
            return to_mat3(rodrigues(v[0], v[1], v[2]));
        };
        const Mat3 fd = (1.0 / (2 * h)) * (at(h) - at(-h));
        EXPECT_LT(max_abs(fd - jet.d[static_cast<std::size_t>(m)]), 1e-9);
    }
}

TEST(FirstProblem, CurvatureStructure) {
    const PlanarSample3D s = PlanarSample3D::standard(1, 10);
    for (const auto& pt : s.points) {
        const Mat3 C = first_problem_curvature(s, pt[0], pt[1]);
        const double phix = -0.2 * std::sin(pt[0]);
        Mat3 expect{};
        expect(0, 2) = -phix;
        EXPECT_LT(max_abs(C - expect), 1e-14);
        EXPECT_NEAR(norm2(C), phix * phix, 1e-15);
    }
}

TEST(FirstProblem, StandardSamplePasses) {
    const VerificationReport r = first_problem_check(PlanarSample3D::standard(2024, 100), 1e-12);
    expect_all_pass(r);
    ASSERT_EQ(r.notes().size(), 1u);
    EXPECT_GT(r.notes()[0].value, 1e-3);
}

TEST(FirstProblem, TrivialSampleIsZero) {
    const VerificationReport r = first_problem_check(PlanarSample3D::trivial(0.4, 20));
    for (const Check& c : r.checks()) EXPECT_LT(c.max_abs_error, 1e-15) << c.name;
    EXPECT_EQ(r.notes()[0].value, 0.0);
}

TEST(SecondProblem, ZeroAngleIsIdentity) {
    EXPECT_EQ(to_mat3(second_problem_rotation(0.0, 0.0)), Mat3::identity());
}

TEST(SecondProblem, RotationOrthogonal) {
    SplitMix64 rng(72);
    for (int n = 0; n < 100; ++n) {
        const Mat3 R = to_mat3(second_problem_rotation(rng.uniform(-3, 3), rng.uniform(-3, 3)));
        EXPECT_LT(max_abs(transpose(R) * R - Mat3::identity()), 1e-12);
    }
}

TEST(SecondProblem, StandardSamplePasses) { expect_all_pass(second_problem_check(PlanarSample3D::standard(7, 100))); }

TEST(SecondProblem, SmallRotationIsSecondOrderAccurate) {
    const ScalarFn2 a = [](const Dual3& x, const Dual3& y) { return 0.4 * x - 0.9 * y; };
    const ScalarFn2 b = [](const Dual3& x, const Dual3& y) { return 0.7 * x + 0.2 * y; };
    double prev = 0.0;
    for (double scale : {1e-2, 5e-3, 2.5e-3}) {
        const ScalarFn2 as = [&](const Dual3& x, const Dual3& y) { return scale * a(x, y); };
        const ScalarFn2 bs = [&](const Dual3& x, const Dual3& y) { return scale * b(x, y); };
        const Mat3 d = second_problem_curvature(as, bs, 0.3, -0.4) - small_rotation_curvature(as, bs, 0.3, -0.4);
        const double e = max_abs(d);
        if (prev > 0.0) EXPECT_NEAR(prev / e, 4.0, 0.05);
        prev = e;
    }
}

TEST(Inversion, StandardProbePasses) { expect_all_pass(chirality_inversion_check(ChiralProbe::standard(99, 50))); }

TEST(Inversion, ConstantRotationIsZero) {
    const ChiralProbe p = ChiralProbe::constant_rotation(5, 10);
    for (const auto& x : p.points) EXPECT_EQ(chiral_invariant(p, x), 0.0);
    expect_all_pass(chirality_inversion_check(p));
}

TEST(Inversion, PlanarFieldsKillInvariant) {
    const ChiralProbe p = ChiralProbe::planar(PlanarSample3D::standard(3, 50));
    for (const auto& x : p.points) EXPECT_LT(std::abs(chiral_invariant(p, x)), 1e-15);
}

TEST(Inversion, InvariantIsGenericallyNonzero) {
    const ChiralProbe p = ChiralProbe::standard(99, 20);
    double m = 0.0;
    for (const auto& x : p.points) m = std::max(m, std::abs(chiral_invariant(p, x)));
    EXPECT_GT(m, 1e-2);
}
