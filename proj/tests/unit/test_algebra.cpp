#include <gtest/gtest.h>

#include <numbers>

#include <Eigen/Dense>

#include <cosserat/algebra.hpp>
#include <cosserat/errors.hpp>

#include "test_support.hpp"

using namespace cosserat;
using cosserat::testing::max_abs;
using cosserat::testing::random_deformation;
using cosserat::testing::random_mat2;

TEST(Rot2, IdentityAtZero) { EXPECT_EQ(rot2(0.0), Mat2::identity()); }

TEST(Rot2, MinusQuarterTurnIsLeviCivita) {
    EXPECT_LT(max_abs(rot2(-std::numbers::pi / 2) - levi_civita2()), 1e-16);
}

TEST(Rot2, InverseAndSO2) {
    SplitMix64 rng(1);
    for (int n = 0; n < 100; ++n) {
        const double t = rng.uniform(-10.0, 10.0);
        const Mat2 R = rot2(t);
        EXPECT_LT(max_abs(R * rot2(-t) - Mat2::identity()), 1e-15);
        EXPECT_LT(max_abs(transpose(R) * R - Mat2::identity()), 1e-14);
        EXPECT_LT(std::abs(det(R) - 1.0), 1e-14);
    }
}

TEST(Rot2, DerivativeIsMinusEpsR) {
    SplitMix64 rng(2);
    for (int n = 0; n < 20; ++n) {
        const double t = rng.uniform(-4.0, 4.0);
        EXPECT_LT(max_abs(drot2(t) + levi_civita2() * rot2(t)), 1e-15);
    }
}

TEST(Rot2, TraceEpsRot) {
    SplitMix64 rng(3);
    for (int n = 0; n < 100; ++n) {
        const double p = rng.uniform(-6.0, 6.0);
        EXPECT_NEAR(trace(levi_civita2() * rot2(p)), 2.0 * std::sin(p), 1e-14);
    }
}

TEST(Decompose, Identity) {
    const auto d = decompose(Mat2::identity());
    EXPECT_EQ(d.sym, Mat2::identity());
    EXPECT_EQ(d.skew, Mat2::zero());
    EXPECT_EQ(d.trace, 2.0);
}

TEST(Decompose, LeviCivitaIsSkew) {
    const auto d = decompose(levi_civita2());
    EXPECT_EQ(d.sym, Mat2::zero());
    EXPECT_EQ(d.skew, levi_civita2());
    EXPECT_EQ(d.trace, 0.0);
}

TEST(Decompose, Reassembles) {
    SplitMix64 rng(4);
    for (int n = 0; n < 100; ++n) {
        const Mat2 M = random_mat2(rng, -5.0, 5.0);
        const auto d = decompose(M);
        EXPECT_LT(max_abs(d.sym + d.skew - M), 1e-15);
        EXPECT_EQ(d.sym, transpose(d.sym));
        EXPECT_EQ(d.skew, -transpose(d.skew));
        EXPECT_EQ(d.trace, M(0, 0) + M(1, 1));
    }
}

TEST(Frobenius, Values) {
    EXPECT_EQ(frobenius(Mat2::identity(), Mat2::identity()), 2.0);
    EXPECT_EQ(frobenius(levi_civita2(), levi_civita2()), 2.0);
    SplitMix64 rng(5);
    for (int n = 0; n < 100; ++n) {
        const Mat2 A = random_mat2(rng), B = random_mat2(rng);
        EXPECT_NEAR(frobenius(A, B), trace(A * transpose(B)), 1e-15);
    }
}

TEST(Frobenius, Mat3) {
    EXPECT_EQ(frobenius(Mat3::identity(), Mat3::identity()), 3.0);
    EXPECT_EQ(det(Mat3::identity()), 1.0);
}

TEST(Polar2, Identity) {
    const Polar2 p = polar2(Mat2::identity());
    EXPECT_EQ(p.R, Mat2::identity());
    EXPECT_LT(max_abs(p.U - Mat2::identity()), 1e-16);
    EXPECT_DOUBLE_EQ(p.trU, 2.0);
}

TEST(Polar2, RotationInput) {
    SplitMix64 rng(6);
    for (int n = 0; n < 50; ++n) {
        const double t = rng.uniform(-3.0, 3.0);
        const Polar2 p = polar2(rot2(t));
        EXPECT_LT(max_abs(p.R - rot2(t)), 1e-15);
        EXPECT_LT(max_abs(p.U - Mat2::identity()), 1e-15);
    }
}

TEST(Polar2, StretchMatchesEigenSquareRoot) {
    SplitMix64 rng(7);
    for (int n = 0; n < 200; ++n) {
        const Mat2 F = random_deformation(rng);
        const Polar2 p = polar2(F);
        Eigen::Matrix2d Fe;
        Fe << F(0, 0), F(0, 1), F(1, 0), F(1, 1);
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(Fe.transpose() * Fe);
        const Eigen::Matrix2d U =
            es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) EXPECT_NEAR(p.U(i, j), U(i, j), 1e-12);
    }
}

TEST(Polar2, RoundTripAndProperRotation) {
    SplitMix64 rng(8);
    for (int n = 0; n < 1000; ++n) {
        const Mat2 F = random_deformation(rng);
        const Polar2 p = polar2(F);
        EXPECT_LT(std::sqrt(norm2(p.R * p.U - F) / norm2(F)), 1e-13);
        EXPECT_LT(max_abs(transpose(p.R) * p.R - Mat2::identity()), 1e-14);
        EXPECT_NEAR(det(p.R), 1.0, 1e-14);
        EXPECT_EQ(p.U(0, 1), p.U(1, 0));
        EXPECT_GT(det(p.U), 0.0);
        EXPECT_GT(p.U(0, 0), 0.0);
    }
}

TEST(Polar2, DegenerateThrows) {
    EXPECT_THROW(polar2(Mat2{{1.0, 0.0, 0.0, -1.0}}), DegenerateDeformation);
    EXPECT_THROW(polar2(Mat2::zero()), DegenerateDeformation);
    EXPECT_THROW(dpolar2_dir(Mat2{{1.0, 2.0, 1.0, 2.0}}, Mat2::identity()), DegenerateDeformation);
    EXPECT_THROW(dpolar2_dF(Mat2{{-1.0, 0.0, 0.0, 1.0}}), DegenerateDeformation);
}

TEST(DPolar2, IdentityGivesSkew) {
    SplitMix64 rng(9);
    for (int n = 0; n < 20; ++n) {
        const Mat2 E = random_mat2(rng);
        EXPECT_LT(max_abs(dpolar2_dir(Mat2::identity(), E) - skew(E)), 1e-15);
    }
}

TEST(DPolar2, MatchesFiniteDifferences) {
    SplitMix64 rng(10);
    const double h = 1e-6;
    for (int n = 0; n < 100; ++n) {
        const Mat2 F = random_deformation(rng);
        const Mat2 E = random_mat2(rng);
        const Mat2 fd = (1.0 / (2.0 * h)) * (polar2(F + h * E).R - polar2(F - h * E).R);
        const Mat2 an = dpolar2_dir(F, E);
        EXPECT_LT(max_abs(an - fd) / std::max(max_abs(an), 1e-12), 1e-6);
    }
}

TEST(DPolar2, TensorMatchesDirectional) {
    SplitMix64 rng(11);
    for (int n = 0; n < 50; ++n) {
        const Mat2 F = random_deformation(rng);
        const Mat2 E = random_mat2(rng);
        EXPECT_LT(max_abs(dpolar2_dF(F).apply(E) - dpolar2_dir(F, E)), 1e-13);
    }
}

TEST(DPolar2, LinearInDirection) {
    SplitMix64 rng(12);
    for (int n = 0; n < 50; ++n) {
        const Mat2 F = random_deformation(rng);
        const Mat2 E1 = random_mat2(rng), E2 = random_mat2(rng);
        const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
        const Mat2 lhs = dpolar2_dir(F, a * E1 + b * E2);
        const Mat2 rhs = a * dpolar2_dir(F, E1) + b * dpolar2_dir(F, E2);
        EXPECT_LT(max_abs(lhs - rhs), 1e-13);
    }
}

// d/dF tr(Rb^T polar(F)) = (Rb - R Rb^T R) / tr U.
TEST(DPolar2, CouplingGradient) {
    SplitMix64 rng(13);
    const double h = 1e-6;
    for (int n = 0; n < 50; ++n) {
        const Mat2 F = random_deformation(rng);
        const Mat2 Rb = rot2(rng.uniform(-3.0, 3.0));
        const Polar2 p = polar2(F);
        const Mat2 grad = (1.0 / p.trU) * (Rb - p.R * transpose(Rb) * p.R);
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                Mat2 dF{};
                dF(k, l) = h;
                const double fd =
                    (trace(transpose(Rb) * polar2(F + dF).R) - trace(transpose(Rb) * polar2(F - dF).R)) / (2 * h);
                EXPECT_NEAR(grad(k, l), fd, 1e-7);
            }
    }
}

TEST(Mat3Ops, DevIsTraceFree) {
    const Mat3 M{{1, 2, 3, 4, 5, 6, 7, 8, 10}};
    EXPECT_NEAR(trace(dev(M)), 0.0, 1e-15);
    EXPECT_NEAR(det(M), -3.0, 1e-13);
}

TEST(LeviCivita3, Values) {
    EXPECT_EQ(levi_civita3(0, 1, 2), 1.0);
    EXPECT_EQ(levi_civita3(1, 2, 0), 1.0);
    EXPECT_EQ(levi_civita3(1, 0, 2), -1.0);
    EXPECT_EQ(levi_civita3(0, 0, 2), 0.0);
}
