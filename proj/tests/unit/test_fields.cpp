#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <cosserat/errors.hpp>
#include <cosserat/fields.hpp>
#include <cosserat/initial.hpp>

#include "test_support.hpp"

using namespace cosserat;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ScalarField sample(const Grid& g, auto&& fn) {
    ScalarField f(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) f(i, j) = fn(g.x(i), g.y(j));
    return f;
}

ScalarField random_field(const Grid& g, SplitMix64& rng) {
    ScalarField f(g);
    for (double& v : f.values) v = rng.uniform(-1.0, 1.0);
    return f;
}

double max_abs(const Vec2Field& f) {
    double m = 0.0;
    for (const Vec2& v : f.values) m = std::max({m, std::abs(v.x), std::abs(v.y)});
    return m;
}

// max over nodes of |R^T Curl R + grad theta| for theta = 0.3 sin(2 pi x) cos(2 pi y)
double curvature_identity_error(int n) {
    const Grid g(n, n, 1.0, 1.0);
    const ScalarField th = sample(g, [](double x, double y) { return 0.3 * std::sin(kTwoPi * x) * std::cos(kTwoPi * y); });
    const Mat2Field R = rotation_field(th);
    const Vec2Field c = curl2_matrix(R);
    double err = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Vec2 rc = transpose(R[k]) * c[k];
        const double x = g.x(static_cast<int>(k) / n), y = g.y(static_cast<int>(k) % n);
        const Vec2 exact{0.3 * kTwoPi * std::cos(kTwoPi * x) * std::cos(kTwoPi * y),
                         -0.3 * kTwoPi * std::sin(kTwoPi * x) * std::sin(kTwoPi * y)};
        err = std::max({err, std::abs(rc.x + exact.x), std::abs(rc.y + exact.y)});
    }
    return err;
}

// The central difference of sin(kx) is sin(kh)/h cos(kx): the maximum error
// is k - sin(kh)/h, about 0.0101 at nx = 64.
double central_difference_error(double k, double h) { return k - std::sin(k * h) / h; }

}  // namespace

TEST(Grid, RejectsSmallOrNonPositive) {
    EXPECT_THROW(Grid(3, 8, 1.0, 1.0), ConfigError);
    EXPECT_THROW(Grid(8, 8, 0.0, 1.0), ConfigError);
    EXPECT_NO_THROW(Grid(4, 4, 1.0, 2.0));
}

TEST(Grid, PeriodicIndex) {
    const Grid g(4, 5, 1.0, 1.0);
    EXPECT_EQ(g.index(-1, 0), g.index(3, 0));
    EXPECT_EQ(g.index(4, 6), g.index(0, 1));
}

TEST(GradScalar, ConstantIsZero) {
    const Grid g(8, 8, 1.0, 1.0);
    EXPECT_EQ(max_abs(grad_scalar(ScalarField(g, 3.5))), 0.0);
}

TEST(GradScalar, SineConverges) {
    double prev = 0.0;
    for (int n : {32, 64, 128}) {
        const Grid g(n, n, 1.0, 1.0);
        const ScalarField f = sample(g, [](double x, double) { return std::sin(kTwoPi * x); });
        const Vec2Field d = grad_scalar(f);
        double err = 0.0;
        for (int i = 0; i < g.nx; ++i)
            for (int j = 0; j < g.ny; ++j) {
                err = std::max(err, std::abs(d(i, j).x - kTwoPi * std::cos(kTwoPi * g.x(i))));
                EXPECT_EQ(d(i, j).y, 0.0);
            }
        EXPECT_NEAR(err, central_difference_error(kTwoPi, g.hx()), 1e-12);
        if (prev > 0.0) EXPECT_NEAR(prev / err, 4.0, 0.02);
        prev = err;
    }
}

TEST(DivMatrix, ConstantIsZero) {
    const Grid g(8, 8, 1.0, 1.0);
    EXPECT_EQ(max_abs(div_matrix(Mat2Field(g, Mat2{{1, 2, 3, 4}}))), 0.0);
}

TEST(DivMatrix, ScaledIdentity) {
    const Grid g(64, 64, 1.0, 1.0);
    const ScalarField f = sample(g, [](double x, double) { return std::sin(kTwoPi * x); });
    Mat2Field M(g);
    for (std::size_t k = 0; k < g.size(); ++k) M[k] = f[k] * Mat2::identity();
    const Vec2Field d = div_matrix(M);
    double err = 0.0;
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            err = std::max(err, std::abs(d(i, j).x - kTwoPi * std::cos(kTwoPi * g.x(i))));
            EXPECT_EQ(d(i, j).y, 0.0);
        }
    EXPECT_NEAR(err, central_difference_error(kTwoPi, g.hx()), 1e-12);
}

TEST(SummationByParts, MatrixDivergence) {
    const Grid g(12, 10, 1.3, 0.7);
    SplitMix64 rng(21);
    Mat2Field M(g);
    for (Mat2& m : M.values) m = cosserat::testing::random_mat2(rng);
    const ScalarField w1 = random_field(g, rng), w2 = random_field(g, rng);
    const Vec2Field g1 = grad_scalar(w1), g2 = grad_scalar(w2);
    const Vec2Field d = div_matrix(M);
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Mat2 gw{{g1[k].x, g1[k].y, g2[k].x, g2[k].y}};
        lhs += frobenius(M[k], gw);
        rhs -= d[k].x * w1[k] + d[k].y * w2[k];
        scale += std::abs(frobenius(M[k], gw));
    }
    EXPECT_LT(std::abs(lhs - rhs) / scale, 1e-12);
}

TEST(SummationByParts, VectorDivergence) {
    const Grid g(9, 11, 1.0, 2.0);
    SplitMix64 rng(22);
    Vec2Field q(g);
    for (Vec2& v : q.values) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const ScalarField w = random_field(g, rng);
    const Vec2Field gw = grad_scalar(w);
    const ScalarField d = div_vector(q);
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        lhs += dot(q[k], gw[k]);
        rhs -= d[k] * w[k];
        scale += std::abs(dot(q[k], gw[k]));
    }
    EXPECT_LT(std::abs(lhs - rhs) / scale, 1e-12);
}

TEST(Stencils, TranslationInvariant) {
    const Grid g(8, 8, 1.0, 1.0);
    SplitMix64 rng(23);
    const ScalarField f = random_field(g, rng);
    ScalarField shifted(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) shifted(i + 1, j) = f(i, j);
    const Vec2Field a = grad_scalar(f), b = grad_scalar(shifted);
    const ScalarField la = diff_xx(f), lb = diff_xx(shifted);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            EXPECT_EQ(a(i, j), b(i + 1, j));
            EXPECT_EQ(la(i, j), lb(i + 1, j));
        }
}

TEST(Curl2, ConstantIsZero) {
    const Grid g(8, 8, 1.0, 1.0);
    EXPECT_EQ(max_abs(curl2_matrix(Mat2Field(g, rot2(0.4)))), 0.0);
}

// R^T Curl R = -grad theta in the continuum; the discrete error is O(h^2).
TEST(Curl2, RotationCurvatureIsMinusGradient) {
    const double e32 = curvature_identity_error(32);
    const double e64 = curvature_identity_error(64);
    const double e128 = curvature_identity_error(128);
    EXPECT_LT(e128, 1e-3);
    EXPECT_NEAR(e32 / e64, 4.0, 0.3);
    EXPECT_NEAR(e64 / e128, 4.0, 0.1);
}

TEST(Curl2, NormMatchesGradient) {
    const Grid g(128, 128, 1.0, 1.0);
    const ScalarField th = sample(g, [](double x, double y) { return 0.5 * std::cos(kTwoPi * (x + 2 * y)); });
    const Mat2Field R = rotation_field(th);
    const Vec2Field c = curl2_matrix(R);
    const Vec2Field gt = grad_scalar(th);
    double err = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Vec2 rc = transpose(R[k]) * c[k];
        err = std::max(err, std::abs(dot(rc, rc) - dot(gt[k], gt[k])));
        scale = std::max(scale, dot(gt[k], gt[k]));
    }
    EXPECT_LT(err / scale, 2e-3);
}

TEST(DeformationGradients, ZeroAndConstant) {
    const Grid g(6, 6, 1.0, 1.0);
    FieldState s(g);
    auto d = deformation_gradients(s);
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_EQ(d.F[k], Mat2::identity());
        EXPECT_EQ(d.Fstar[k], Mat2::identity());
    }
    s.u1 = ScalarField(g, 0.3);
    s.u2 = ScalarField(g, -1.2);
    d = deformation_gradients(s);
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_EQ(d.F[k], Mat2::identity());
        EXPECT_EQ(d.Fstar[k], Mat2::identity());
    }
}

TEST(DeformationGradients, StarredRowsAreRotated) {
    const Grid g(10, 12, 1.0, 1.0);
    const FieldState s = random_smooth_state(g, 5, 0.2, 3);
    const auto d = deformation_gradients(s);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Mat2 G = d.F[k] - Mat2::identity();
        const Mat2 Gs = d.Fstar[k] - Mat2::identity();
        EXPECT_NEAR(Gs(0, 0), G(1, 0), 1e-15);
        EXPECT_NEAR(Gs(0, 1), G(1, 1), 1e-15);
        EXPECT_NEAR(Gs(1, 0), -G(0, 0), 1e-15);
        EXPECT_NEAR(Gs(1, 1), -G(0, 1), 1e-15);
    }
}

TEST(Integrate, Constant) {
    const Grid g(8, 4, 2.0, 3.0);
    EXPECT_NEAR(integrate(ScalarField(g, 2.0)), 12.0, 1e-14);
}

TEST(Snapshot, HeaderAndRows) {
    const Grid g(4, 4, 1.0, 1.0);
    FieldState s(g);
    s.theta(1, 2) = 0.1;
    std::ostringstream os;
    write_snapshot(os, s);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "i,j,x,y,u1,u2,theta,v1,v2,omega");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 16);
    EXPECT_NE(os.str().find("1,2,0.25,0.5,0,0,0.10000000000000001,0,0,0"), std::string::npos);
}

TEST(RandomSmooth, DeterministicAndBounded) {
    const Grid g(16, 16, 1.0, 1.0);
    const FieldState a = random_smooth_state(g, 42, 0.05, 3);
    const FieldState b = random_smooth_state(g, 42, 0.05, 3);
    const FieldState c = random_smooth_state(g, 43, 0.05, 3);
    EXPECT_EQ(a.u1.values, b.u1.values);
    EXPECT_EQ(a.theta.values, b.theta.values);
    EXPECT_NE(a.u1.values, c.u1.values);
    for (double v : a.u1.values) EXPECT_LE(std::abs(v), 0.05);
    for (double v : a.v1.values) EXPECT_EQ(v, 0.0);
    const FieldState r = random_smooth_state_with_rates(g, 42, 0.05, 3);
    EXPECT_EQ(r.u1.values, a.u1.values);
    EXPECT_NE(r.omega.values, a.omega.values);
}

TEST(SplitMix64, ReferenceSequence) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ull);
    SplitMix64 u(1);
    for (int n = 0; n < 1000; ++n) {
        const double x = u.uniform01();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
}
