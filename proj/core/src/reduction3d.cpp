#include "cosserat/reduction3d.hpp"

#include <algorithm>

#include "cosserat/random.hpp"

namespace cosserat {
namespace {

Mat3 value_of(const DMat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m[i][j].v;
    return r;
}

double max_abs(const Mat3& m) {
    double r = 0.0;
    for (double v : m.m) r = std::max(r, std::abs(v));
    return r;
}

// Gradient of a vector field as a jet: F_ij = d_j phi_i.
Mat3 gradient(const std::array<Dual3, 3>& phi) {
    Mat3 F;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) F(i, j) = phi[static_cast<std::size_t>(i)].d[static_cast<std::size_t>(j)];
    return F;
}

std::array<Dual3, 3> variables(const std::array<double, 3>& x, double sign = 1.0) {
    std::array<Dual3, 3> r;
    for (int i = 0; i < 3; ++i) {
        r[static_cast<std::size_t>(i)] = Dual3::variable(sign * x[static_cast<std::size_t>(i)], i);
        if (sign < 0.0) r[static_cast<std::size_t>(i)].d[static_cast<std::size_t>(i)] = -1.0;
    }
    return r;
}

struct FirstProblemAt {
    Mat3 F, R, C;
    double phix, phiy;
};

FirstProblemAt first_problem_at(const PlanarSample3D& s, double x, double y) {
    const Dual3 X = Dual3::variable(x, 0);
    const Dual3 Y = Dual3::variable(y, 1);
    const Dual3 p1 = s.phi1(X, Y), p2 = s.phi2(X, Y), a = s.angle(X, Y);
    const Dual3 Z = Dual3::variable(0.0, 2);
    const DMat3 R = rodrigues(Dual3(0.0), Dual3(0.0), a);
    FirstProblemAt r;
    r.F = gradient({p1, p2, Z});
    const MatrixJet3 jet = to_jet(R);
    r.R = jet.value;
    r.C = transpose(r.R) * curl3_matrix(jet);
    r.phix = a.d[0];
    r.phiy = a.d[1];
    return r;
}

}  // namespace

MatrixJet3 to_jet(const DMat3& m) {
    MatrixJet3 j;
    j.value = value_of(m);
    for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) j.d[static_cast<std::size_t>(k)](a, b) = m[a][b].d[static_cast<std::size_t>(k)];
    return j;
}

Mat3 curl3_matrix(const MatrixJet3& m) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int n = 0; n < 3; ++n) {
                    const double e = levi_civita3(j, a, n);
                    if (e != 0.0) s += e * m.d[static_cast<std::size_t>(a)](i, n);
                }
            c(i, j) = s;
        }
    return c;
}

Mat3 to_mat3(const Mat3T<double>& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m[i][j];
    return r;
}

PlanarSample3D PlanarSample3D::standard(std::uint64_t seed, int n) {
    PlanarSample3D s;
    s.phi1 = [](const Dual3& x, const Dual3& y) { return x + 0.1 * sin(y); };
    s.phi2 = [](const Dual3&, const Dual3& y) { return y; };
    s.angle = [](const Dual3& x, const Dual3&) { return 0.2 * cos(x); };
    s.alpha = [](const Dual3& x, const Dual3& y) { return 0.7 * sin(x + 0.3 * y); };
    s.beta = [](const Dual3& x, const Dual3& y) { return 0.5 * cos(0.4 * x - y); };
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i) s.points.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    return s;
}

PlanarSample3D PlanarSample3D::trivial(double angle, int n) {
    PlanarSample3D s;
    s.phi1 = [](const Dual3& x, const Dual3&) { return x; };
    s.phi2 = [](const Dual3&, const Dual3& y) { return y; };
    s.angle = [angle](const Dual3&, const Dual3&) { return Dual3(angle); };
    s.alpha = [](const Dual3&, const Dual3&) { return Dual3(0.0); };
    s.beta = [](const Dual3&, const Dual3&) { return Dual3(0.0); };
    SplitMix64 rng(1);
    for (int i = 0; i < n; ++i) s.points.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    return s;
}

Mat3 first_problem_curvature(const PlanarSample3D& s, double x, double y) { return first_problem_at(s, x, y).C; }

VerificationReport first_problem_check(const PlanarSample3D& s, double tol) {
    double e_p3 = 0, e_p7 = 0, e_dev = 0, e_skew = 0, e_tr = 0, e_p5 = 0;
    double e_tr_tr = 0, e_dev_dev = 0, e_skew_skew = 0;
    double e_ftf_tr = 0, e_ftf_dev = 0, e_ftf_skew = 0;
    double surrogate = 0.0;
    for (const auto& pt : s.points) {
        const FirstProblemAt a = first_problem_at(s, pt[0], pt[1]);
        const Mat3& C = a.C;
        const double px = a.phix, py = a.phiy;

        Mat3 expect{};
        expect(0, 2) = -px;
        expect(1, 2) = -py;
        e_p3 = std::max(e_p3, max_abs(C - expect));
        e_p7 = std::max(e_p7, std::abs(norm2(C) - (px * px + py * py)));

        // symmetric trace-free and skew parts as printed
        Mat3 dev_expect{};
        dev_expect(0, 2) = dev_expect(2, 0) = -0.5 * px;
        dev_expect(1, 2) = dev_expect(2, 1) = -0.5 * py;
        Mat3 skew_expect{};
        skew_expect(0, 2) = -0.5 * px;
        skew_expect(1, 2) = -0.5 * py;
        skew_expect(2, 0) = 0.5 * px;
        skew_expect(2, 1) = 0.5 * py;
        e_dev = std::max(e_dev, max_abs(dev(sym(C)) - dev_expect));
        e_skew = std::max(e_skew, max_abs(skew(C) - skew_expect));
        e_tr = std::max(e_tr, std::abs(trace(C)));

        const Mat3 U = transpose(a.R) * a.F;
        const double c = a.R(0, 0), sn = a.R(1, 0);
        const Mat3& F = a.F;
        const Mat3 U_expect{{F(0, 0) * c + F(1, 0) * sn, F(0, 1) * c + F(1, 1) * sn, 0.0,
                             F(1, 0) * c - F(0, 0) * sn, F(1, 1) * c - F(0, 1) * sn, 0.0, 0.0, 0.0, 1.0}};
        e_p5 = std::max(e_p5, max_abs(U - U_expect));

        e_tr_tr = std::max(e_tr_tr, std::abs(trace(C) * trace(U)));
        e_dev_dev = std::max(e_dev_dev, std::abs(frobenius(dev(sym(C)), dev(sym(U)))));
        e_skew_skew = std::max(e_skew_skew, std::abs(frobenius(skew(C), skew(U))));

        const Mat3 FtF = transpose(F) * F;
        e_ftf_tr = std::max(e_ftf_tr, std::abs(trace(C) * trace(FtF)));
        e_ftf_dev = std::max(e_ftf_dev, std::abs(frobenius(dev(sym(C)), dev(sym(FtF)))));
        e_ftf_skew = std::max(e_ftf_skew, std::abs(frobenius(skew(C), skew(FtF))));

        surrogate = std::max(surrogate, std::abs(std::sqrt(norm2(C)) * trace(U)));
    }
    VerificationReport r;
    r.add("first_problem_curvature_form", e_p3, tol);
    r.add("first_problem_curvature_norm", e_p7, tol);
    r.add("first_problem_dev_part", e_dev, tol);
    r.add("first_problem_skew_part", e_skew, tol);
    r.add("first_problem_trace_zero", e_tr, tol);
    r.add("first_problem_stretch_form", e_p5, tol);
    r.add("first_problem_orthogonal_trace", e_tr_tr, tol);
    r.add("first_problem_orthogonal_dev", e_dev_dev, tol);
    r.add("first_problem_orthogonal_skew", e_skew_skew, tol);
    r.add("first_problem_ftf_orthogonal_trace", e_ftf_tr, tol);
    r.add("first_problem_ftf_orthogonal_dev", e_ftf_dev, tol);
    r.add("first_problem_ftf_orthogonal_skew", e_ftf_skew, tol);
    r.note("first_problem_interaction_surrogate_max", surrogate,
           "max |R^T Curl R| tr(R^T F) over the sample; nonzero when the angle varies");
    return r;
}

Mat3 second_problem_curvature(const ScalarFn2& alpha, const ScalarFn2& beta, double x, double y) {
    const Dual3 X = Dual3::variable(x, 0);
    const Dual3 Y = Dual3::variable(y, 1);
    const MatrixJet3 jet = to_jet(second_problem_rotation(alpha(X, Y), beta(X, Y)));
    return transpose(jet.value) * curl3_matrix(jet);
}

Mat3 small_rotation_curvature(const ScalarFn2& alpha, const ScalarFn2& beta, double x, double y) {
    const Dual3 X = Dual3::variable(x, 0);
    const Dual3 Y = Dual3::variable(y, 1);
    const Dual3 a = alpha(X, Y), b = beta(X, Y);
    Mat3 m{};
    m(0, 0) = b.d[1];
    m(0, 1) = -b.d[0];
    m(1, 0) = -a.d[1];
    m(1, 1) = a.d[0];
    m(2, 2) = a.d[0] + b.d[1];
    return m;
}

VerificationReport second_problem_check(const PlanarSample3D& s, double tol) {
    double e_orth = 0, e_det = 0, e_zero = 0;
    for (const auto& pt : s.points) {
        const Dual3 X = Dual3::variable(pt[0], 0);
        const Dual3 Y = Dual3::variable(pt[1], 1);
        const Mat3 R = value_of(second_problem_rotation(s.alpha(X, Y), s.beta(X, Y)));
        e_orth = std::max(e_orth, max_abs(transpose(R) * R - Mat3::identity()));
        e_det = std::max(e_det, std::abs(det(R) - 1.0));
        const Mat3 C = second_problem_curvature(s.alpha, s.beta, pt[0], pt[1]);
        e_zero = std::max({e_zero, std::abs(C(2, 0)), std::abs(C(2, 1))});
    }
    VerificationReport r;
    r.add("second_problem_rotation_orthogonal", e_orth, tol);
    r.add("second_problem_rotation_det", e_det, tol);
    r.add("second_problem_curvature_31_32_zero", e_zero, tol);
    r.add("second_problem_zero_angle_identity", max_abs(to_mat3(second_problem_rotation(0.0, 0.0)) - Mat3::identity()),
          tol);

    // alpha = 1e-4 x, beta = 1e-4 y near the origin, plus a linear field that
    // exercises every off-diagonal entry; relative error is O(|(alpha, beta)|).
    const ScalarFn2 a1 = [](const Dual3& x, const Dual3&) { return 1e-4 * x; };
    const ScalarFn2 b1 = [](const Dual3&, const Dual3& y) { return 1e-4 * y; };
    const ScalarFn2 a2 = [](const Dual3& x, const Dual3& y) { return 1e-4 * (0.3 * x - 0.8 * y); };
    const ScalarFn2 b2 = [](const Dual3& x, const Dual3& y) { return 1e-4 * (0.6 * x + 0.5 * y); };
    double e_small = 0.0, e_abs = 0.0;
    SplitMix64 rng(99);
    for (int n = 0; n < 50; ++n) {
        const double x = rng.uniform(-5e-3, 5e-3), y = rng.uniform(-5e-3, 5e-3);
        for (const auto& [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
            const Mat3 exact = second_problem_curvature(a, b, x, y);
            const Mat3 lead = small_rotation_curvature(a, b, x, y);
            e_small = std::max(e_small, max_abs(exact - lead) / max_abs(lead));
            e_abs = std::max(e_abs, max_abs(exact - lead));
        }
    }
    r.add("second_problem_small_rotation_relative", e_small, 1e-6);
    r.add("second_problem_small_rotation_absolute", e_abs, tol);
    return r;
}

ChiralProbe ChiralProbe::standard(std::uint64_t seed, int n) {
    ChiralProbe p;
    p.phi = [](const std::array<Dual3, 3>& x) {
        return std::array<Dual3, 3>{x[0] + 0.1 * sin(x[1] + 0.5 * x[2]), x[1] + 0.2 * cos(x[0] * x[2]) - 0.05 * x[0],
                                    x[2] + 0.15 * sin(x[0] - x[1])};
    };
    p.rotation_vector = [](const std::array<Dual3, 3>& x) {
        return std::array<Dual3, 3>{0.3 * sin(x[1]) + 0.2 * x[2], 0.4 * cos(x[0] + x[2]), 0.5 * sin(x[0] * x[1])};
    };
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i)
        p.points.push_back({rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)});
    return p;
}

ChiralProbe ChiralProbe::constant_rotation(std::uint64_t seed, int n) {
    ChiralProbe p = standard(seed, n);
    p.rotation_vector = [](const std::array<Dual3, 3>&) { return std::array<Dual3, 3>{}; };
    return p;
}

ChiralProbe ChiralProbe::planar(const PlanarSample3D& s) {
    ChiralProbe p;
    p.phi = [s](const std::array<Dual3, 3>& x) { return std::array<Dual3, 3>{s.phi1(x[0], x[1]), s.phi2(x[0], x[1]), x[2]}; };
    p.rotation_vector = [s](const std::array<Dual3, 3>& x) {
        return std::array<Dual3, 3>{Dual3(0.0), Dual3(0.0), s.angle(x[0], x[1])};
    };
    for (const auto& pt : s.points) p.points.push_back({pt[0], pt[1], 0.5});
    return p;
}

namespace {

struct ProbeAt {
    Mat3 F, R, curl;
};

// sign = +1: fields at x.  sign = -1: fields x -> phi(-x), x -> -R(-x)
// differentiated at x.
ProbeAt probe_at(const ChiralProbe& p, const std::array<double, 3>& x, double sign) {
    const std::array<Dual3, 3> X = variables(x, sign);
    const std::array<Dual3, 3> w = p.rotation_vector(X);
    DMat3 R = rodrigues(w[0], w[1], w[2]);
    if (sign < 0.0)
        for (auto& row : R)
            for (Dual3& v : row) v = -v;
    const MatrixJet3 jet = to_jet(R);
    return {gradient(p.phi(X)), jet.value, curl3_matrix(jet)};
}

}  // namespace

double chiral_invariant(const ChiralProbe& probe, const std::array<double, 3>& x) {
    const ProbeAt a = probe_at(probe, x, 1.0);
    return frobenius(transpose(a.F) * a.F, transpose(a.R) * a.curl);
}

VerificationReport chirality_inversion_check(const ChiralProbe& probe, double tol) {
    double e_f = 0, e_ftf = 0, e_curl = 0, e_curv = 0, e_inv = 0, e_orth = 0, e_det = 0;
    double largest = 0.0;
    for (const auto& x : probe.points) {
        const std::array<double, 3> mx{-x[0], -x[1], -x[2]};
        const ProbeAt inv = probe_at(probe, x, -1.0);  // F#, R#, Curl R# at x
        const ProbeAt ref = probe_at(probe, mx, 1.0);  // F, R, Curl R at -x

        e_f = std::max(e_f, max_abs(inv.F + ref.F));
        const Mat3 c_inv = transpose(inv.F) * inv.F;
        const Mat3 c_ref = transpose(ref.F) * ref.F;
        e_ftf = std::max(e_ftf, max_abs(c_inv - c_ref));
        e_curl = std::max(e_curl, max_abs(inv.curl - ref.curl));
        const Mat3 k_inv = transpose(inv.R) * inv.curl;
        const Mat3 k_ref = transpose(ref.R) * ref.curl;
        e_curv = std::max(e_curv, max_abs(k_inv + k_ref));
        const double i_inv = frobenius(c_inv, k_inv);
        const double i_ref = frobenius(c_ref, k_ref);
        e_inv = std::max(e_inv, std::abs(i_inv + i_ref));
        largest = std::max(largest, std::abs(i_ref));
        e_orth = std::max(e_orth, max_abs(transpose(inv.R) * inv.R - Mat3::identity()));
        e_det = std::max(e_det, std::abs(det(inv.R) + 1.0));
    }
    VerificationReport r;
    r.add("inversion_deformation_gradient_sign", e_f, tol);
    r.add("inversion_ftf_invariant", e_ftf, tol);
    r.add("inversion_curl_invariant", e_curl, tol);
    r.add("inversion_curvature_sign_flip", e_curv, tol);
    r.add("inversion_chiral_invariant_sign_flip", e_inv, tol);
    r.add("inversion_rotation_orthogonal", e_orth, tol);
    r.add("inversion_rotation_det_minus_one", e_det, tol);
    r.note("inversion_chiral_invariant_max", largest, "max |<F^T F, R^T Curl R>| over the probe points");
    return r;
}

}  // namespace cosserat
