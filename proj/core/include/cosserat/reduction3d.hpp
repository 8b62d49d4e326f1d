#pragma once

// Pointwise checks of the 3D planar reductions and of the behaviour of the
// matrix Curl under inversion.  Derivatives are exact: fields are written
// against Dual3, a forward-mode dual number carrying d/dx, d/dy, d/dz.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <vector>

#include "cosserat/algebra.hpp"
#include "cosserat/report.hpp"

namespace cosserat {

struct Dual3 {
    double v = 0.0;
    std::array<double, 3> d{};

    Dual3() = default;
    Dual3(double value) : v(value) {}  // NOLINT: constants convert implicitly
    Dual3(double value, std::array<double, 3> grad) : v(value), d(grad) {}

    /// Independent variable number i (0 = x, 1 = y, 2 = z) at value.
    static Dual3 variable(double value, int i) {
        Dual3 r(value);
        r.d[static_cast<std::size_t>(i)] = 1.0;
        return r;
    }
};

inline Dual3 operator+(const Dual3& a, const Dual3& b) {
    return {a.v + b.v, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2]}};
}
inline Dual3 operator-(const Dual3& a, const Dual3& b) {
    return {a.v - b.v, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2]}};
}
inline Dual3 operator-(const Dual3& a) { return {-a.v, {-a.d[0], -a.d[1], -a.d[2]}}; }
inline Dual3 operator*(const Dual3& a, const Dual3& b) {
    return {a.v * b.v,
            {a.d[0] * b.v + a.v * b.d[0], a.d[1] * b.v + a.v * b.d[1], a.d[2] * b.v + a.v * b.d[2]}};
}
inline Dual3 operator/(const Dual3& a, const Dual3& b) {
    const double inv = 1.0 / b.v;
    const double q = a.v * inv;
    return {q, {(a.d[0] - q * b.d[0]) * inv, (a.d[1] - q * b.d[1]) * inv, (a.d[2] - q * b.d[2]) * inv}};
}

namespace detail {
inline Dual3 chain(const Dual3& a, double value, double slope) {
    return {value, {slope * a.d[0], slope * a.d[1], slope * a.d[2]}};
}
}  // namespace detail

inline Dual3 sin(const Dual3& a) { return detail::chain(a, std::sin(a.v), std::cos(a.v)); }
inline Dual3 cos(const Dual3& a) { return detail::chain(a, std::cos(a.v), -std::sin(a.v)); }
inline Dual3 sqrt(const Dual3& a) {
    const double r = std::sqrt(a.v);
    return detail::chain(a, r, 0.5 / r);
}

template <class T>
using Mat3T = std::array<std::array<T, 3>, 3>;
using DMat3 = Mat3T<Dual3>;

/// Value and the three partial derivatives of a 3x3 matrix field at a point.
struct MatrixJet3 {
    Mat3 value;
    std::array<Mat3, 3> d;  ///< d[m] = d/dx_m
};

MatrixJet3 to_jet(const DMat3& m);

/// (Curl M)_ij = eps_jmn d_m M_in.
Mat3 curl3_matrix(const MatrixJet3& m);

/// Rotation by angle |w| about w: 1 + sin(l)/l W + (1 - cos l)/l^2 W^2 with
/// W the skew matrix of w; series coefficients below l = 1e-4.
template <class T>
Mat3T<T> rodrigues(const T& w1, const T& w2, const T& w3) {
    const T q = w1 * w1 + w2 * w2 + w3 * w3;
    T c1, s1;
    using std::cos;
    using std::sin;
    using std::sqrt;
    double qv;
    if constexpr (std::is_same_v<T, double>)
        qv = q;
    else
        qv = q.v;
    if (qv < 1e-8) {
        c1 = T(0.5) - q / T(24.0) + q * q / T(720.0);
        s1 = T(1.0) - q / T(6.0) + q * q / T(120.0);
    } else {
        const T l = sqrt(q);
        c1 = (T(1.0) - cos(l)) / q;
        s1 = sin(l) / l;
    }
    const Mat3T<T> W{{{T(0.0), -w3, w2}, {w3, T(0.0), -w1}, {-w2, w1, T(0.0)}}};
    Mat3T<T> R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T w2ij = T(0.0);
            for (int k = 0; k < 3; ++k) w2ij = w2ij + W[i][k] * W[k][j];
            R[i][j] = T(i == j ? 1.0 : 0.0) + s1 * W[i][j] + c1 * w2ij;
        }
    return R;
}

/// Rotation of the second planar problem: axis (alpha, beta, 0), angle
/// l = sqrt(alpha^2 + beta^2); R = 1 at alpha = beta = 0.
template <class T>
Mat3T<T> second_problem_rotation(const T& alpha, const T& beta) {
    return rodrigues(alpha, beta, T(0.0));
}

Mat3 to_mat3(const Mat3T<double>& m);

using ScalarFn2 = std::function<Dual3(const Dual3& x, const Dual3& y)>;

/// Closed-form planar fields and sample points.  First problem: deformation
/// (phi1, phi2, z) and rotation angle about z.  Second problem: rotation
/// angles alpha, beta about x and y.
struct PlanarSample3D {
    ScalarFn2 phi1, phi2, angle;
    ScalarFn2 alpha, beta;
    std::vector<std::array<double, 2>> points;

    /// phi1 = x + 0.1 sin y, phi2 = y, angle = 0.2 cos x, alpha =
    /// 0.7 sin(x + 0.3 y), beta = 0.5 cos(0.4 x - y) at n points in [-2, 2]^2.
    static PlanarSample3D standard(std::uint64_t seed, int n);
    /// Identity deformation with a constant angle.
    static PlanarSample3D trivial(double angle, int n);
};

/// R^T Curl R of the first problem evaluated with the 3D Curl.
Mat3 first_problem_curvature(const PlanarSample3D& s, double x, double y);

/// Decomposition, orthogonality, stretch-form and norm checks of the first
/// planar problem at every sample point; the interaction surrogate
/// |R^T Curl R| tr(R^T F) is reported as a note.
VerificationReport first_problem_check(const PlanarSample3D& s, double tol = 1e-10);

/// Exact R^T Curl R of the second problem for fields alpha(x, y), beta(x, y).
Mat3 second_problem_curvature(const ScalarFn2& alpha, const ScalarFn2& beta, double x, double y);

/// Leading-order small-rotation form
/// [[b_y, -b_x, 0], [-a_y, a_x, 0], [0, 0, a_x + b_y]].
Mat3 small_rotation_curvature(const ScalarFn2& alpha, const ScalarFn2& beta, double x, double y);

/// Orthogonality of the rotation, vanishing (3,1) and (3,2) curvature
/// entries, and agreement with the small-rotation form for
/// alpha = 1e-4 x, beta = 1e-4 y near the origin.
VerificationReport second_problem_check(const PlanarSample3D& s, double tol = 1e-10);

using VectorFn3 = std::function<std::array<Dual3, 3>(const std::array<Dual3, 3>& x)>;

/// Smooth deformation phi(x) and rotation R(x) = rodrigues(w(x)).
struct ChiralProbe {
    VectorFn3 phi;
    VectorFn3 rotation_vector;
    std::vector<std::array<double, 3>> points;

    static ChiralProbe standard(std::uint64_t seed, int n);
    /// R = 1 everywhere.
    static ChiralProbe constant_rotation(std::uint64_t seed, int n);
    /// First-problem fields of s embedded in 3D, points at z = 0.5.
    static ChiralProbe planar(const PlanarSample3D& s);
};

/// <F^T F, R^T Curl R> at a point.
double chiral_invariant(const ChiralProbe& probe, const std::array<double, 3>& x);

/// With F#(x) = -F(-x) and R#(x) = -R(-x) built by differentiating
/// phi(-x) and -R(-x): F^T F is invariant, Curl R# = (Curl R)(-x),
/// R#^T Curl R# = -(R^T Curl R)(-x), and the invariant changes sign.  R# is
/// orthogonal with determinant -1.
VerificationReport chirality_inversion_check(const ChiralProbe& probe, double tol = 1e-10);

}  // namespace cosserat
