#pragma once

// Small fixed-size tensors for the planar model: 2-vectors, 2x2 and 3x3
// matrices, and the 2x2x2x2 derivative tensor of the polar factor.
// Indices are zero-based in code; (0,1) is the one-based (1,2) entry.

#include <array>
#include <cmath>

namespace cosserat {

struct Vec2 {
    double x{};
    double y{};

    constexpr double operator[](int i) const { return i == 0 ? x : y; }
    constexpr double& operator[](int i) { return i == 0 ? x : y; }

    constexpr Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr Vec2& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }
    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

/// Row-major 2x2 matrix.
struct Mat2 {
    std::array<double, 4> m{};

    constexpr double operator()(int i, int j) const { return m[2 * i + j]; }
    constexpr double& operator()(int i, int j) { return m[2 * i + j]; }

    static constexpr Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
    static constexpr Mat2 zero() { return {}; }

    constexpr Mat2& operator+=(const Mat2& o) {
        for (int k = 0; k < 4; ++k) m[k] += o.m[k];
        return *this;
    }
    constexpr Mat2& operator-=(const Mat2& o) {
        for (int k = 0; k < 4; ++k) m[k] -= o.m[k];
        return *this;
    }
    constexpr Mat2& operator*=(double s) {
        for (double& v : m) v *= s;
        return *this;
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
constexpr Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
constexpr Mat2 operator-(Mat2 a) { return a *= -1.0; }
constexpr Mat2 operator*(double s, Mat2 a) { return a *= s; }
constexpr Mat2 operator*(Mat2 a, double s) { return a *= s; }

constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
             a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
}

constexpr Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
}

constexpr Mat2 transpose(const Mat2& a) { return {{a(0, 0), a(1, 0), a(0, 1), a(1, 1)}}; }
constexpr double trace(const Mat2& a) { return a(0, 0) + a(1, 1); }
constexpr double det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }
constexpr Mat2 sym(const Mat2& a) { return 0.5 * (a + transpose(a)); }
constexpr Mat2 skew(const Mat2& a) { return 0.5 * (a - transpose(a)); }

/// Cofactor matrix; F + cof F is a scaled rotation for every 2x2 F.
constexpr Mat2 cof(const Mat2& a) { return {{a(1, 1), -a(1, 0), -a(0, 1), a(0, 0)}}; }

/// <A,B> = A_ij B_ij = tr(A B^T).
constexpr double frobenius(const Mat2& a, const Mat2& b) {
    return a.m[0] * b.m[0] + a.m[1] * b.m[1] + a.m[2] * b.m[2] + a.m[3] * b.m[3];
}
constexpr double norm2(const Mat2& a) { return frobenius(a, a); }

constexpr Mat2 outer(const Vec2& a, const Vec2& b) {
    return {{a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y}};
}

/// The 2D Levi-Civita matrix, eps_12 = 1 = -eps_21.
constexpr Mat2 levi_civita2() { return {{0.0, 1.0, -1.0, 0.0}}; }

/// eps : M = eps_ij M_ij = M_12 - M_21.  Note tr(eps M) = -(eps : M).
constexpr double eps_contract(const Mat2& a) { return a(0, 1) - a(1, 0); }

/// Counter-clockwise rotation [[cos, -sin], [sin, cos]] = cos(t) 1 - sin(t) eps.
inline Mat2 rot2(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {{c, -s, s, c}};
}

/// d rot2 / d theta = -eps rot2(theta).
inline Mat2 drot2(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {{-s, -c, c, -s}};
}

struct Decomposition2 {
    Mat2 sym;
    Mat2 skew;
    double trace;
};

constexpr Decomposition2 decompose(const Mat2& a) { return {sym(a), skew(a), trace(a)}; }

/// Threshold on det F below which the polar factor is not computed.
inline constexpr double kDegenerateDet = 1e-12;

struct Polar2 {
    Mat2 R;  ///< proper rotation
    Mat2 U;  ///< symmetric positive definite stretch, F = R U
    double trU;
};

/// Closed-form 2D polar decomposition R = (F + cof F) / sqrt((F11+F22)^2 + (F12-F21)^2).
/// Throws DegenerateDeformation when det F <= kDegenerateDet.
Polar2 polar2(const Mat2& F);

/// Directional derivative of polar(F) along E: (E - R E^T R) / tr U.
Mat2 dpolar2_dir(const Mat2& F, const Mat2& E);

/// (i,j,k,l) -> d R_ij / d F_kl.
struct Tensor4_2D {
    std::array<double, 16> t{};
    constexpr double operator()(int i, int j, int k, int l) const { return t[((i * 2 + j) * 2 + k) * 2 + l]; }
    constexpr double& operator()(int i, int j, int k, int l) { return t[((i * 2 + j) * 2 + k) * 2 + l]; }

    /// Contracts the last two indices with E: (T:E)_ij = T_ijkl E_kl.
    Mat2 apply(const Mat2& e) const;
};

Tensor4_2D dpolar2_dF(const Mat2& F);

// ---------------------------------------------------------------------------
// 3x3

struct Mat3 {
    std::array<double, 9> m{};

    constexpr double operator()(int i, int j) const { return m[3 * i + j]; }
    constexpr double& operator()(int i, int j) { return m[3 * i + j]; }

    static constexpr Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    constexpr Mat3& operator+=(const Mat3& o) {
        for (int k = 0; k < 9; ++k) m[k] += o.m[k];
        return *this;
    }
    constexpr Mat3& operator-=(const Mat3& o) {
        for (int k = 0; k < 9; ++k) m[k] -= o.m[k];
        return *this;
    }
    constexpr Mat3& operator*=(double s) {
        for (double& v : m) v *= s;
        return *this;
    }
    friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

constexpr Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
constexpr Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
constexpr Mat3 operator-(Mat3 a) { return a *= -1.0; }
constexpr Mat3 operator*(double s, Mat3 a) { return a *= s; }

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

constexpr Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

constexpr double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

constexpr double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

constexpr double frobenius(const Mat3& a, const Mat3& b) {
    double s = 0.0;
    for (int k = 0; k < 9; ++k) s += a.m[k] * b.m[k];
    return s;
}
constexpr double norm2(const Mat3& a) { return frobenius(a, a); }

constexpr Mat3 sym(const Mat3& a) { return 0.5 * (a + transpose(a)); }
constexpr Mat3 skew(const Mat3& a) { return 0.5 * (a - transpose(a)); }

/// M - tr(M) 1 / 3.
constexpr Mat3 dev(const Mat3& a) { return a - (trace(a) / 3.0) * Mat3::identity(); }

/// The 3D Levi-Civita symbol, zero-based indices.
constexpr double levi_civita3(int i, int j, int k) {
    return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

}  // namespace cosserat
