#include "cosserat/waves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "cosserat/dynamics.hpp"
#include "cosserat/errors.hpp"

namespace cosserat {
namespace {

using RMat3 = std::array<std::array<double, 3>, 3>;
using RVec3 = std::array<double, 3>;

RVec3 cross(const RVec3& a, const RVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const RVec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

RVec3 normalized(RVec3 a) {
    const double n = norm(a);
    for (double& v : a) v /= n;
    // largest component positive
    const auto big = std::max_element(a.begin(), a.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (*big < 0.0)
        for (double& v : a) v = -v;
    return a;
}

double polyval(const std::array<double, 4>& c, double s) { return ((c[3] * s + c[2]) * s + c[1]) * s + c[0]; }

double polyscale(const std::array<double, 4>& c, double s) {
    const double a = std::abs(s);
    return std::abs(c[0]) + std::abs(c[1]) * a + std::abs(c[2]) * a * a + std::abs(c[3]) * a * a * a;
}

// Real roots of c0 + c1 s + c2 s^2.
std::vector<double> quadratic_roots(double c0, double c1, double c2) {
    if (c2 == 0.0) {
        if (c1 == 0.0) return {};
        return {-c0 / c1};
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return {};
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    std::vector<double> r;
    if (q != 0.0) r.push_back(c0 / q);
    r.push_back(q / c2);
    return r;
}

struct Root {
    double s;
    int multiplicity;
};

std::vector<Root> cubic_roots_in(const std::array<double, 4>& c, double lo, double hi) {
    std::vector<double> pts{lo, hi};
    for (double x : quadratic_roots(c[1], 2.0 * c[2], 3.0 * c[3]))
        if (x > lo && x < hi) pts.push_back(x);
    std::sort(pts.begin(), pts.end());

    const double tol = 64.0 * std::numeric_limits<double>::epsilon();
    std::vector<Root> roots;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double x = pts[i];
        if (std::abs(polyval(c, x)) <= tol * polyscale(c, x)) {
            // critical points that touch zero are double roots
            const bool critical = i > 0 && i + 1 < pts.size();
            roots.push_back({x, critical ? 2 : 1});
        }
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        double fa = polyval(c, a), fb = polyval(c, b);
        if (!(fa * fb < 0.0)) continue;
        for (int it = 0; it < 300 && b - a > 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b); ++it) {
            const double m = 0.5 * (a + b);
            const double fm = polyval(c, m);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if ((fm < 0.0) == (fa < 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        roots.push_back({0.5 * (a + b), 1});
    }
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.s < y.s; });
    std::vector<Root> merged;
    for (const Root& r : roots) {
        if (!merged.empty() && std::abs(r.s - merged.back().s) <= 1e-9 * std::max(std::abs(r.s), hi * 1e-6)) {
            merged.back().multiplicity = std::max(2, merged.back().multiplicity);
            continue;
        }
        merged.push_back(r);
    }
    return merged;
}

double frob(const CMat3& m) {
    double s = 0.0;
    for (const auto& row : m)
        for (const auto& v : row) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace

WaveParams WaveParams::from_material(const MaterialParams& p) {
    WaveParams w;
    w.A = p.mu_s;
    w.gamma = 2.0 * p.mu * p.L_c * p.L_c;
    w.mu = p.mu;
    w.lambda = p.lambda;
    w.mu_c = p.mu_c;
    w.rho = p.rho;
    w.varrho_rot = 4.0 * p.rho_rot;
    return w;
}

MaterialParams WaveParams::to_material() const {
    MaterialParams p;
    p.mu = mu;
    p.lambda = lambda;
    p.mu_c = mu_c;
    p.rho = rho;
    p.rho_rot = varrho_rot / 4.0;
    p.L_c = std::sqrt(std::max(gamma, 0.0) / (2.0 * mu));
    return MaterialParams::liu_preset(p, A);
}

CMat3 wave_matrix(double k, double w, const WaveParams& p) {
    using C = std::complex<double>;
    const C i{0.0, 1.0};
    const double k2 = k * k;
    const double w2 = w * w;
    CMat3 m;
    m[0] = {C(k2 * (p.lambda + 2.0 * p.mu) - p.rho * w2), C(-p.A * k2), 2.0 * i * p.A * k};
    m[1] = {C(-p.A * k2), C(k2 * (p.mu_c + p.mu) - p.rho * w2), -2.0 * i * k * p.mu_c};
    m[2] = {-2.0 * i * p.A * k, 2.0 * i * k * p.mu_c,
            C(p.gamma * k2 + 4.0 * p.mu_c + 4.0 * p.A - p.varrho_rot * w2)};
    return m;
}

std::complex<double> det(const CMat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<double, 3>, 3> wave_matrix_real(double k, double w, const WaveParams& p) {
    const double k2 = k * k;
    const double w2 = w * w;
    const double a13 = -2.0 * p.A * k;
    const double a23 = 2.0 * k * p.mu_c;
    return {{{k2 * (p.lambda + 2.0 * p.mu) - p.rho * w2, -p.A * k2, a13},
             {-p.A * k2, k2 * (p.mu_c + p.mu) - p.rho * w2, a23},
             {a13, a23, p.gamma * k2 + 4.0 * p.mu_c + 4.0 * p.A - p.varrho_rot * w2}}};
}

std::array<double, 4> dispersion_cubic(double k, const WaveParams& p) {
    const RMat3 K = wave_matrix_real(k, 0.0, p);
    const double d1 = p.rho, d2 = p.rho, d3 = p.varrho_rot;
    const double m11 = K[1][1] * K[2][2] - K[1][2] * K[2][1];
    const double m22 = K[0][0] * K[2][2] - K[0][2] * K[2][0];
    const double m33 = K[0][0] * K[1][1] - K[0][1] * K[1][0];
    const double detK = K[0][0] * m11 - K[0][1] * (K[1][0] * K[2][2] - K[1][2] * K[2][0]) +
                        K[0][2] * (K[1][0] * K[2][1] - K[1][1] * K[2][0]);
    return {detK, -(d1 * m11 + d2 * m22 + d3 * m33), d1 * d2 * K[2][2] + d1 * d3 * K[1][1] + d2 * d3 * K[0][0],
            -d1 * d2 * d3};
}

std::vector<WaveBranch> dispersion_branches(double k, const WaveParams& p) {
    const RMat3 K = wave_matrix_real(k, 0.0, p);
    const std::array<double, 3> d{p.rho, p.rho, p.varrho_rot};

    // search window: the printed speed bound and a Gershgorin bound on the
    // generalized eigenvalues of (K, D)
    double vmax = 0.0;
    if (p.mu > 0.0) vmax = vt(p);
    try {
        vmax = std::max(vmax, vl(p));
    } catch (const Error&) {
    }
    if (p.gamma > 0.0) vmax = std::max(vmax, std::sqrt(p.gamma / p.varrho_rot));
    double gersh = 0.0;
    for (int i = 0; i < 3; ++i) {
        double row = 0.0;
        for (int j = 0; j < 3; ++j) row += std::abs(K[i][j]) / std::sqrt(d[i] * d[j]);
        gersh = std::max(gersh, row);
    }
    const double s_max = std::max(100.0 * k * k * vmax * vmax, 1.1 * gersh);

    const std::array<double, 4> c = dispersion_cubic(k, p);
    std::vector<WaveBranch> out;
    if (s_max <= 0.0) throw NoRealBranch("dispersion: degenerate wave matrix");
    for (const Root& r : cubic_roots_in(c, 0.0, s_max)) {
        const double s = std::max(r.s, 0.0);
        const double w = std::sqrt(s);
        RMat3 T = wave_matrix_real(k, w, p);
        double tn = 0.0;
        for (const auto& row : T)
            for (double v : row) tn = std::max(tn, std::abs(v));

        std::vector<RVec3> basis;
        const std::array<RVec3, 3> crosses{cross(T[0], T[1]), cross(T[0], T[2]), cross(T[1], T[2])};
        const RVec3* best = &crosses[0];
        for (const RVec3& v : crosses)
            if (norm(v) > norm(*best)) best = &v;
        if (norm(*best) > 1e-10 * tn * tn) {
            basis.push_back(normalized(*best));
        } else {
            // rank <= 1: nullspace is the complement of the dominant row
            const RVec3* row = &T[0];
            for (const RVec3& v : T)
                if (norm(v) > norm(*row)) row = &v;
            if (norm(*row) == 0.0) {
                basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            } else {
                int imin = 0;
                for (int i = 1; i < 3; ++i)
                    if (std::abs((*row)[i]) < std::abs((*row)[imin])) imin = i;
                RVec3 e{0, 0, 0};
                e[imin] = 1.0;
                const RVec3 v1 = normalized(cross(*row, e));
                basis = {v1, normalized(cross(*row, v1))};
            }
        }
        for (const RVec3& y : basis) {
            WaveBranch b;
            b.k = k;
            b.omega = w;
            b.u_hat = y[0];
            b.v_hat = y[1];
            b.phi_hat = {0.0, y[2]};
            b.multiplicity = r.multiplicity;
            out.push_back(b);
        }
    }
    if (out.empty()) throw NoRealBranch(fmt::format("no nonnegative omega^2 at k = {}", k));
    return out;
}

double det_relative_residual(double k, double w, const WaveParams& p) {
    const CMat3 m = wave_matrix(k, w, p);
    const double n = frob(m);
    return n > 0.0 ? std::abs(det(m)) / (n * n * n) : 0.0;
}

double nullspace_residual(const WaveBranch& b, const WaveParams& p) {
    const CMat3 m = wave_matrix(b.k, b.omega, p);
    const std::array<std::complex<double>, 3> x{b.u_hat, b.v_hat, b.phi_hat};
    double r = 0.0, xn = 0.0;
    for (int i = 0; i < 3; ++i) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < 3; ++j) s += m[i][j] * x[j];
        r += std::norm(s);
        xn += std::norm(x[i]);
    }
    const double mn = frob(m);
    return mn > 0.0 ? std::sqrt(r) / (mn * std::sqrt(xn)) : std::sqrt(r);
}

double amplitude_ratio(double k, double w, const WaveParams& p) {
    const double k2 = k * k;
    const double rw2 = p.rho * w * w;
    const double num = p.A * (k2 * p.mu - rw2);
    const double den = p.A * p.A * k2 - p.mu_c * (k2 * (p.lambda + 2.0 * p.mu) - rw2);
    const double scale = p.A * p.A * k2 + std::abs(p.mu_c) * (k2 * std::abs(p.lambda + 2.0 * p.mu) + rw2);
    if (std::abs(den) <= 1e-14 * scale || den == 0.0)
        throw ZeroDenominator(fmt::format("amplitude ratio: denominator vanishes at k = {}, omega = {}", k, w));
    return num / den;
}

double vt(const WaveParams& p) { return std::sqrt(p.mu / p.rho); }

double vl(const WaveParams& p) {
    const double base = (p.lambda + 2.0 * p.mu) / p.rho;
    if (p.A == 0.0) {
        if (base < 0.0) throw ImaginarySpeed("vl: lambda + 2 mu < 0");
        return std::sqrt(base);
    }
    if (p.mu_c == 0.0) throw ZeroDenominator("vl: mu_c = 0 with A != 0");
    const double rad = base - p.A * p.A / (p.rho * p.mu_c);
    if (rad < 0.0) throw ImaginarySpeed(fmt::format("vl: A^2 exceeds mu_c (lambda + 2 mu), radicand {}", rad));
    return std::sqrt(rad);
}

double phase_velocity(double r, const WaveParams& p) {
    if (std::isinf(r)) return vl(p);
    if (r == 0.0) return vt(p);
    const double num = r * (p.mu_c * (p.lambda + 2.0 * p.mu) - p.A * p.A) + p.A * p.mu;
    const double den = p.rho * (p.mu_c * r + p.A);
    if (den == 0.0) throw ZeroDenominator(fmt::format("phase velocity: pole at ratio {}", r));
    const double rad = num / den;
    if (rad < 0.0) throw ImaginarySpeed(fmt::format("phase velocity: negative radicand {} at ratio {}", rad, r));
    return std::sqrt(rad);
}

TransverseFreeSolution transverse_free_solution(double k, double w, const WaveParams& p) {
    if (p.mu_c == 0.0) throw ZeroDenominator("transverse-free wave: mu_c = 0 admits only u = v = phi = 0");
    if (p.A == 0.0) throw ZeroDenominator("transverse-free wave: A = 0");
    if (k == 0.0 || w == 0.0) throw ZeroDenominator("transverse-free wave: k and omega must be nonzero");

    TransverseFreeSolution s;
    s.u_over_phi = -2.0 * p.mu_c / (p.A * k);
    s.rho_implied = k * k * (p.mu_c * (p.lambda + 2.0 * p.mu) - p.A * p.A) / (p.mu_c * w * w);
    s.varrho_implied = (p.gamma * k * k + 4.0 * p.A) / (w * w);
    if (!(s.rho_implied > 0.0) || !(s.varrho_implied > 0.0))
        throw InfeasibleDensity(
            fmt::format("implied densities rho = {}, varrho_rot = {}", s.rho_implied, s.varrho_implied));

    LinearCoefficients c;
    c.rho = s.rho_implied;
    c.varrho_rot = s.varrho_implied;
    c.d1 = 0.5 * p.gamma;
    c.mu = p.mu;
    c.lambda = p.lambda;
    c.mu_c = p.mu_c;
    c.mu_s = p.A;
    c.lambda_s = -2.0 * p.A;
    c.mu_c_s = -p.A;
    c.m = -p.A;

    const double u = s.u_over_phi;  // phi^ = 1
    double err = 0.0, scale = 0.0;
    for (int n = 0; n < 16; ++n) {
        const double psi = 0.3 + 0.77 * n;  // k x - w t
        const double cs = std::cos(psi), sn = std::sin(psi);
        LinearJet j;
        j.u1x = -k * u * sn;
        j.u1xx = -k * k * u * cs;
        j.phi = -sn;
        j.phix = -k * cs;
        j.phixx = k * k * sn;
        const LinearForces f = linear_chiral_pointwise(j, c);
        const double inertia_u = c.rho * (-w * w * u * cs);
        const double inertia_phi = c.varrho_rot * (w * w * sn);
        err = std::max({err, std::abs(f.f1 - inertia_u), std::abs(f.f2), std::abs(f.f3 - inertia_phi)});
        scale = std::max({scale, std::abs(inertia_u), std::abs(inertia_phi)});
    }
    s.residual = scale > 0.0 ? err / scale : err;
    return s;
}

FieldState plane_wave_state(const Grid& grid, double k, int branch, double amplitude, const WaveParams& p) {
    const double base = 2.0 * std::numbers::pi / grid.lx;
    const double n = std::max(1.0, std::round(std::abs(k) / base));
    const double ks = n * base;
    const std::vector<WaveBranch> bs = dispersion_branches(ks, p);
    if (branch < 0 || static_cast<std::size_t>(branch) >= bs.size())
        throw ConfigError(fmt::format("plane wave: branch {} out of range (k = {} has {} branches)", branch, ks,
                                      bs.size()));
    const WaveBranch& b = bs[static_cast<std::size_t>(branch)];
    const double uh = b.u_hat.real(), vh = b.v_hat.real(), psi = b.phi_hat.imag();
    FieldState s(grid);
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) {
            const double c = std::cos(ks * grid.x(i));
            const double sn = std::sin(ks * grid.x(i));
            const std::size_t idx = grid.index(i, j);
            s.u1[idx] = amplitude * uh * c;
            s.u2[idx] = amplitude * vh * c;
            s.theta[idx] = -amplitude * psi * sn;
            s.v1[idx] = amplitude * uh * b.omega * sn;
            s.v2[idx] = amplitude * vh * b.omega * sn;
            s.omega[idx] = amplitude * psi * b.omega * c;
        }
    return s;
}

}  // namespace cosserat
