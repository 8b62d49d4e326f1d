#pragma once

// Plane waves u, v, phi ~ (u^, v^, phi^) exp(i k x - i w t) of the
// linearized chiral model with the Liu identification
// mu* = -mu_c* = A, lambda* = -2A, m1/2 + m2 = -A, gamma = 2 d1.
// All quantities use phi = -theta.

#include <array>
#include <complex>
#include <vector>

#include "cosserat/fields.hpp"
#include "cosserat/material.hpp"

namespace cosserat {

struct WaveParams {
    double A = 0.0;
    double gamma = 0.0;
    double mu = 1.0;
    double lambda = 1.0;
    double mu_c = 0.0;
    double rho = 1.0;
    double varrho_rot = 4.0;

    /// A = mu*, gamma = 2 mu L_c^2, varrho_rot = 4 rho_rot.
    static WaveParams from_material(const MaterialParams& p);
    /// MaterialParams carrying these constants under the Liu identification
    /// (L_c chosen so that 2 mu L_c^2 = gamma; requires gamma >= 0).
    MaterialParams to_material() const;
};

using CMat3 = std::array<std::array<std::complex<double>, 3>, 3>;

/// The 3x3 plane-wave matrix
///   [ k^2(l+2m) - rho w^2        -A k^2              2iAk          ]
///   [ -A k^2                  k^2(mu_c+m) - rho w^2  -2ik mu_c      ]
///   [ -2iAk                   2ik mu_c      gamma k^2 + 4mu_c + 4A - varrho w^2 ]
CMat3 wave_matrix(double k, double omega, const WaveParams& wp);

std::complex<double> det(const CMat3& m);

/// Real symmetric form T with M = S T S^-1, S = diag(1, 1, i): the
/// determinant of M equals det T and (u^, v^, i psi) solves M x = 0 iff
/// (u^, v^, psi) solves T y = 0.
std::array<std::array<double, 3>, 3> wave_matrix_real(double k, double omega, const WaveParams& wp);

/// Coefficients c0..c3 of det(wave_matrix) as a cubic in s = omega^2.
std::array<double, 4> dispersion_cubic(double k, const WaveParams& wp);

struct WaveBranch {
    double k = 0.0;
    double omega = 0.0;
    std::complex<double> u_hat, v_hat, phi_hat;  ///< u^, v^ real, phi^ imaginary, unit norm
    int multiplicity = 1;
};

/// All branches with omega >= 0 in increasing order.  Throws NoRealBranch
/// when no root of the cubic in omega^2 is nonnegative.
std::vector<WaveBranch> dispersion_branches(double k, const WaveParams& wp);

/// |det M(k, w)| / ||M||_F^3.
double det_relative_residual(double k, double omega, const WaveParams& wp);
/// ||M x|| / (||M||_F ||x||).
double nullspace_residual(const WaveBranch& b, const WaveParams& wp);

/// u^/v^ = A(k^2 mu - rho w^2) / (A^2 k^2 - mu_c(k^2(lambda + 2mu) - rho w^2)).
/// Throws ZeroDenominator.
double amplitude_ratio(double k, double omega, const WaveParams& wp);

/// v = sqrt((r(mu_c(l+2mu) - A^2) + A mu) / (rho(mu_c r + A))).  r = +-inf
/// returns vl.  Throws ImaginarySpeed or ZeroDenominator.
double phase_velocity(double ratio, const WaveParams& wp);

double vt(const WaveParams& wp);
/// sqrt((lambda + 2mu)/rho - A^2/(rho mu_c)), real iff A^2 < mu_c(lambda + 2mu).
double vl(const WaveParams& wp);

struct TransverseFreeSolution {
    double u_over_phi = 0.0;  ///< u^ / phi^ = -2 mu_c / (A k)
    double rho_implied = 0.0;
    double varrho_implied = 0.0;
    /// Relative residual of u = u^ cos(kx - wt), v = 0, phi = -phi^ sin(kx - wt)
    /// in the linear equations, sampled at several (x, t).
    double residual = 0.0;
};

/// Throws ZeroDenominator when A, mu_c, k or omega vanish and
/// InfeasibleDensity when an implied density is not positive.
TransverseFreeSolution transverse_free_solution(double k, double omega, const WaveParams& wp);

/// Real field of a branch at t = 0 on a grid, scaled to amplitude:
/// u1 = a u^ cos kx, u2 = a v^ cos kx, phi = a psi sin kx with psi = Im phi^
/// (the printed matrix gives phi^ = i psi; the exp(i k x - i w t) amplitude is
/// its conjugate), with matching rates.  k is snapped to the nearest multiple
/// of 2 pi / lx.
FieldState plane_wave_state(const Grid& grid, double k, int branch, double amplitude, const WaveParams& wp);

}  // namespace cosserat
