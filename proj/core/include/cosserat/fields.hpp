#pragma once

// Fields on a uniform periodic grid and their second-order central
// difference operators.  Node (i, j) sits at (i*hx, j*hy); storage is
// row-major in (i, j), i.e. i varies slowest.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cosserat/algebra.hpp"

namespace cosserat {

struct Grid {
    int nx = 0;
    int ny = 0;
    double lx = 1.0;
    double ly = 1.0;

    Grid() = default;
    /// Throws ConfigError unless nx, ny >= 4 and lx, ly > 0.
    Grid(int nx, int ny, double lx, double ly);

    double hx() const { return lx / nx; }
    double hy() const { return ly / ny; }
    double cell_area() const { return hx() * hy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    double x(int i) const { return i * hx(); }
    double y(int j) const { return j * hy(); }

    /// Periodic node index; i and j may lie outside [0, n).
    std::size_t index(int i, int j) const {
        i %= nx;
        j %= ny;
        if (i < 0) i += nx;
        if (j < 0) j += ny;
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(j);
    }

    friend bool operator==(const Grid&, const Grid&) = default;
};

template <class T>
struct Field {
    Grid grid;
    std::vector<T> values;

    Field() = default;
    explicit Field(const Grid& g, const T& init = T{}) : grid(g), values(g.size(), init) {}

    T& operator()(int i, int j) { return values[grid.index(i, j)]; }
    const T& operator()(int i, int j) const { return values[grid.index(i, j)]; }
    T& operator[](std::size_t k) { return values[k]; }
    const T& operator[](std::size_t k) const { return values[k]; }
    std::size_t size() const { return values.size(); }
};

using ScalarField = Field<double>;
using Vec2Field = Field<Vec2>;
using Mat2Field = Field<Mat2>;

/// Displacement, microrotation angle and their rates on one grid.
struct FieldState {
    Grid grid;
    ScalarField u1, u2, theta;
    ScalarField v1, v2, omega;

    FieldState() = default;
    explicit FieldState(const Grid& g) : grid(g), u1(g), u2(g), theta(g), v1(g), v2(g), omega(g) {}

    bool all_finite() const;
};

/// Central difference (f(i+1) - f(i-1)) / 2hx.
template <class T>
Field<T> diff_x(const Field<T>& f) {
    const Grid& g = f.grid;
    const double s = 0.5 / g.hx();
    Field<T> out(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) out(i, j) = (f(i + 1, j) - f(i - 1, j)) * s;
    return out;
}

template <class T>
Field<T> diff_y(const Field<T>& f) {
    const Grid& g = f.grid;
    const double s = 0.5 / g.hy();
    Field<T> out(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) out(i, j) = (f(i, j + 1) - f(i, j - 1)) * s;
    return out;
}

/// Compact three-point second differences.
ScalarField diff_xx(const ScalarField& f);
ScalarField diff_yy(const ScalarField& f);

Vec2Field grad_scalar(const ScalarField& f);
ScalarField div_vector(const Vec2Field& v);

/// (Div M)_i = d_x M_i1 + d_y M_i2.
Vec2Field div_matrix(const Mat2Field& m);

/// (Curl M)_i = eps_rs d_r M_is = d_x M_i2 - d_y M_i1.
Vec2Field curl2_matrix(const Mat2Field& m);

/// Field of microrotations rot2(theta).
Mat2Field rotation_field(const ScalarField& theta);

struct DeformationGradients {
    Mat2Field F;
    Mat2Field Fstar;
};

/// F = 1 + grad u and F* = 1 + grad u* with u* = eps u = (u2, -u1).
DeformationGradients deformation_gradients(const FieldState& state);

/// Grid sum times cell area.
double integrate(const ScalarField& f);

/// CSV snapshot with header i,j,x,y,u1,u2,theta,v1,v2,omega.
void write_snapshot(std::ostream& os, const FieldState& state);

}  // namespace cosserat
