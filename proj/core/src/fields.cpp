#include "cosserat/fields.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "cosserat/csv.hpp"
#include "cosserat/errors.hpp"

namespace cosserat {

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

Grid::Grid(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
    if (nx < 4 || ny < 4) throw ConfigError(fmt::format("grid needs nx, ny >= 4 (got {} x {})", nx, ny));
    if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly))
        throw ConfigError("grid lengths must be positive and finite");
}

bool FieldState::all_finite() const {
    for (const ScalarField* f : {&u1, &u2, &theta, &v1, &v2, &omega})
        for (double v : f->values)
            if (!std::isfinite(v)) return false;
    return true;
}

ScalarField diff_xx(const ScalarField& f) {
    const Grid& g = f.grid;
    const double s = 1.0 / (g.hx() * g.hx());
    ScalarField out(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) out(i, j) = (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) * s;
    return out;
}

ScalarField diff_yy(const ScalarField& f) {
    const Grid& g = f.grid;
    const double s = 1.0 / (g.hy() * g.hy());
    ScalarField out(g);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) out(i, j) = (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) * s;
    return out;
}

Vec2Field grad_scalar(const ScalarField& f) {
    const ScalarField fx = diff_x(f);
    const ScalarField fy = diff_y(f);
    Vec2Field out(f.grid);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = {fx[k], fy[k]};
    return out;
}

ScalarField div_vector(const Vec2Field& v) {
    const Vec2Field vx = diff_x(v);
    const Vec2Field vy = diff_y(v);
    ScalarField out(v.grid);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = vx[k].x + vy[k].y;
    return out;
}

Vec2Field div_matrix(const Mat2Field& m) {
    const Mat2Field mx = diff_x(m);
    const Mat2Field my = diff_y(m);
    Vec2Field out(m.grid);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = {mx[k](0, 0) + my[k](0, 1), mx[k](1, 0) + my[k](1, 1)};
    return out;
}

Vec2Field curl2_matrix(const Mat2Field& m) {
    const Mat2Field mx = diff_x(m);
    const Mat2Field my = diff_y(m);
    Vec2Field out(m.grid);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = {mx[k](0, 1) - my[k](0, 0), mx[k](1, 1) - my[k](1, 0)};
    return out;
}

Mat2Field rotation_field(const ScalarField& theta) {
    Mat2Field out(theta.grid);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = rot2(theta[k]);
    return out;
}

DeformationGradients deformation_gradients(const FieldState& s) {
    const Vec2Field g1 = grad_scalar(s.u1);
    const Vec2Field g2 = grad_scalar(s.u2);
    DeformationGradients d{Mat2Field(s.grid), Mat2Field(s.grid)};
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        d.F[k] = {{1.0 + g1[k].x, g1[k].y, g2[k].x, 1.0 + g2[k].y}};
        // rows of grad u* are (grad u2, -grad u1)
        d.Fstar[k] = {{1.0 + g2[k].x, g2[k].y, -g1[k].x, 1.0 - g1[k].y}};
    }
    return d;
}

double integrate(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.values) s += v;
    return s * f.grid.cell_area();
}

void write_snapshot(std::ostream& os, const FieldState& s) {
    os << "i,j,x,y,u1,u2,theta,v1,v2,omega\n";
    const Grid& g = s.grid;
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            const std::size_t k = g.index(i, j);
            os << i << ',' << j << ',' << format_double(g.x(i)) << ',' << format_double(g.y(j)) << ','
               << format_double(s.u1[k]) << ',' << format_double(s.u2[k]) << ',' << format_double(s.theta[k])
               << ',' << format_double(s.v1[k]) << ',' << format_double(s.v2[k]) << ','
               << format_double(s.omega[k]) << '\n';
        }
}

}  // namespace cosserat
