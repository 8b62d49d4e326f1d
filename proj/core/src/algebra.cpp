#include "cosserat/algebra.hpp"

#include <string>

#include "cosserat/errors.hpp"

namespace cosserat {

Polar2 polar2(const Mat2& F) {
    const double d = det(F);
    if (!(d > kDegenerateDet)) {
        throw DegenerateDeformation("polar2: det F = " + std::to_string(d) + " is not positive");
    }
    // F + cof F = [[a, b], [-b, a]] with a = F11 + F22, b = F12 - F21.
    const double a = F(0, 0) + F(1, 1);
    const double b = F(0, 1) - F(1, 0);
    const double n = std::hypot(a, b);
    const Mat2 R{{a / n, b / n, -b / n, a / n}};
    // tr U = <R, F> = n.
    return {R, sym(transpose(R) * F), n};
}

Mat2 dpolar2_dir(const Mat2& F, const Mat2& E) {
    const Polar2 p = polar2(F);
    return (1.0 / p.trU) * (E - p.R * transpose(E) * p.R);
}

Mat2 Tensor4_2D::apply(const Mat2& e) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double s = 0.0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) s += (*this)(i, j, k, l) * e(k, l);
            r(i, j) = s;
        }
    return r;
}

Tensor4_2D dpolar2_dF(const Mat2& F) {
    const Polar2 p = polar2(F);
    Tensor4_2D t;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            Mat2 e;
            e(k, l) = 1.0;
            const Mat2 dr = (1.0 / p.trU) * (e - p.R * transpose(e) * p.R);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) t(i, j, k, l) = dr(i, j);
        }
    return t;
}

}  // namespace cosserat
