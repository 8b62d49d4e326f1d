#include "cosserat/material.hpp"

#include <cmath>
#include <initializer_list>

#include <fmt/format.h>

#include "cosserat/errors.hpp"

namespace cosserat {

void MaterialParams::validate() const {
    for (double v : {mu, lambda, mu_c, L_c, chi, rho, rho_rot, mu_s, lambda_s, mu_c_s, m1, m2, m3, mu_c1})
        if (!std::isfinite(v)) throw ConfigError("material constants must be finite");
    if (!(mu > 0.0)) throw ConfigError(fmt::format("mu must be positive (got {})", mu));
    if (mu_c < 0.0) throw ConfigError(fmt::format("mu_c must be nonnegative (got {})", mu_c));
    if (L_c < 0.0) throw ConfigError(fmt::format("L_c must be nonnegative (got {})", L_c));
    if (!(rho > 0.0)) throw ConfigError(fmt::format("rho must be positive (got {})", rho));
    if (!(rho_rot > 0.0)) throw ConfigError(fmt::format("rho_rot must be positive (got {})", rho_rot));
}

MaterialParams MaterialParams::liu_preset(const MaterialParams& base, double A) {
    MaterialParams p = base;
    p.mu_s = A;
    p.mu_c_s = -A;
    p.lambda_s = -2.0 * A;
    p.m1 = 0.0;
    p.m2 = -A;
    return p;
}

bool MaterialParams::is_liu_preset(double tol) const {
    const double A = mu_s;
    return std::abs(mu_c_s + A) <= tol && std::abs(lambda_s + 2.0 * A) <= tol &&
           std::abs(0.5 * m1 + m2 + A) <= tol;
}

TermSet active_terms(const ModelSelector& sel) {
    if (sel.kind == ModelKind::Chiral) return kCurvature | kElastic | kChiralElastic | kMixing | kCouplingSkew;
    return kElastic | kCurvature | kInteraction |
           (sel.coupling == CouplingKind::Polar ? kCouplingPolar : kCouplingSkew);
}

std::string_view term_name(Term t) {
    switch (t) {
        case kElastic: return "elastic";
        case kCurvature: return "curvature";
        case kInteraction: return "interaction";
        case kCouplingPolar: return "coupling_polar";
        case kCouplingSkew: return "coupling_skew";
        case kChiralElastic: return "chiral_elastic";
        case kMixing: return "mixing";
    }
    return "unknown";
}

}  // namespace cosserat
