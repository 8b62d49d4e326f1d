#pragma once

#include <cstdint>
#include <string_view>

namespace cosserat {

/// Constitutive constants of the planar model.
struct MaterialParams {
    double mu = 1.0;       ///< shear modulus
    double lambda = 1.0;   ///< second Lame modulus
    double mu_c = 0.5;     ///< Cosserat couple modulus
    double L_c = 0.1;      ///< characteristic length
    double chi = 0.0;      ///< interaction coupling (dimensionless)
    double rho = 1.0;      ///< mass density
    double rho_rot = 1.0;  ///< rotational density

    // chiral constants
    double mu_s = 0.0;
    double lambda_s = 0.0;
    double mu_c_s = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;

    /// Constant that appears only in the printed homogeneous relation of the
    /// chiral model; it has no counterpart in the energy.
    double mu_c1 = 0.0;

    /// Throws ConfigError unless mu > 0, mu_c >= 0, L_c >= 0, rho > 0,
    /// rho_rot > 0 and every constant is finite.
    void validate() const;

    /// Chiral constants set to mu* = -mu_c* = A, lambda* = -2A, m1 = 0,
    /// m2 = -A (so m1/2 + m2 = -A), everything else copied from base.
    static MaterialParams liu_preset(const MaterialParams& base, double A);

    /// True when the chiral constants satisfy the Liu identification.
    bool is_liu_preset(double tol = 1e-12) const;

    friend bool operator==(const MaterialParams&, const MaterialParams&) = default;
};

enum class ModelKind { NonChiral, Chiral };
enum class CouplingKind { Polar, Skew };

struct ModelSelector {
    ModelKind kind = ModelKind::NonChiral;
    /// Only meaningful for NonChiral; the chiral model always uses the skew coupling.
    CouplingKind coupling = CouplingKind::Polar;

    friend bool operator==(const ModelSelector&, const ModelSelector&) = default;
};

/// Bit set of energy terms.
enum Term : std::uint32_t {
    kElastic = 1u << 0,
    kCurvature = 1u << 1,
    kInteraction = 1u << 2,
    kCouplingPolar = 1u << 3,
    kCouplingSkew = 1u << 4,
    kChiralElastic = 1u << 5,
    kMixing = 1u << 6,
};
using TermSet = std::uint32_t;

inline constexpr TermSet kAllTerms =
    kElastic | kCurvature | kInteraction | kCouplingPolar | kCouplingSkew | kChiralElastic | kMixing;

TermSet active_terms(const ModelSelector& sel);
std::string_view term_name(Term t);

/// Everything needed to evaluate the potential and the equations of motion.
struct Model {
    MaterialParams material;
    ModelSelector selector;
    /// Regularisation of |grad theta| in the interaction term:
    /// sqrt(|g|^2 + eps^2) - eps.
    double eps_reg = 1e-8;

    TermSet terms() const { return active_terms(selector); }
};

}  // namespace cosserat
