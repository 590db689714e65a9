#pragma once

#include <array>
#include <string>
#include <vector>

#include "sendov/candidate.hpp"
#include "sendov/spectrum.hpp"

namespace sendov {

/// A divisor of P': either a linear factor w - zeta (zeta must be a critical
/// point) or the squared collapsed factor (w - a)^2.
struct Factor {
    enum class Kind { Linear, SquaredCollapsed };
    Kind kind = Kind::Linear;
    Cplx zeta;

    static Factor linear(Cplx z) { return {Kind::Linear, z}; }
    static Factor squared_collapsed() { return {Kind::SquaredCollapsed, {}}; }
};

/// Integral from beta to z_end of P'(w) / factor(w) dw, by exact polynomial
/// division of P' and term-wise antiderivative of the quotient. Throws
/// std::invalid_argument when the factor fails to divide P' (remainder above
/// 1e-10 of the coefficient scale).
Cplx integral_pprime_over_factor(const CandidateParams& params, Cplx z_end,
                                 const Factor& factor);

/// Analytic partial derivatives of one simple unit-circle root, plus the
/// multiplier of sum (Im dzeta_j)^2 in the quadratic modulus expansion.
struct RootSensitivity {
    Cplx z;          // the unit-circle root
    Cplx dz_dbeta;   // P'(beta) / P'(z)
    Cplx dz_dzeta1;  // via the integral over w - zeta_1
    Cplx dz_dzeta2;
    Cplx dz_dzeta3;  // any one collapsed critical point at a
    double f_coeff;  // -Re[ 1/(2 z P'(z)) * integral over (w-a)^2 ]
};

/// Sensitivities for every unit-circle root, in the spectrum's unit-circle
/// order. Fails if any |P'(z_i)| < 1e-12 (root not simple).
std::vector<RootSensitivity> root_sensitivities(const CandidateParams& params,
                                                const Spectrum& spec);

struct SecondDerivatives {
    Cplx pure;        // d^2 z_i / d zeta_j^2 at zeta_j = a
    Cplx mixed;       // d^2 z_i / d zeta_j d zeta_k at zeta_j = zeta_k = a
    Cplx difference;  // pure - mixed; equals integral over (w-a)^2 / P'(z_i)
};

SecondDerivatives second_derivatives(const CandidateParams& params,
                                     const Spectrum& spec, Cplx z_i);

/// Linearized constraint system in the 7 real variables
/// (dbeta, Re dz1, Im dz1, Re dz2, Im dz2, Re S, Im S), S = sum_{j>=3} dzeta_j,
/// with the f vector of quadratic multipliers: F_k = f_k * sum (Im dzeta_j)^2.
struct VariationalSystem {
    std::vector<std::array<double, 7>> E;  // m+3 rows
    std::vector<double> f;                 // m+3 entries; f_1 = f_2 = 0

    int rows() const { return static_cast<int>(E.size()); }
};

extern const std::array<const char*, 7> kVariableNames;

/// Assembles the (m+3) x 7 system. A meaningful rank-7 certificate needs
/// m >= 5; smaller m still yields a well-formed (degenerate) system so the
/// certifier can record its measurements. Throws on a sensitivity/spectrum
/// shape mismatch.
VariationalSystem build_system(const CandidateParams& params, const Spectrum& spec,
                               const std::vector<RootSensitivity>& sens);

}  // namespace sendov
