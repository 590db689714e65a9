#pragma once

#include <vector>

#include "sendov/complex_poly.hpp"

namespace sendov {

/// Real unknowns defining one candidate polynomial
/// P(z) = integral from beta to z of (w-a)^{n-3} (w^2 + b w + c) dw.
/// The d_i are the middle coefficients of the unit-circle quadratics
/// z^2 + d_i z + 1 the constructor pins root pairs to: three for odd n,
/// two for even n (even n carries a root at -1 instead of a third pair).
struct CandidateParams {
    int n = 0;
    double beta = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::vector<double> d;

    /// Full invariant check: n >= 5, d sized by parity, each |d_i| < 2,
    /// all fields finite. Throws std::invalid_argument.
    void validate() const;
};

/// Expanded P'(z) = (z-a)^{n-3} (z^2 + b z + c). Requires n >= 5.
ComplexPoly expand_pprime(const CandidateParams& params);

/// P of degree n with P(beta) = 0 and the derivative above: term-wise
/// antiderivative Q with Q(0) = 0, shifted by -Q(beta). Ignores d.
ComplexPoly build_candidate(const CandidateParams& params);

}  // namespace sendov
