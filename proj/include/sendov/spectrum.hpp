#pragma once

#include <vector>

#include "sendov/candidate.hpp"
#include "sendov/complex_poly.hpp"

namespace sendov {

/// Roots with modulus within this distance of 1 count toward m.
inline constexpr double kTolCircle = 1e-6;

/// Roots, critical points, and the distance functional of one polynomial.
/// Critical points are stored in a fixed order: the quadratic's roots first
/// (positive imaginary part, then its conjugate), then the collapsed
/// critical point a repeated n-3 times.
struct Spectrum {
    std::vector<Cplx> roots;            // sorted by (Re, Im)
    std::vector<Cplx> critical_points;  // length n-1
    int m = 0;                          // unit-circle root count
    double r = 0.0;                     // min_j |beta - zeta_j|
    double R = 0.0;                     // max over roots != beta of min distance
    double dP = 0.0;                    // max(r, R)
    double beta = 0.0;
    int beta_index = -1;                // index of the root matched to beta
    std::vector<int> unit_circle;       // on-circle root indices, by ascending argument
};

/// Max over roots of the distance to the nearest critical point.
double d_of(const std::vector<Cplx>& roots, const std::vector<Cplx>& crits);

/// Critical points of the candidate: quadratic roots by the quadratic
/// formula, then a with multiplicity n-3.
std::vector<Cplx> critical_points(const CandidateParams& params);

/// Spectrum of the candidate polynomial. Roots come from find_roots on
/// build_candidate; critical points are computed analytically. The computed
/// root nearest beta is identified with beta and must lie within 1e-8 of it.
Spectrum compute_spectrum(const CandidateParams& params);

/// Spectrum of an explicit polynomial whose critical points are known
/// (used for perturbed polynomials, where P' was built from its roots).
Spectrum spectrum_of_poly(const ComplexPoly& poly, double beta,
                          std::vector<Cplx> crits);

}  // namespace sendov
