#pragma once

#include <cstdint>
#include <vector>

#include "sendov/candidate.hpp"
#include "sendov/spectrum.hpp"

namespace sendov {

/// A joint displacement of beta (real) and the n-1 critical points, ordered
/// as in Spectrum::critical_points.
struct Perturbation {
    double dbeta = 0.0;
    std::vector<Cplx> dzeta;

    double norm() const;
};

struct PerturbedResult {
    ComplexPoly poly;                     // integral of prod (w - zeta_j') from beta'
    Spectrum spec;
    std::vector<Cplx> root_displacements; // indexed like the base spectrum's roots
};

/// Expands the perturbed polynomial, computes its spectrum, and pairs its
/// roots to the base roots by minimal-cost assignment.
PerturbedResult apply_perturbation(const CandidateParams& params, const Spectrum& base,
                                   const Perturbation& pert);

struct ProbeSample {
    Perturbation pert;
    bool admissible = false;   // all roots within the closed unit disk (+1e-12)
    bool improvement = false;  // admissible, and all critical points strictly
                               // outside the radius-r circle at beta+dbeta (+1e-12)
    double dQ = 0.0;
    std::vector<Cplx> root_displacements;
};

ProbeSample classify(const CandidateParams& params, const Spectrum& base,
                     const Perturbation& pert);

/// The always-available improvement (1-beta, -zeta_1, ..., -zeta_{n-1}),
/// which moves the root cluster to z = 1 and every critical point to 0.
Perturbation witness_perturbation(const Spectrum& base);

struct ScanStats {
    long long count = 0;
    double scale = 0.0;
    std::uint64_t rng_seed = 0;
    long long admissible = 0;
    long long improvements = 0;
    double max_dQ = 0.0;  // among admissible samples
    double dP = 0.0;
    double margin = 0.0;  // dP - max_dQ
};

/// Draws `count` perturbations with componentwise Gaussian entries scaled by
/// `scale` (per-trial seeds derived from rng_seed, so results are
/// reproducible bit-for-bit) and classifies each.
ScanStats neighborhood_scan(const CandidateParams& params, long long count,
                            double scale, std::uint64_t rng_seed);

}  // namespace sendov
