#pragma once

#include <string>
#include <vector>

#include "sendov/candidate.hpp"
#include "sendov/spectrum.hpp"
#include "sendov/variational.hpp"

namespace sendov {

/// Numeric thresholds of the eight-property check, recorded in every report.
struct ToleranceTable {
    double max_modulus = 1e-8;        // A: | max|z_i| - 1 |
    double min_root_gap = 0.1;        // B
    double beta_low = 0.7;            // C
    double beta_high = 0.9;           // C
    double equidistance = 1e-9;       // D: spread of |zeta_j - beta|
    double min_circle_radius = 0.9;   // D
    double min_beta_minus_a = 0.9;    // E
    double r_max = 0.97;              // F
    double r_minus_r_gap = 0.02;      // F
    double min_certificate = 0.3;     // G
    double sigma7_min = 0.04;         // H
    double tol_circle = kTolCircle;   // unit-circle membership for m
    double null_space_sigma = 1e-8;   // singular values treated as zero
    double root_residual = 1e-10;     // root finder acceptance factor
    double beta_match = 1e-8;         // beta-to-root identification
};

struct PropertyCheck {
    char id = '?';                   // 'A'..'H'
    std::vector<double> measured;    // always recorded, even on failure
    std::vector<double> threshold;
    double margin = 0.0;             // slack; positive iff pass
    bool pass = false;
};

struct PropertyReport {
    CandidateParams candidate;
    std::vector<PropertyCheck> properties;  // exactly A..H in order
    bool overall = false;
    ToleranceTable tolerances;
    std::vector<double> certificate;  // c vector from the G check
    int null_space_dim = -1;
    std::vector<double> singular_values;

    const PropertyCheck& property(char id) const;
};

/// Properties A-F from the spectrum alone; failures are report entries.
std::vector<PropertyCheck> check_geometry(const CandidateParams& params,
                                          const Spectrum& spec,
                                          const ToleranceTable& tol = {});

struct CertificateResult {
    std::vector<double> c;
    double min_c = 0.0;
    bool pass = false;
    int null_dim = 0;
    std::string diagnostic;
};

/// Property G: positive weights c with c.E = 0 and c.f = 1. Searches the
/// left null space of E; one free angle (odd n) is resolved by a 2048-point
/// scan plus golden-section refinement of min_k c_k.
CertificateResult certify_G(const VariationalSystem& sys,
                            const ToleranceTable& tol = {});

struct RankResult {
    double sigma7 = 0.0;
    bool pass = false;
    std::vector<double> sigmas;  // all singular values, descending
};

/// Property H: seventh largest singular value of E above the threshold.
RankResult certify_H(const VariationalSystem& sys, const ToleranceTable& tol = {});

/// Full pipeline: build, spectrum, sensitivities, system, A-H. All eight
/// properties are always evaluated and recorded. Infrastructure failures
/// (root finding, non-simple roots) propagate as exceptions; property
/// failures are report entries.
PropertyReport certify_all(const CandidateParams& params, const ToleranceTable& tol = {});

}  // namespace sendov
