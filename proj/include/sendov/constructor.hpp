#pragma once

#include <string>
#include <vector>

#include "sendov/candidate.hpp"
#include "sendov/certifier.hpp"

namespace sendov {

/// Unknown ordering for the square nonlinear system:
/// (beta, a, b, c, d_1, d_2[, d_3]) - 7 unknowns for odd n, 6 for even n.
int system_dim(int n);
std::vector<std::string> unknown_names(int n);

/// Parameter vector <-> CandidateParams packing.
std::vector<double> pack_params(const CandidateParams& params);
CandidateParams unpack_params(int n, const std::vector<double>& x);

/// Residual components, all evaluated through the polynomial core:
///   [0]         beta^2 + b*beta + c - (beta-a)^2       (critical circle)
///   [1..2i]     r1, r0 of P mod (z^2 + d_i z + 1)       (per pinned pair)
///   [last]      P(-1)                                   (even n only)
std::vector<double> residual(int n, const std::vector<double>& x);

struct NewtonOptions {
    int max_iterations = 200;
    double tolerance = 1e-12;        // on the residual sup norm
    double jacobian_step = 1e-7;     // central difference, scaled by max(1,|x_i|)
    double max_condition = 1e14;
    int max_backtracks = 30;
};

struct NewtonResult {
    std::vector<double> x;
    bool converged = false;
    int iterations = 0;
    double residual_norm = 0.0;  // sup norm at x
    std::string diagnostic;      // set when aborted (singular Jacobian, divergence)
};

/// Damped Newton with a central finite-difference Jacobian and simple
/// backtracking on the residual norm.
NewtonResult newton_solve(int n, std::vector<double> x0, const NewtonOptions& opts = {});

struct ConstructionRecord {
    std::vector<double> seed;
    NewtonResult solve;
    bool duplicate = false;
    bool certified = false;
    std::string note;  // certification/validation failures worth keeping
};

struct ConstructedCandidate {
    CandidateParams params;
    PropertyReport report;
};

/// Runs newton_solve from every seed, deduplicates converged solutions
/// (componentwise distance < 1e-6), certifies each, and returns the
/// overall-pass candidates sorted by beta. An empty result is a valid
/// outcome. Per-seed records are appended to *log when provided.
std::vector<ConstructedCandidate> construct(int n,
                                            const std::vector<std::vector<double>>& seeds,
                                            std::vector<ConstructionRecord>* log = nullptr);

/// Coarse exploration grid over (beta, a, d_i) with b, c pinned by the
/// critical-circle equation and quadratic roots placed at distance beta - a
/// from the origin.
std::vector<std::vector<double>> discovery_seeds(int n);

}  // namespace sendov
