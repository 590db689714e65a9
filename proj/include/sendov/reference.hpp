#pragma once

#include <vector>

#include "sendov/candidate.hpp"

namespace sendov {

/// One bundled reference solution: the published 10-digit values plus the
/// full parameter vector re-converged to residual < 1e-12 (17 digits),
/// including the unit-circle quadratic coefficients d_i.
struct ReferenceSolution {
    int n;
    double beta, a, b, c;          // published values
    std::vector<double> refined;   // (beta, a, b, c, d_1, d_2[, d_3])
};

/// The nine reference degrees {8, 9, 12, 13, 14, 15, 19, 20, 26}, ascending.
const std::vector<ReferenceSolution>& reference_solutions();

/// Null when n is not one of the reference degrees.
const ReferenceSolution* reference_for(int n);

CandidateParams reference_params(const ReferenceSolution& ref);

/// Newton seed: the reference parameter vector rounded to `decimals` places.
std::vector<double> reference_seed(const ReferenceSolution& ref, int decimals = 3);

}  // namespace sendov
