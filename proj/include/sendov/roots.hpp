#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sendov/complex_poly.hpp"

namespace sendov {

/// Root finding did not reach the residual target; never silent.
class RootFindError : public std::runtime_error {
  public:
    explicit RootFindError(const std::string& what) : std::runtime_error(what) {}
};

struct RootFindOptions {
    int max_iterations = 500;
    /// Residual acceptance: |p(z)| <= residual_factor * max|coeff| * max(1,|z|)^deg.
    double residual_factor = 1e-10;
};

/// All complex roots of p with multiplicity, via Aberth-Ehrlich simultaneous
/// iteration from a perturbed-circle start, each root polished by Newton.
/// The polynomial is monic-scaled internally. Output is sorted by real part,
/// then imaginary part, and is deterministic.
std::vector<Cplx> find_roots(const ComplexPoly& p, const RootFindOptions& opts = {});

}  // namespace sendov
