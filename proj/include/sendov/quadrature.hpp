#pragma once

#include <functional>

#include "sendov/complex_poly.hpp"

namespace sendov {

/// Adaptive Gauss-Kronrod (G7,K15) integral of f along the straight segment
/// from z0 to z1. Bisects while the local K15-G7 discrepancy exceeds the
/// depth-shared absolute tolerance. Used as an independent check on the
/// exact division-then-antiderivative path integrals.
Cplx integrate_segment(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1,
                       double abs_tol = 1e-13, int max_depth = 30);

}  // namespace sendov
