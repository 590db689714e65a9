#pragma once

#include <string>
#include <vector>

#include "sendov/candidate.hpp"

namespace sendov {

/// Finite-difference validation of the analytic root derivatives. This path
/// re-expands the polynomial from shifted critical points and re-solves the
/// roots, so it shares no code with the exact division-based formulas it
/// checks. First-order checks use h = 1e-6 and relative error; second-order
/// checks use h = 1e-4 and relative error; the pure-minus-mixed identity is
/// checked in absolute terms.
struct DerivativeCheckReport {
    struct Entry {
        std::string kind;
        double worst = 0.0;
        double tolerance = 0.0;
        bool relative = true;
        bool pass = false;
    };
    std::vector<Entry> entries;

    bool pass() const;
    const Entry& entry(const std::string& kind) const;
};

/// Runs every comparison on every unit-circle root of the candidate.
/// `inject_sign_error` flips the analytic d z / d beta before comparing,
/// for exercising the failure path from the command line.
DerivativeCheckReport run_derivative_checks(const CandidateParams& params,
                                            bool inject_sign_error = false);

}  // namespace sendov
