#include "sendov/derivative_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sendov/roots.hpp"
#include "sendov/spectrum.hpp"
#include "sendov/variational.hpp"

namespace sendov {

namespace {

constexpr double kFirstOrderStep = 1e-6;
constexpr double kSecondOrderStep = 1e-4;
constexpr double kFirstOrderTol = 1e-6;
constexpr double kSecondOrderTol = 1e-4;
constexpr double kIdentityTol = 1e-10;

// P rebuilt from an explicit critical-point list: the independent path.
ComplexPoly poly_from_crits(const std::vector<Cplx>& crits, double beta) {
    ComplexPoly dp = ComplexPoly::constant(Cplx(1.0, 0.0));
    for (const Cplx& zeta : crits) dp = dp * ComplexPoly::linear_factor(zeta);
    const ComplexPoly anti = dp.antiderivative();
    return anti - ComplexPoly::constant(anti.eval(Cplx(beta, 0.0)));
}

Cplx tracked_root(const ComplexPoly& p, Cplx near) {
    const std::vector<Cplx> roots = find_roots(p);
    Cplx best = roots.front();
    double best_dist = std::numeric_limits<double>::infinity();
    for (const Cplx& z : roots) {
        const double dist = std::abs(z - near);
        if (dist < best_dist) {
            best_dist = dist;
            best = z;
        }
    }
    return best;
}

double rel_err(Cplx measured, Cplx expected) {
    const double scale = std::max(std::abs(expected), 1e-300);
    return std::abs(measured - expected) / scale;
}

}  // namespace

bool DerivativeCheckReport::pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.pass; });
}

const DerivativeCheckReport::Entry& DerivativeCheckReport::entry(
    const std::string& kind) const {
    for (const Entry& e : entries)
        if (e.kind == kind) return e;
    throw std::out_of_range("no such derivative check: " + kind);
}

DerivativeCheckReport run_derivative_checks(const CandidateParams& params,
                                            bool inject_sign_error) {
    const Spectrum spec = compute_spectrum(params);
    const std::vector<RootSensitivity> sens = root_sensitivities(params, spec);
    const std::vector<Cplx> crits = critical_points(params);
    const double beta = params.beta;

    double worst_dbeta = 0.0, worst_dz1 = 0.0, worst_dz2 = 0.0, worst_dz3 = 0.0;
    double worst_pure = 0.0, worst_mixed = 0.0, worst_identity = 0.0;

    for (const RootSensitivity& s : sens) {
        const Cplx z = s.z;
        const double h1 = kFirstOrderStep;

        // d z / d beta: move the lower integration limit.
        {
            const Cplx zp = tracked_root(poly_from_crits(crits, beta + h1), z);
            const Cplx zm = tracked_root(poly_from_crits(crits, beta - h1), z);
            const Cplx fd = (zp - zm) / (2.0 * h1);
            const Cplx analytic = inject_sign_error ? -s.dz_dbeta : s.dz_dbeta;
            worst_dbeta = std::max(worst_dbeta, rel_err(fd, analytic));
        }

        // d z / d zeta_1 and zeta_2: shift one quadratic root.
        for (int which = 0; which < 2; ++which) {
            std::vector<Cplx> shifted = crits;
            shifted[static_cast<std::size_t>(which)] += h1;
            const Cplx zp = tracked_root(poly_from_crits(shifted, beta), z);
            shifted[static_cast<std::size_t>(which)] -= 2.0 * h1;
            const Cplx zm = tracked_root(poly_from_crits(shifted, beta), z);
            const Cplx fd = (zp - zm) / (2.0 * h1);
            const double err = rel_err(fd, which == 0 ? s.dz_dzeta1 : s.dz_dzeta2);
            (which == 0 ? worst_dz1 : worst_dz2) =
                std::max(which == 0 ? worst_dz1 : worst_dz2, err);
        }

        // d z / d zeta_3: split one collapsed factor off (w-a)^{n-3}.
        {
            std::vector<Cplx> shifted = crits;
            shifted[2] += h1;
            const Cplx zp = tracked_root(poly_from_crits(shifted, beta), z);
            shifted[2] -= 2.0 * h1;
            const Cplx zm = tracked_root(poly_from_crits(shifted, beta), z);
            const Cplx fd = (zp - zm) / (2.0 * h1);
            worst_dz3 = std::max(worst_dz3, rel_err(fd, s.dz_dzeta3));
        }

        const SecondDerivatives second = second_derivatives(params, spec, z);
        const double h2 = kSecondOrderStep;

        // Pure second derivative: second difference over one split factor.
        {
            std::vector<Cplx> shifted = crits;
            shifted[2] += h2;
            const Cplx zp = tracked_root(poly_from_crits(shifted, beta), z);
            shifted[2] -= 2.0 * h2;
            const Cplx zm = tracked_root(poly_from_crits(shifted, beta), z);
            const Cplx fd = (zp - 2.0 * z + zm) / (h2 * h2);
            worst_pure = std::max(worst_pure, rel_err(fd, second.pure));
        }

        // Mixed second derivative: two split factors, opposite shifts give
        // the same multiset so the cross term is evaluated once.
        {
            std::vector<Cplx> pp = crits, pm = crits, mm = crits;
            pp[2] += h2;
            pp[3] += h2;
            pm[2] += h2;
            pm[3] -= h2;
            mm[2] -= h2;
            mm[3] -= h2;
            const Cplx zpp = tracked_root(poly_from_crits(pp, beta), z);
            const Cplx zpm = tracked_root(poly_from_crits(pm, beta), z);
            const Cplx zmm = tracked_root(poly_from_crits(mm, beta), z);
            const Cplx fd = (zpp - 2.0 * zpm + zmm) / (4.0 * h2 * h2);
            worst_mixed = std::max(worst_mixed, rel_err(fd, second.mixed));
        }

        // Displayed case split: pure - mixed = integral over (w-a)^2 / P'(z).
        {
            const ComplexPoly pprime = expand_pprime(params);
            const Cplx expected =
                integral_pprime_over_factor(params, z, Factor::squared_collapsed()) /
                pprime.eval(z);
            worst_identity =
                std::max(worst_identity, std::abs(second.difference - expected));
        }
    }

    DerivativeCheckReport report;
    const auto add = [&report](const char* kind, double worst, double tol, bool rel) {
        report.entries.push_back({kind, worst, tol, rel, worst <= tol});
    };
    add("dz_dbeta", worst_dbeta, kFirstOrderTol, true);
    add("dz_dzeta1", worst_dz1, kFirstOrderTol, true);
    add("dz_dzeta2", worst_dz2, kFirstOrderTol, true);
    add("dz_dzeta3", worst_dz3, kFirstOrderTol, true);
    add("d2z_pure", worst_pure, kSecondOrderTol, true);
    add("d2z_mixed", worst_mixed, kSecondOrderTol, true);
    add("second_derivative_identity", worst_identity, kIdentityTol, false);
    return report;
}

}  // namespace sendov
