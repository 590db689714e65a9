#include "sendov/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sendov/roots.hpp"

namespace sendov {

double d_of(const std::vector<Cplx>& roots, const std::vector<Cplx>& crits) {
    if (roots.empty() || crits.empty())
        throw std::invalid_argument("d_of requires nonempty root and critical point sets");
    double worst = 0.0;
    for (const Cplx& z : roots) {
        double best = std::numeric_limits<double>::infinity();
        for (const Cplx& zeta : crits) best = std::min(best, std::abs(z - zeta));
        worst = std::max(worst, best);
    }
    return worst;
}

std::vector<Cplx> critical_points(const CandidateParams& params) {
    if (params.n < 5) throw std::invalid_argument("critical_points requires n >= 5");
    std::vector<Cplx> crits;
    crits.reserve(static_cast<std::size_t>(params.n) - 1);

    const double disc = params.b * params.b - 4.0 * params.c;
    if (disc < 0.0) {
        const Cplx zeta(-params.b / 2.0, std::sqrt(-disc) / 2.0);
        crits.push_back(zeta);
        crits.push_back(std::conj(zeta));
    } else {
        const double s = std::sqrt(disc);
        crits.emplace_back((-params.b + s) / 2.0, 0.0);
        crits.emplace_back((-params.b - s) / 2.0, 0.0);
    }
    for (int k = 0; k < params.n - 3; ++k) crits.emplace_back(params.a, 0.0);
    return crits;
}

Spectrum spectrum_of_poly(const ComplexPoly& poly, double beta, std::vector<Cplx> crits) {
    Spectrum spec;
    spec.beta = beta;
    spec.roots = find_roots(poly);
    spec.critical_points = std::move(crits);

    int nearest = -1;
    double nearest_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        const double dist = std::abs(spec.roots[i] - Cplx(beta, 0.0));
        if (dist < nearest_dist) {
            nearest_dist = dist;
            nearest = static_cast<int>(i);
        }
    }
    if (nearest < 0 || nearest_dist > 1e-8)
        throw std::runtime_error("no computed root within 1e-8 of beta");
    spec.beta_index = nearest;

    spec.r = std::numeric_limits<double>::infinity();
    for (const Cplx& zeta : spec.critical_points)
        spec.r = std::min(spec.r, std::abs(Cplx(beta, 0.0) - zeta));

    spec.R = 0.0;
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        if (static_cast<int>(i) == spec.beta_index) continue;
        double best = std::numeric_limits<double>::infinity();
        for (const Cplx& zeta : spec.critical_points)
            best = std::min(best, std::abs(spec.roots[i] - zeta));
        spec.R = std::max(spec.R, best);
    }
    spec.dP = std::max(spec.r, spec.R);

    for (std::size_t i = 0; i < spec.roots.size(); ++i)
        if (std::abs(std::abs(spec.roots[i]) - 1.0) <= kTolCircle)
            spec.unit_circle.push_back(static_cast<int>(i));
    spec.m = static_cast<int>(spec.unit_circle.size());
    std::sort(spec.unit_circle.begin(), spec.unit_circle.end(), [&spec](int i, int j) {
        return std::arg(spec.roots[static_cast<std::size_t>(i)]) <
               std::arg(spec.roots[static_cast<std::size_t>(j)]);
    });
    return spec;
}

Spectrum compute_spectrum(const CandidateParams& params) {
    return spectrum_of_poly(build_candidate(params), params.beta, critical_points(params));
}

}  // namespace sendov
