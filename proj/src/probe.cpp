#include "sendov/probe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sendov/assignment.hpp"
#include "sendov/rng.hpp"

namespace sendov {

namespace {
constexpr double kStrictness = 1e-12;  // closed-disk / strictly-outside margin
}

double Perturbation::norm() const {
    double sum = dbeta * dbeta;
    for (const Cplx& dz : dzeta) sum += std::norm(dz);
    return std::sqrt(sum);
}

PerturbedResult apply_perturbation(const CandidateParams& params, const Spectrum& base,
                                   const Perturbation& pert) {
    if (pert.dzeta.size() != base.critical_points.size())
        throw std::invalid_argument("perturbation size disagrees with the spectrum");
    require_finite(pert.dbeta, "dbeta");

    std::vector<Cplx> crits(base.critical_points);
    for (std::size_t j = 0; j < crits.size(); ++j) {
        require_finite(pert.dzeta[j], "dzeta");
        crits[j] += pert.dzeta[j];
    }

    ComplexPoly dq = ComplexPoly::constant(Cplx(1.0, 0.0));
    for (const Cplx& zeta : crits) dq = dq * ComplexPoly::linear_factor(zeta);

    const double beta = params.beta + pert.dbeta;
    const ComplexPoly anti = dq.antiderivative();
    const ComplexPoly q = anti - ComplexPoly::constant(anti.eval(Cplx(beta, 0.0)));

    PerturbedResult out;
    out.poly = q;
    out.spec = spectrum_of_poly(q, beta, std::move(crits));

    // Pair perturbed roots with the base roots by minimal total distance.
    const std::size_t n = base.roots.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[i][j] = std::abs(base.roots[i] - out.spec.roots[j]);
    const std::vector<int> match = min_cost_assignment(cost);
    out.root_displacements.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.root_displacements[i] =
            out.spec.roots[static_cast<std::size_t>(match[i])] - base.roots[i];
    return out;
}

ProbeSample classify(const CandidateParams& params, const Spectrum& base,
                     const Perturbation& pert) {
    const PerturbedResult perturbed = apply_perturbation(params, base, pert);

    ProbeSample sample;
    sample.pert = pert;
    sample.root_displacements = perturbed.root_displacements;
    sample.dQ = perturbed.spec.dP;

    double max_mod = 0.0;
    for (const Cplx& z : perturbed.spec.roots) max_mod = std::max(max_mod, std::abs(z));
    sample.admissible = max_mod <= 1.0 + kStrictness;
    sample.improvement = sample.admissible && perturbed.spec.r > base.r + kStrictness;
    return sample;
}

Perturbation witness_perturbation(const Spectrum& base) {
    Perturbation pert;
    pert.dbeta = 1.0 - base.beta;
    pert.dzeta.reserve(base.critical_points.size());
    for (const Cplx& zeta : base.critical_points) pert.dzeta.push_back(-zeta);
    return pert;
}

ScanStats neighborhood_scan(const CandidateParams& params, long long count,
                            double scale, std::uint64_t rng_seed) {
    const Spectrum base = compute_spectrum(params);

    ScanStats stats;
    stats.count = count;
    stats.scale = scale;
    stats.rng_seed = rng_seed;
    stats.dP = base.dP;

    const std::size_t n_zeta = base.critical_points.size();
    for (long long trial = 0; trial < count; ++trial) {
        SplitMix64 rng(derive_seed(rng_seed, static_cast<std::uint64_t>(trial)));
        Perturbation pert;
        pert.dbeta = scale * rng.gaussian();
        pert.dzeta.resize(n_zeta);
        for (std::size_t j = 0; j < n_zeta; ++j) {
            const double re = scale * rng.gaussian();
            const double im = scale * rng.gaussian();
            pert.dzeta[j] = Cplx(re, im);
        }

        const ProbeSample sample = classify(params, base, pert);
        if (sample.admissible) {
            ++stats.admissible;
            stats.max_dQ = std::max(stats.max_dQ, sample.dQ);
        }
        if (sample.improvement) ++stats.improvements;
    }
    stats.margin = stats.dP - stats.max_dQ;
    return stats;
}

}  // namespace sendov
