#include "sendov/variational.hpp"

#include <cmath>
#include <stdexcept>

namespace sendov {

const std::array<const char*, 7> kVariableNames = {
    "dbeta", "re_dz1", "im_dz1", "re_dz2", "im_dz2", "re_S", "im_S"};

namespace {

// Divide p by (w - zeta), rejecting an inexact divisor.
ComplexPoly checked_linear_quotient(const ComplexPoly& p, Cplx zeta) {
    const LinearDivision div = divmod_linear(p, zeta);
    const double scale =
        p.max_coeff_mag() * std::pow(std::max(1.0, std::abs(zeta)), p.degree());
    if (std::abs(div.remainder) > 1e-10 * scale)
        throw std::invalid_argument("factor does not divide P' exactly");
    return div.quotient;
}

ComplexPoly quotient_for_factor(const CandidateParams& params, const Factor& factor) {
    const ComplexPoly pprime = expand_pprime(params);
    if (factor.kind == Factor::Kind::Linear)
        return checked_linear_quotient(pprime, factor.zeta);
    const Cplx a(params.a, 0.0);
    return checked_linear_quotient(checked_linear_quotient(pprime, a), a);
}

}  // namespace

Cplx integral_pprime_over_factor(const CandidateParams& params, Cplx z_end,
                                 const Factor& factor) {
    require_finite(z_end, "z_end");
    const ComplexPoly anti = quotient_for_factor(params, factor).antiderivative();
    return anti.eval(z_end) - anti.eval(Cplx(params.beta, 0.0));
}

std::vector<RootSensitivity> root_sensitivities(const CandidateParams& params,
                                                const Spectrum& spec) {
    const ComplexPoly pprime = expand_pprime(params);
    const Cplx pprime_beta = pprime.eval(Cplx(params.beta, 0.0));
    const Cplx zeta1 = spec.critical_points.at(0);
    const Cplx zeta2 = spec.critical_points.at(1);
    const Cplx a(params.a, 0.0);

    std::vector<RootSensitivity> out;
    out.reserve(spec.unit_circle.size());
    for (int idx : spec.unit_circle) {
        const Cplx z = spec.roots.at(static_cast<std::size_t>(idx));
        const Cplx pz = pprime.eval(z);
        if (std::abs(pz) < 1e-12)
            throw std::runtime_error("unit-circle root is not simple: |P'(z_i)| < 1e-12");

        RootSensitivity s;
        s.z = z;
        s.dz_dbeta = pprime_beta / pz;
        s.dz_dzeta1 = integral_pprime_over_factor(params, z, Factor::linear(zeta1)) / pz;
        s.dz_dzeta2 = integral_pprime_over_factor(params, z, Factor::linear(zeta2)) / pz;
        s.dz_dzeta3 = integral_pprime_over_factor(params, z, Factor::linear(a)) / pz;
        const Cplx sq = integral_pprime_over_factor(params, z, Factor::squared_collapsed());
        s.f_coeff = -std::real(sq / (2.0 * z * pz));
        out.push_back(s);
    }
    return out;
}

SecondDerivatives second_derivatives(const CandidateParams& params,
                                     const Spectrum& spec, Cplx z_i) {
    bool known = false;
    for (const Cplx& z : spec.roots)
        if (std::abs(z - z_i) < 1e-9) known = true;
    if (!known) throw std::invalid_argument("z_i is not a root of the candidate");

    const ComplexPoly pprime = expand_pprime(params);
    const Cplx pz = pprime.eval(z_i);
    if (std::abs(pz) < 1e-12)
        throw std::runtime_error("root is not simple: |P'(z_i)| < 1e-12");
    const Cplx ratio = pprime.derivative().eval(z_i) / pz;
    const Cplx a(params.a, 0.0);
    const Cplx dz = integral_pprime_over_factor(params, z_i, Factor::linear(a)) / pz;
    const Cplx sq = integral_pprime_over_factor(params, z_i, Factor::squared_collapsed());

    SecondDerivatives out;
    out.pure = 2.0 / (z_i - a) * dz - ratio * dz * dz;
    out.mixed = out.pure - sq / pz;
    out.difference = out.pure - out.mixed;
    return out;
}

VariationalSystem build_system(const CandidateParams& params, const Spectrum& spec,
                               const std::vector<RootSensitivity>& sens) {
    if (static_cast<int>(sens.size()) != spec.m)
        throw std::invalid_argument("sensitivity count disagrees with spectrum's m");

    const double gap = params.beta - params.a;
    VariationalSystem sys;
    sys.E.assign(static_cast<std::size_t>(spec.m) + 3, {});
    sys.f.assign(static_cast<std::size_t>(spec.m) + 3, 0.0);

    // Rows 1-2: E_k = -Re[(dzeta_k - dbeta) / (zeta_k - beta)].
    for (int k = 0; k < 2; ++k) {
        const Cplx inv = 1.0 / (spec.critical_points.at(static_cast<std::size_t>(k)) -
                                Cplx(params.beta, 0.0));
        auto& row = sys.E[static_cast<std::size_t>(k)];
        row[0] = inv.real();
        row[static_cast<std::size_t>(1 + 2 * k)] = -inv.real();
        row[static_cast<std::size_t>(2 + 2 * k)] = inv.imag();
    }

    // Row 3: E_3 = (Re S - (n-3) dbeta) / (beta - a).
    sys.E[2][0] = -(params.n - 3) / gap;
    sys.E[2][5] = 1.0 / gap;
    sys.f[2] = -1.0 / (2.0 * gap * gap);

    // Rows i+3 from the root sensitivities.
    for (std::size_t i = 0; i < sens.size(); ++i) {
        const RootSensitivity& s = sens[i];
        auto& row = sys.E[i + 3];
        row[0] = std::real(s.dz_dbeta / s.z);
        const Cplx w1 = s.dz_dzeta1 / s.z;
        row[1] = w1.real();
        row[2] = -w1.imag();
        const Cplx w2 = s.dz_dzeta2 / s.z;
        row[3] = w2.real();
        row[4] = -w2.imag();
        const Cplx w3 = s.dz_dzeta3 / s.z;
        row[5] = w3.real();
        row[6] = -w3.imag();
        sys.f[i + 3] = s.f_coeff;
    }
    return sys;
}

}  // namespace sendov
