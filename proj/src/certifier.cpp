#include "sendov/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "sendov/svd.hpp"

namespace sendov {

namespace {

PropertyCheck make_check(char id, std::vector<double> measured,
                         std::vector<double> threshold, double margin) {
    PropertyCheck check;
    check.id = id;
    check.measured = std::move(measured);
    check.threshold = std::move(threshold);
    check.margin = margin;
    check.pass = margin > 0.0;
    return check;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

// min_k c_k for c = v / (v . f); -inf when the normalization degenerates.
double certificate_score(const std::vector<double>& v, const std::vector<double>& f,
                         std::vector<double>* c_out = nullptr) {
    const double denom = dot(v, f);
    if (std::abs(denom) < 1e-12) return -std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    if (c_out) c_out->resize(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double ck = v[k] / denom;
        if (c_out) (*c_out)[k] = ck;
        worst = std::min(worst, ck);
    }
    return worst;
}

}  // namespace

const PropertyCheck& PropertyReport::property(char id) const {
    for (const PropertyCheck& check : properties)
        if (check.id == id) return check;
    throw std::out_of_range("no such property in report");
}

std::vector<PropertyCheck> check_geometry(const CandidateParams& params,
                                          const Spectrum& spec,
                                          const ToleranceTable& tol) {
    std::vector<PropertyCheck> checks;

    // A: maximum root modulus equal to 1 within tolerance.
    double max_mod = 0.0;
    for (const Cplx& z : spec.roots) max_mod = std::max(max_mod, std::abs(z));
    checks.push_back(make_check('A', {max_mod}, {tol.max_modulus},
                                tol.max_modulus - std::abs(max_mod - 1.0)));

    // B: minimum pairwise root distance (all roots simple).
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.roots.size(); ++i)
        for (std::size_t j = i + 1; j < spec.roots.size(); ++j)
            min_gap = std::min(min_gap, std::abs(spec.roots[i] - spec.roots[j]));
    checks.push_back(
        make_check('B', {min_gap}, {tol.min_root_gap}, min_gap - tol.min_root_gap));

    // C: 0.7 < beta < 0.9.
    checks.push_back(make_check('C', {params.beta}, {tol.beta_low, tol.beta_high},
                                std::min(params.beta - tol.beta_low,
                                         tol.beta_high - params.beta)));

    // D: critical points equidistant from beta, common distance > 0.9.
    double dist_min = std::numeric_limits<double>::infinity();
    double dist_max = 0.0;
    for (const Cplx& zeta : spec.critical_points) {
        const double dist = std::abs(zeta - Cplx(params.beta, 0.0));
        dist_min = std::min(dist_min, dist);
        dist_max = std::max(dist_max, dist);
    }
    const double spread = dist_max - dist_min;
    checks.push_back(make_check('D', {spread, dist_min},
                                {tol.equidistance, tol.min_circle_radius},
                                std::min(tol.equidistance - spread,
                                         dist_min - tol.min_circle_radius)));

    // E: beta - a > 0.9.
    const double gap = params.beta - params.a;
    checks.push_back(
        make_check('E', {gap}, {tol.min_beta_minus_a}, gap - tol.min_beta_minus_a));

    // F: r < 0.97 and r - R > 0.02.
    checks.push_back(make_check('F', {spec.r, spec.r - spec.R},
                                {tol.r_max, tol.r_minus_r_gap},
                                std::min(tol.r_max - spec.r,
                                         (spec.r - spec.R) - tol.r_minus_r_gap)));
    return checks;
}

CertificateResult certify_G(const VariationalSystem& sys, const ToleranceTable& tol) {
    CertificateResult out;

    Matrix rows(sys.E.size(), std::vector<double>(7));
    for (std::size_t i = 0; i < sys.E.size(); ++i)
        rows[i].assign(sys.E[i].begin(), sys.E[i].end());

    // Left null space of E = kernel of E^T, from the right singular vectors
    // of E^T with negligible singular value.
    const SvdResult svd = jacobi_svd(transpose(rows));
    std::vector<std::vector<double>> basis;
    for (std::size_t k = 0; k < svd.singular_values.size(); ++k)
        if (svd.singular_values[k] < tol.null_space_sigma)
            basis.push_back(svd.right_vectors[k]);
    out.null_dim = static_cast<int>(basis.size());

    if (basis.empty()) {
        out.diagnostic = "left null space of E is trivial";
        return out;
    }

    if (basis.size() == 1) {
        out.min_c = certificate_score(basis[0], sys.f, &out.c);
        if (!std::isfinite(out.min_c)) {
            out.diagnostic = "certificate normalization c.f vanishes";
            out.min_c = 0.0;
            out.c.clear();
            return out;
        }
    } else if (basis.size() == 2) {
        // c(theta) = cos(theta) u1 + sin(theta) u2, rescaled to c.f = 1;
        // scan then refine the remaining angle.
        const auto blend = [&basis](double theta) {
            std::vector<double> v(basis[0].size());
            const double ct = std::cos(theta);
            const double st = std::sin(theta);
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] = ct * basis[0][k] + st * basis[1][k];
            return v;
        };
        const auto score = [&](double theta) {
            return certificate_score(blend(theta), sys.f);
        };

        const int grid = 2048;
        double best_theta = 0.0;
        double best = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < grid; ++k) {
            const double theta = std::numbers::pi * k / grid;
            const double s = score(theta);
            if (s > best) {
                best = s;
                best_theta = theta;
            }
        }
        double lo = best_theta - std::numbers::pi / grid;
        double hi = best_theta + std::numbers::pi / grid;
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - golden * (hi - lo);
        double x2 = lo + golden * (hi - lo);
        double f1 = score(x1);
        double f2 = score(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + golden * (hi - lo);
                f2 = score(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - golden * (hi - lo);
                f1 = score(x1);
            }
        }
        const double refined = (f1 > f2) ? x1 : x2;
        const double theta_star = (std::max(f1, f2) > best) ? refined : best_theta;
        out.min_c = certificate_score(blend(theta_star), sys.f, &out.c);
        if (!std::isfinite(out.min_c)) {
            out.diagnostic = "certificate normalization c.f vanishes";
            out.min_c = 0.0;
            out.c.clear();
            return out;
        }
    } else {
        out.diagnostic = "left null space dimension " + std::to_string(basis.size()) +
                         " exceeds the supported search (expected 1 or 2)";
        return out;
    }

    out.pass = out.min_c > tol.min_certificate;
    return out;
}

RankResult certify_H(const VariationalSystem& sys, const ToleranceTable& tol) {
    Matrix rows(sys.E.size(), std::vector<double>(7));
    for (std::size_t i = 0; i < sys.E.size(); ++i)
        rows[i].assign(sys.E[i].begin(), sys.E[i].end());
    RankResult out;
    out.sigmas = jacobi_svd(rows).singular_values;
    out.sigma7 = out.sigmas.size() >= 7 ? out.sigmas[6] : 0.0;
    out.pass = out.sigma7 > tol.sigma7_min;
    return out;
}

PropertyReport certify_all(const CandidateParams& params, const ToleranceTable& tol) {
    PropertyReport report;
    report.candidate = params;
    report.tolerances = tol;

    const Spectrum spec = compute_spectrum(params);
    report.properties = check_geometry(params, spec, tol);

    const std::vector<RootSensitivity> sens = root_sensitivities(params, spec);
    const VariationalSystem sys = build_system(params, spec, sens);

    const CertificateResult g = certify_G(sys, tol);
    report.certificate = g.c;
    report.null_space_dim = g.null_dim;
    report.properties.push_back(make_check('G', {g.min_c}, {tol.min_certificate},
                                           g.min_c - tol.min_certificate));

    const RankResult h = certify_H(sys, tol);
    report.singular_values = h.sigmas;
    report.properties.push_back(
        make_check('H', {h.sigma7}, {tol.sigma7_min}, h.sigma7 - tol.sigma7_min));

    report.overall = std::all_of(report.properties.begin(), report.properties.end(),
                                 [](const PropertyCheck& c) { return c.pass; });
    return report;
}

}  // namespace sendov
