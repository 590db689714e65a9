#include "sendov/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sendov {

namespace {

// |p(z)| bound used for residual acceptance.
double residual_scale(const ComplexPoly& p, Cplx z) {
    return p.max_coeff_mag() * std::pow(std::max(1.0, std::abs(z)), p.degree());
}

// One Newton step; returns false when the derivative vanishes at z.
bool newton_step(const ComplexPoly& p, const ComplexPoly& dp, Cplx& z) {
    const Cplx pd = dp.eval(z);
    if (std::abs(pd) == 0.0) return false;
    z -= p.eval(z) / pd;
    return true;
}

}  // namespace

std::vector<Cplx> find_roots(const ComplexPoly& p, const RootFindOptions& opts) {
    const int deg = p.degree();
    if (deg < 1) throw std::invalid_argument("find_roots requires degree >= 1");

    ComplexPoly work = p.monic();

    // Exact roots at the origin: structural trailing zeros of the monic poly.
    std::vector<Cplx> roots;
    {
        std::size_t shift = 0;
        const auto& c = work.coeffs();
        while (shift < c.size() - 1 && std::abs(c[shift]) == 0.0) ++shift;
        if (shift > 0) {
            roots.assign(shift, Cplx(0.0, 0.0));
            std::vector<Cplx> rest(c.begin() + static_cast<long>(shift), c.end());
            work = ComplexPoly(std::move(rest));
        }
    }

    const int n = work.degree();
    if (n >= 1) {
        const ComplexPoly dwork = work.derivative();

        // Initial estimates on a circle between the Cauchy upper bound and the
        // matching lower bound, with an angular offset breaking conjugate symmetry.
        double maxc = 0.0;
        for (int k = 0; k < n; ++k) maxc = std::max(maxc, std::abs(work.coeff(k)));
        const double upper = 1.0 + maxc;
        double maxtail = 0.0;
        for (int k = 1; k <= n; ++k) maxtail = std::max(maxtail, std::abs(work.coeff(k)));
        const double c0 = std::abs(work.coeff(0));
        const double lower = c0 / (1.0 + maxtail);
        const double radius = std::sqrt(std::max(lower, 1e-300) * upper);

        std::vector<Cplx> z(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double theta =
                2.0 * std::numbers::pi * (k + 0.25) / n + 0.42;
            z[static_cast<std::size_t>(k)] = radius * Cplx(std::cos(theta), std::sin(theta));
        }

        // Aberth-Ehrlich sweeps.
        bool settled = false;
        for (int iter = 0; iter < opts.max_iterations && !settled; ++iter) {
            settled = true;
            for (int i = 0; i < n; ++i) {
                Cplx& zi = z[static_cast<std::size_t>(i)];
                const Cplx pv = work.eval(zi);
                if (std::abs(pv) == 0.0) continue;
                Cplx pd = dwork.eval(zi);
                if (std::abs(pd) == 0.0) {
                    // Nudge off a stationary point; rare and deterministic.
                    zi += Cplx(1e-8 * (1.0 + std::abs(zi)), 1e-8);
                    settled = false;
                    continue;
                }
                const Cplx newton = pv / pd;
                Cplx sum(0.0, 0.0);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const Cplx diff = zi - z[static_cast<std::size_t>(j)];
                    if (std::abs(diff) == 0.0) continue;
                    sum += 1.0 / diff;
                }
                const Cplx denom = 1.0 - newton * sum;
                const Cplx step = std::abs(denom) == 0.0 ? newton : newton / denom;
                zi -= step;
                if (std::abs(step) > 5e-15 * std::max(1.0, std::abs(zi))) settled = false;
            }
        }

        // Newton polish; keep the iterate with the smallest residual.
        for (Cplx& zi : z) {
            Cplx best = zi;
            double best_res = std::abs(work.eval(zi));
            Cplx cur = zi;
            for (int step = 0; step < 12 && best_res > 0.0; ++step) {
                if (!newton_step(work, dwork, cur)) break;
                const double res = std::abs(work.eval(cur));
                if (res < best_res) {
                    best = cur;
                    best_res = res;
                } else {
                    break;
                }
            }
            zi = best;
        }

        for (const Cplx& zi : z) {
            const double res = std::abs(work.eval(zi));
            const double bound = opts.residual_factor * residual_scale(work, zi);
            if (!(res <= bound)) {
                std::ostringstream msg;
                msg << "find_roots did not converge: residual " << res << " exceeds bound "
                    << bound << " at z = (" << zi.real() << ", " << zi.imag() << "), degree "
                    << deg;
                throw RootFindError(msg.str());
            }
            roots.push_back(zi);
        }
    }

    std::sort(roots.begin(), roots.end(), [](const Cplx& u, const Cplx& v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    return roots;
}

}  // namespace sendov
