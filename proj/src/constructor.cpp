#include "sendov/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sendov/svd.hpp"

namespace sendov {

int system_dim(int n) {
    if (n < 5) throw std::invalid_argument("system_dim requires n >= 5");
    return (n % 2 == 0) ? 6 : 7;
}

std::vector<std::string> unknown_names(int n) {
    std::vector<std::string> names = {"beta", "a", "b", "c", "d1", "d2"};
    if (n % 2 != 0) names.push_back("d3");
    return names;
}

std::vector<double> pack_params(const CandidateParams& params) {
    std::vector<double> x = {params.beta, params.a, params.b, params.c};
    x.insert(x.end(), params.d.begin(), params.d.end());
    return x;
}

CandidateParams unpack_params(int n, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != system_dim(n))
        throw std::invalid_argument("parameter vector has the wrong length for n");
    CandidateParams params;
    params.n = n;
    params.beta = x[0];
    params.a = x[1];
    params.b = x[2];
    params.c = x[3];
    params.d.assign(x.begin() + 4, x.end());
    return params;
}

std::vector<double> residual(int n, const std::vector<double>& x) {
    const CandidateParams params = unpack_params(n, x);
    for (double v : x) require_finite(v, "parameter");

    std::vector<double> res;
    res.reserve(x.size());
    res.push_back(params.beta * params.beta + params.b * params.beta + params.c -
                  (params.beta - params.a) * (params.beta - params.a));

    const ComplexPoly p = build_candidate(params);
    for (double di : params.d) {
        const QuadraticDivision div = divmod_quadratic(p, di);
        res.push_back(div.r1);
        res.push_back(div.r0);
    }
    if (n % 2 == 0) res.push_back(p.eval(Cplx(-1.0, 0.0)).real());
    return res;
}

namespace {

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Least-squares solve via the Jacobi SVD; also reports the condition number.
std::vector<double> svd_solve(const Matrix& jac, const std::vector<double>& rhs,
                              double* condition) {
    const SvdResult svd = jacobi_svd(jac);
    const double smax = svd.singular_values.front();
    const double smin = svd.singular_values.back();
    *condition = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();

    const std::size_t dim = jac[0].size();
    std::vector<double> x(dim, 0.0);
    for (std::size_t k = 0; k < svd.singular_values.size(); ++k) {
        const double sigma = svd.singular_values[k];
        if (sigma <= 0.0) continue;
        // u_k = A v_k / sigma; coefficient = (u_k . rhs) / sigma.
        double coeff = 0.0;
        for (std::size_t i = 0; i < jac.size(); ++i) {
            double av = 0.0;
            for (std::size_t j = 0; j < dim; ++j) av += jac[i][j] * svd.right_vectors[k][j];
            coeff += av * rhs[i];
        }
        coeff /= sigma * sigma;
        for (std::size_t j = 0; j < dim; ++j) x[j] += coeff * svd.right_vectors[k][j];
    }
    return x;
}

}  // namespace

NewtonResult newton_solve(int n, std::vector<double> x0, const NewtonOptions& opts) {
    const int dim = system_dim(n);
    if (static_cast<int>(x0.size()) != dim)
        throw std::invalid_argument("seed vector has the wrong length for n");

    NewtonResult result;
    result.x = std::move(x0);
    std::vector<double> res = residual(n, result.x);
    result.residual_norm = sup_norm(res);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (result.residual_norm < opts.tolerance) {
            result.converged = true;
            result.iterations = iter;
            return result;
        }

        Matrix jac(res.size(), std::vector<double>(static_cast<std::size_t>(dim)));
        for (int j = 0; j < dim; ++j) {
            const double h = opts.jacobian_step * std::max(1.0, std::abs(result.x[j]));
            std::vector<double> xp = result.x;
            std::vector<double> xm = result.x;
            xp[static_cast<std::size_t>(j)] += h;
            xm[static_cast<std::size_t>(j)] -= h;
            const std::vector<double> rp = residual(n, xp);
            const std::vector<double> rm = residual(n, xm);
            for (std::size_t i = 0; i < res.size(); ++i)
                jac[i][static_cast<std::size_t>(j)] = (rp[i] - rm[i]) / (2.0 * h);
        }

        double condition = 0.0;
        std::vector<double> neg_res(res.size());
        for (std::size_t i = 0; i < res.size(); ++i) neg_res[i] = -res[i];
        const std::vector<double> step = svd_solve(jac, neg_res, &condition);
        if (condition > opts.max_condition) {
            result.iterations = iter;
            result.diagnostic = "Jacobian condition estimate " + std::to_string(condition) +
                                " exceeds " + std::to_string(opts.max_condition);
            return result;
        }

        // Backtrack until the residual norm decreases.
        double lambda = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < opts.max_backtracks; ++bt) {
            std::vector<double> trial = result.x;
            for (int j = 0; j < dim; ++j)
                trial[static_cast<std::size_t>(j)] += lambda * step[static_cast<std::size_t>(j)];
            const std::vector<double> trial_res = residual(n, trial);
            const double trial_norm = sup_norm(trial_res);
            if (trial_norm <= (1.0 - 1e-4 * lambda) * result.residual_norm) {
                result.x = std::move(trial);
                res = trial_res;
                result.residual_norm = trial_norm;
                accepted = true;
                break;
            }
            lambda /= 2.0;
        }
        if (!accepted) {
            result.iterations = iter;
            result.diagnostic = "line search failed to reduce the residual";
            return result;
        }
    }

    result.iterations = opts.max_iterations;
    result.converged = result.residual_norm < opts.tolerance;
    if (!result.converged) result.diagnostic = "iteration limit reached";
    return result;
}

std::vector<ConstructedCandidate> construct(int n,
                                            const std::vector<std::vector<double>>& seeds,
                                            std::vector<ConstructionRecord>* log) {
    std::vector<std::vector<double>> solutions;
    std::vector<ConstructedCandidate> survivors;

    for (const std::vector<double>& seed : seeds) {
        ConstructionRecord record;
        record.seed = seed;
        record.solve = newton_solve(n, seed);

        if (record.solve.converged) {
            const auto same = [&record](const std::vector<double>& other) {
                for (std::size_t k = 0; k < other.size(); ++k)
                    if (std::abs(other[k] - record.solve.x[k]) >= 1e-6) return false;
                return true;
            };
            record.duplicate =
                std::any_of(solutions.begin(), solutions.end(), same);
            if (!record.duplicate) {
                solutions.push_back(record.solve.x);
                CandidateParams params = unpack_params(n, record.solve.x);
                std::sort(params.d.begin(), params.d.end());
                try {
                    params.validate();
                    PropertyReport report = certify_all(params);
                    record.certified = report.overall;
                    if (report.overall)
                        survivors.push_back({std::move(params), std::move(report)});
                } catch (const std::exception& err) {
                    // e.g. a converged d_i outside (-2, 2), or a degenerate
                    // solution the root finder rejects; logged, not fatal.
                    record.note = err.what();
                }
            }
        }
        if (log) log->push_back(std::move(record));
    }

    std::sort(survivors.begin(), survivors.end(),
              [](const ConstructedCandidate& u, const ConstructedCandidate& v) {
                  return u.params.beta < v.params.beta;
              });
    return survivors;
}

std::vector<std::vector<double>> discovery_seeds(int n) {
    const int dim = system_dim(n);
    std::vector<std::vector<double>> seeds;
    for (double beta = 0.70; beta <= 0.90 + 1e-9; beta += 0.05) {
        for (double a = -0.25; a <= -0.05 + 1e-9; a += 0.05) {
            // Quadratic roots at distance beta - a from the origin, on the
            // critical circle: c = (beta-a)^2, then b from the circle equation.
            const double c = (beta - a) * (beta - a);
            const double b = ((beta - a) * (beta - a) - beta * beta - c) / beta;
            for (double d1 = -1.5; d1 <= 1.5 + 1e-9; d1 += 0.5) {
                for (double d2 = d1; d2 <= 1.5 + 1e-9; d2 += 0.5) {
                    if (dim == 6) {
                        seeds.push_back({beta, a, b, c, d1, d2});
                    } else {
                        for (double d3 = d2; d3 <= 1.5 + 1e-9; d3 += 0.5)
                            seeds.push_back({beta, a, b, c, d1, d2, d3});
                    }
                }
            }
        }
    }
    return seeds;
}

}  // namespace sendov
