#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sendov/constructor.hpp"
#include "sendov/reference.hpp"
#include "sendov/spectrum.hpp"

namespace {

const sendov::ReferenceSolution& reference(int n) {
    const sendov::ReferenceSolution* ref = sendov::reference_for(n);
    REQUIRE(ref != nullptr);
    return *ref;
}

}  // namespace

TEST_CASE("packing round trip and shape validation") {
    CHECK(sendov::system_dim(8) == 6);
    CHECK(sendov::system_dim(9) == 7);
    CHECK(sendov::unknown_names(9).size() == 7);

    const sendov::CandidateParams params = sendov::reference_params(reference(9));
    const std::vector<double> x = sendov::pack_params(params);
    const sendov::CandidateParams back = sendov::unpack_params(9, x);
    CHECK(back.beta == params.beta);
    CHECK(back.d == params.d);

    CHECK_THROWS_AS(sendov::unpack_params(8, x), std::invalid_argument);
}

TEST_CASE("residual components") {
    SUBCASE("circle equation by direct arithmetic") {
        // beta=1, a=0, b=-2, c=1: 1 - 2 + 1 - 1 = -1.
        const std::vector<double> x = {1.0, 0.0, -2.0, 1.0, 0.0, 0.0};
        const std::vector<double> res = sendov::residual(8, x);
        CHECK(res[0] == doctest::Approx(-1.0).epsilon(1e-15));
        REQUIRE(res.size() == 6);
    }
    SUBCASE("published solutions are fixed points") {
        for (int n : {8, 9, 26}) {
            const std::vector<double> x = sendov::reference_seed(reference(n), 10);
            const std::vector<double> res = sendov::residual(n, x);
            for (double component : res) CHECK(std::abs(component) < 1e-9);
        }
    }
    SUBCASE("P(-1) closes the even system") {
        const std::vector<double> x = reference(8).refined;
        const std::vector<double> res = sendov::residual(8, x);
        CHECK(std::abs(res.back()) < 1e-9);
    }
}

TEST_CASE("newton at the solution is an immediate fixed point") {
    const sendov::ReferenceSolution& ref = reference(8);
    const sendov::NewtonResult res = sendov::newton_solve(8, ref.refined);
    CHECK(res.converged);
    CHECK(res.iterations <= 2);
    for (std::size_t k = 0; k < ref.refined.size(); ++k)
        CHECK(std::abs(res.x[k] - ref.refined[k]) < 1e-12);
}

TEST_CASE("newton recovers the published digits from rounded seeds") {
    SUBCASE("n=8 from three decimals") {
        const sendov::ReferenceSolution& ref = reference(8);
        const sendov::NewtonResult res =
            sendov::newton_solve(8, sendov::reference_seed(ref, 3));
        REQUIRE(res.converged);
        const double published[4] = {ref.beta, ref.a, ref.b, ref.c};
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(res.x[static_cast<std::size_t>(k)] - published[k]) < 1e-8);
    }
    SUBCASE("n=13 from two decimals") {
        const sendov::ReferenceSolution& ref = reference(13);
        const sendov::NewtonResult res =
            sendov::newton_solve(13, sendov::reference_seed(ref, 2));
        REQUIRE(res.converged);
        const double published[4] = {ref.beta, ref.a, ref.b, ref.c};
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(res.x[static_cast<std::size_t>(k)] - published[k]) < 1e-8);
    }
}

TEST_CASE("converged solutions satisfy the circle equation and property D follows") {
    const sendov::NewtonResult res =
        sendov::newton_solve(12, sendov::reference_seed(reference(12), 3));
    REQUIRE(res.converged);
    const std::vector<double> components = sendov::residual(12, res.x);
    CHECK(std::abs(components[0]) < 1e-12);

    const sendov::CandidateParams params = sendov::unpack_params(12, res.x);
    const sendov::Spectrum spec = sendov::compute_spectrum(params);
    double dist_min = 1e300;
    double dist_max = 0.0;
    for (const sendov::Cplx& zeta : spec.critical_points) {
        const double dist = std::abs(zeta - sendov::Cplx(params.beta, 0.0));
        dist_min = std::min(dist_min, dist);
        dist_max = std::max(dist_max, dist);
    }
    CHECK(dist_max - dist_min < 1e-9);
}

TEST_CASE("finite-difference Jacobian consistency along random directions") {
    const int n = 9;
    std::vector<double> x = reference(n).refined;
    x[0] += 0.003;  // move off the solution so the residual is nontrivial
    x[2] -= 0.002;
    const int dim = sendov::system_dim(n);

    // Column-by-column central differences, as the solver builds it.
    std::vector<std::vector<double>> jac(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        const double h = 1e-7 * std::max(1.0, std::abs(x[static_cast<std::size_t>(j)]));
        std::vector<double> xp = x;
        std::vector<double> xm = x;
        xp[static_cast<std::size_t>(j)] += h;
        xm[static_cast<std::size_t>(j)] -= h;
        const auto rp = sendov::residual(n, xp);
        const auto rm = sendov::residual(n, xm);
        jac[static_cast<std::size_t>(j)].resize(rp.size());
        for (std::size_t i = 0; i < rp.size(); ++i)
            jac[static_cast<std::size_t>(j)][i] = (rp[i] - rm[i]) / (2.0 * h);
    }

    sendov::SplitMix64 rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> v(static_cast<std::size_t>(dim));
        double norm = 0.0;
        for (double& vi : v) {
            vi = 2.0 * rng.uniform() - 1.0;
            norm += vi * vi;
        }
        norm = std::sqrt(norm);
        for (double& vi : v) vi /= norm;

        const double h = 1e-6;
        std::vector<double> xp = x;
        std::vector<double> xm = x;
        for (int j = 0; j < dim; ++j) {
            xp[static_cast<std::size_t>(j)] += h * v[static_cast<std::size_t>(j)];
            xm[static_cast<std::size_t>(j)] -= h * v[static_cast<std::size_t>(j)];
        }
        const auto rp = sendov::residual(n, xp);
        const auto rm = sendov::residual(n, xm);

        double worst = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < rp.size(); ++i) {
            double jv = 0.0;
            for (int j = 0; j < dim; ++j)
                jv += jac[static_cast<std::size_t>(j)][i] * v[static_cast<std::size_t>(j)];
            const double fd = (rp[i] - rm[i]) / (2.0 * h);
            worst = std::max(worst, std::abs(jv - fd));
            scale = std::max(scale, std::abs(fd));
        }
        CHECK(worst <= 1e-5 * std::max(1.0, scale));
    }
}

TEST_CASE("construct returns exactly the published n=8 solution from jittered seeds") {
    const sendov::ReferenceSolution& ref = reference(8);
    const std::vector<double> base = sendov::reference_seed(ref, 3);

    std::vector<std::vector<double>> seeds = {base};
    sendov::SplitMix64 rng(515);
    for (int k = 0; k < 4; ++k) {
        std::vector<double> jittered = base;
        for (double& x : jittered) x += 1e-2 * (2.0 * rng.uniform() - 1.0);
        seeds.push_back(jittered);
    }

    std::vector<sendov::ConstructionRecord> log;
    const auto survivors = sendov::construct(8, seeds, &log);
    REQUIRE(survivors.size() == 1);
    CHECK(log.size() == seeds.size());
    const double published[4] = {ref.beta, ref.a, ref.b, ref.c};
    const std::vector<double> got = sendov::pack_params(survivors[0].params);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(got[static_cast<std::size_t>(k)] - published[k]) < 1e-8);
    CHECK(survivors[0].report.overall);
}

TEST_CASE("n=10 exploration between the n=9 and n=12 rows is recorded") {
    const sendov::CandidateParams p9 = sendov::reference_params(reference(9));
    const sendov::CandidateParams p12 = sendov::reference_params(reference(12));

    std::vector<double> seed = {(p9.beta + p12.beta) / 2.0, (p9.a + p12.a) / 2.0,
                                (p9.b + p12.b) / 2.0, (p9.c + p12.c) / 2.0,
                                (p9.d[0] + p12.d[0]) / 2.0, (p9.d[1] + p12.d[1]) / 2.0};
    std::vector<sendov::ConstructionRecord> log;
    const auto survivors = sendov::construct(10, {seed}, &log);

    // No survivor is asserted either way; the pipeline must simply finish
    // and anything returned must carry a full passing report.
    for (const auto& cand : survivors) CHECK(cand.report.overall);
    MESSAGE("n=10 exploratory run: ", survivors.size(), " survivor(s), converged = ",
            log[0].solve.converged);
}
