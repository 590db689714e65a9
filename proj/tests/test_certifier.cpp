#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sendov/certifier.hpp"
#include "sendov/json_io.hpp"
#include "sendov/reference.hpp"
#include "sendov/svd.hpp"

using sendov::Cplx;

namespace {

sendov::CandidateParams published_params(int n) {
    const sendov::ReferenceSolution* ref = sendov::reference_for(n);
    REQUIRE(ref != nullptr);
    return sendov::reference_params(*ref);
}

sendov::VariationalSystem system_for(const sendov::CandidateParams& params) {
    const sendov::Spectrum spec = sendov::compute_spectrum(params);
    return sendov::build_system(params, spec, sendov::root_sensitivities(params, spec));
}

}  // namespace

TEST_CASE("geometry checks pass on every reference candidate") {
    for (const sendov::ReferenceSolution& ref : sendov::reference_solutions()) {
        const sendov::CandidateParams params = sendov::reference_params(ref);
        const sendov::Spectrum spec = sendov::compute_spectrum(params);
        const auto checks = sendov::check_geometry(params, spec);
        REQUIRE(checks.size() == 6);
        for (const auto& check : checks) {
            INFO("n = ", ref.n, " property ", check.id, " margin ", check.margin);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("the expected polynomial z^8 - 1 fails property C when forced through") {
    std::vector<double> coeffs(9, 0.0);
    coeffs[0] = -1.0;
    coeffs[8] = 1.0;
    const sendov::Spectrum spec = sendov::spectrum_of_poly(
        sendov::ComplexPoly::from_real(coeffs), 1.0, std::vector<Cplx>(7, Cplx(0.0, 0.0)));

    sendov::CandidateParams fake;
    fake.n = 8;
    fake.beta = 1.0;
    fake.d = {0.0, 0.0};
    const auto checks = sendov::check_geometry(fake, spec);
    CHECK_FALSE(checks[2].pass);  // C: 1 is outside the open interval (0.7, 0.9)
    CHECK(checks[0].pass);        // A holds for the expected polynomial
}

TEST_CASE("inflating c breaks the equidistance property D") {
    sendov::CandidateParams params = published_params(8);
    params.c += 1e-3;
    const sendov::Spectrum spec = sendov::compute_spectrum(params);
    const auto checks = sendov::check_geometry(params, spec);
    CHECK_FALSE(checks[3].pass);
}

TEST_CASE("certificate search on a padded-identity toy system") {
    sendov::VariationalSystem sys;
    sys.E.assign(8, {});
    for (std::size_t k = 0; k < 7; ++k) sys.E[k][k] = 1.0;  // row 8 stays zero
    sys.f.assign(8, 0.0);
    sys.f[7] = 1.0;

    const sendov::CertificateResult res = sendov::certify_G(sys);
    CHECK(res.null_dim == 1);
    REQUIRE(res.c.size() == 8);
    CHECK(std::abs(res.c[7] - 1.0) < 1e-12);
    for (std::size_t k = 0; k < 7; ++k) CHECK(std::abs(res.c[k]) < 1e-12);
    CHECK(res.min_c == doctest::Approx(0.0));
    CHECK_FALSE(res.pass);  // zero entries sit below the 0.3 threshold
}

TEST_CASE("certificates exist with every weight above 0.3 (n=8 and n=9)") {
    SUBCASE("even n: one-dimensional null space") {
        const auto sys = system_for(published_params(8));
        const sendov::CertificateResult res = sendov::certify_G(sys);
        CHECK(res.null_dim == 1);
        CHECK(res.pass);
        CHECK(res.min_c > 0.3);
        REQUIRE(res.c.size() == 8);

        // c.E = 0 and c.f = 1 hold by construction.
        for (std::size_t col = 0; col < 7; ++col) {
            double dot = 0.0;
            for (std::size_t k = 0; k < res.c.size(); ++k) dot += res.c[k] * sys.E[k][col];
            CHECK(std::abs(dot) < 1e-9);
        }
        double cf = 0.0;
        for (std::size_t k = 0; k < res.c.size(); ++k) cf += res.c[k] * sys.f[k];
        CHECK(cf == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("odd n: two-dimensional null space resolved by the angle scan") {
        const auto sys = system_for(published_params(9));
        const sendov::CertificateResult res = sendov::certify_G(sys);
        CHECK(res.null_dim == 2);
        CHECK(res.pass);
        CHECK(res.min_c > 0.3);

        // Exhaustive fine angle grid as the oracle for the scan + refinement.
        sendov::Matrix rows(sys.E.size(), std::vector<double>(7));
        for (std::size_t i = 0; i < sys.E.size(); ++i)
            rows[i].assign(sys.E[i].begin(), sys.E[i].end());
        const sendov::SvdResult svd = sendov::jacobi_svd(sendov::transpose(rows));
        std::vector<std::vector<double>> basis;
        for (std::size_t k = 0; k < svd.singular_values.size(); ++k)
            if (svd.singular_values[k] < 1e-8) basis.push_back(svd.right_vectors[k]);
        REQUIRE(basis.size() == 2);

        double oracle_best = -1e300;
        for (double theta = 0.0; theta < std::numbers::pi; theta += 1e-4) {
            double denom = 0.0;
            for (std::size_t k = 0; k < sys.f.size(); ++k)
                denom += (std::cos(theta) * basis[0][k] + std::sin(theta) * basis[1][k]) *
                         sys.f[k];
            if (std::abs(denom) < 1e-12) continue;
            double worst = 1e300;
            for (std::size_t k = 0; k < sys.f.size(); ++k) {
                const double ck =
                    (std::cos(theta) * basis[0][k] + std::sin(theta) * basis[1][k]) / denom;
                worst = std::min(worst, ck);
            }
            oracle_best = std::max(oracle_best, worst);
        }
        CHECK(oracle_best > 0.3);
        CHECK(res.min_c >= oracle_best - 1e-6);
    }
}

TEST_CASE("rank check against the Gram-matrix eigenvalue oracle") {
    SUBCASE("reference candidate has sigma7 above threshold") {
        const auto sys = system_for(published_params(8));
        const sendov::RankResult res = sendov::certify_H(sys);
        CHECK(res.pass);
        CHECK(res.sigma7 > 0.04);
    }

    SUBCASE("a duplicated row drops the rank to 6") {
        sendov::SplitMix64 rng(9001);
        sendov::VariationalSystem sys;
        sys.E.assign(8, {});
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 7; ++j)
                sys.E[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    2.0 * rng.uniform() - 1.0;
        sys.E[6] = sys.E[0];
        sys.E[7] = sys.E[1];
        sys.f.assign(8, 0.0);
        const sendov::RankResult res = sendov::certify_H(sys);
        CHECK(res.sigma7 < 1e-12);
        CHECK_FALSE(res.pass);
    }

    SUBCASE("random matrices match the oracle to 1e-10") {
        sendov::SplitMix64 rng(77);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t rows = (trial % 2 == 0) ? 8 : 9;
            sendov::Matrix a(rows, std::vector<double>(7));
            for (auto& row : a)
                for (double& x : row) x = 2.0 * rng.uniform() - 1.0;
            const auto sigma = sendov::jacobi_svd(a).singular_values;
            const auto oracle = oracles::gram_singular_values(a);
            REQUIRE(sigma.size() == 7);
            for (std::size_t k = 0; k < 7; ++k)
                CHECK(std::abs(sigma[k] - oracle[k]) < 1e-10);
        }
    }

    SUBCASE("appending a duplicate row never decreases sigma7") {
        sendov::SplitMix64 rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            sendov::Matrix a(8, std::vector<double>(7));
            for (auto& row : a)
                for (double& x : row) x = 2.0 * rng.uniform() - 1.0;
            const double before = sendov::jacobi_svd(a).singular_values[6];
            sendov::Matrix bigger = a;
            bigger.push_back(a[static_cast<std::size_t>(trial % 8)]);
            const double after = sendov::jacobi_svd(bigger).singular_values[6];
            CHECK(after >= before - 1e-12);
        }
    }
}

TEST_CASE("H passing on an 8-row system forces a one-dimensional null space") {
    for (int n : {8, 12, 14, 20, 26}) {
        const auto sys = system_for(published_params(n));
        REQUIRE(sys.rows() == 8);
        if (sendov::certify_H(sys).pass) {
            CHECK(sendov::certify_G(sys).null_dim == 1);
        }
    }
}

TEST_CASE("certify_all passes every reference candidate") {
    for (const sendov::ReferenceSolution& ref : sendov::reference_solutions()) {
        const sendov::PropertyReport report =
            sendov::certify_all(sendov::reference_params(ref));
        INFO("n = ", ref.n);
        CHECK(report.overall);
        REQUIRE(report.properties.size() == 8);
        for (const auto& check : report.properties) {
            INFO("property ", check.id, " margin ", check.margin);
            CHECK(check.pass);
            CHECK(check.margin > 0.0);
        }
    }
}

TEST_CASE("a displaced beta fails C but the report stays complete") {
    sendov::CandidateParams params = published_params(8);
    params.beta = 0.5;
    const sendov::PropertyReport report = sendov::certify_all(params);
    CHECK_FALSE(report.overall);
    REQUIRE(report.properties.size() == 8);
    CHECK_FALSE(report.property('C').pass);
    for (const auto& check : report.properties) {
        REQUIRE_FALSE(check.measured.empty());
        for (double x : check.measured) CHECK(std::isfinite(x));
    }
}

TEST_CASE("an off-list degree fails certification") {
    // No n=7 solution is claimed; seed parameters between the n=8 and n=9
    // rows and record which properties break.
    const sendov::CandidateParams p8 = published_params(8);
    const sendov::CandidateParams p9 = published_params(9);
    sendov::CandidateParams params;
    params.n = 7;
    params.beta = (p8.beta + p9.beta) / 2.0;
    params.a = (p8.a + p9.a) / 2.0;
    params.b = (p8.b + p9.b) / 2.0;
    params.c = (p8.c + p9.c) / 2.0;
    params.d = p9.d;

    const sendov::PropertyReport report = sendov::certify_all(params);
    REQUIRE(report.properties.size() == 8);
    CHECK_FALSE(report.overall);
    std::string failing;
    for (const auto& check : report.properties)
        if (!check.pass) failing += check.id;
    MESSAGE("n=7 interpolant fails properties: ", failing);
}

TEST_CASE("reports are deterministic") {
    const sendov::CandidateParams params = published_params(13);
    const std::string first = sendov::report_to_json(sendov::certify_all(params));
    const std::string second = sendov::report_to_json(sendov::certify_all(params));
    CHECK(first == second);
}
