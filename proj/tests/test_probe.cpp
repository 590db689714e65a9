#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sendov/probe.hpp"
#include "sendov/reference.hpp"

using sendov::Cplx;

namespace {

sendov::CandidateParams published_params(int n) {
    const sendov::ReferenceSolution* ref = sendov::reference_for(n);
    REQUIRE(ref != nullptr);
    return sendov::reference_params(*ref);
}

sendov::Perturbation gaussian_perturbation(sendov::SplitMix64& rng, std::size_t n_zeta,
                                           double scale, bool with_beta = true) {
    sendov::Perturbation pert;
    pert.dbeta = with_beta ? scale * rng.gaussian() : 0.0;
    pert.dzeta.resize(n_zeta);
    for (Cplx& dz : pert.dzeta) dz = Cplx(scale * rng.gaussian(), scale * rng.gaussian());
    return pert;
}

}  // namespace

TEST_CASE("perturbation norm matches its defining formula") {
    sendov::SplitMix64 rng(64);
    for (int trial = 0; trial < 20; ++trial) {
        const sendov::Perturbation pert = gaussian_perturbation(rng, 7, 0.3);
        double expected = pert.dbeta * pert.dbeta;
        for (const Cplx& dz : pert.dzeta) expected += std::norm(dz);
        expected = std::sqrt(expected);
        CHECK(std::abs(pert.norm() - expected) <= 1e-15 * std::max(1.0, expected));
    }
}

TEST_CASE("zero perturbation reproduces the polynomial") {
    const sendov::CandidateParams params = published_params(8);
    const sendov::Spectrum base = sendov::compute_spectrum(params);
    sendov::Perturbation zero;
    zero.dzeta.assign(base.critical_points.size(), Cplx(0.0, 0.0));

    const sendov::PerturbedResult moved = sendov::apply_perturbation(params, base, zero);
    const sendov::ComplexPoly original = sendov::build_candidate(params);
    const double scale = original.max_coeff_mag();
    for (int k = 0; k <= original.degree(); ++k)
        CHECK(std::abs(moved.poly.coeff(static_cast<std::size_t>(k)) -
                       original.coeff(static_cast<std::size_t>(k))) <= 1e-14 * scale);
    CHECK(std::abs(moved.spec.dP - base.dP) < 1e-13);

    const sendov::ProbeSample sample = sendov::classify(params, base, zero);
    CHECK(sample.admissible);
    CHECK_FALSE(sample.improvement);  // critical points sit on the circle, not outside
}

TEST_CASE("the existence witness is an improvement for every reference candidate") {
    for (const sendov::ReferenceSolution& ref : sendov::reference_solutions()) {
        const sendov::CandidateParams params = sendov::reference_params(ref);
        const sendov::Spectrum base = sendov::compute_spectrum(params);
        const sendov::Perturbation witness = sendov::witness_perturbation(base);
        const sendov::ProbeSample sample = sendov::classify(params, base, witness);
        INFO("n = ", ref.n);
        CHECK(sample.admissible);
        CHECK(sample.improvement);
        CHECK(witness.norm() > 0.0);
    }
}

TEST_CASE("small random perturbations are never improvements") {
    const sendov::CandidateParams params = published_params(8);
    const sendov::Spectrum base = sendov::compute_spectrum(params);
    sendov::SplitMix64 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const sendov::Perturbation pert =
            gaussian_perturbation(rng, base.critical_points.size(), 1e-3);
        const sendov::ProbeSample sample = sendov::classify(params, base, pert);
        CHECK_FALSE(sample.improvement);
    }
}

TEST_CASE("improvement implies admissible, including at coarse scales") {
    const sendov::CandidateParams params = published_params(9);
    const sendov::Spectrum base = sendov::compute_spectrum(params);
    sendov::SplitMix64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const sendov::Perturbation pert =
            gaussian_perturbation(rng, base.critical_points.size(), 0.3);
        const sendov::ProbeSample sample = sendov::classify(params, base, pert);
        if (sample.improvement) CHECK(sample.admissible);
    }
}

TEST_CASE("minimal-cost pairing is stable at small scales") {
    for (int n : {8, 9}) {
        const sendov::CandidateParams params = published_params(n);
        const sendov::Spectrum base = sendov::compute_spectrum(params);
        sendov::SplitMix64 rng(n);
        const double scale = 1e-4;
        for (int trial = 0; trial < 20; ++trial) {
            const sendov::Perturbation pert =
                gaussian_perturbation(rng, base.critical_points.size(), scale);
            const sendov::PerturbedResult moved =
                sendov::apply_perturbation(params, base, pert);
            for (const Cplx& dz : moved.root_displacements)
                CHECK(std::abs(dz) <= 10.0 * scale);
        }
    }
}

TEST_CASE("shrinking an admissible perturbation keeps it admissible") {
    const sendov::CandidateParams params = published_params(8);
    const sendov::Spectrum base = sendov::compute_spectrum(params);
    sendov::SplitMix64 rng(99);
    int admissible_seen = 0;
    for (int trial = 0; trial < 30; ++trial) {
        sendov::Perturbation pert =
            gaussian_perturbation(rng, base.critical_points.size(), 1e-6,
                                  /*with_beta=*/false);
        const sendov::ProbeSample sample = sendov::classify(params, base, pert);
        if (!sample.admissible) continue;
        ++admissible_seen;
        for (double shrink : {0.5, 0.25}) {
            sendov::Perturbation smaller = pert;
            for (Cplx& dz : smaller.dzeta) dz *= shrink;
            CHECK(sendov::classify(params, base, smaller).admissible);
        }
    }
    CHECK(admissible_seen > 0);
}

TEST_CASE("neighborhood scan is deterministic and sane at scale zero") {
    const sendov::CandidateParams params = published_params(8);

    const sendov::ScanStats zero = sendov::neighborhood_scan(params, 50, 0.0, 42);
    CHECK(zero.admissible == 50);
    CHECK(zero.improvements == 0);
    CHECK(std::abs(zero.margin) <= 1e-12);

    const sendov::ScanStats first = sendov::neighborhood_scan(params, 300, 1e-3, 7);
    const sendov::ScanStats second = sendov::neighborhood_scan(params, 300, 1e-3, 7);
    CHECK(first.admissible == second.admissible);
    CHECK(first.improvements == second.improvements);
    CHECK(first.max_dQ == second.max_dQ);
    CHECK(first.margin == second.margin);
    CHECK(first.improvements == 0);
    CHECK(first.max_dQ <= first.dP + 1e-10);
}

TEST_CASE("perturbation size must match the critical point count") {
    const sendov::CandidateParams params = published_params(8);
    const sendov::Spectrum base = sendov::compute_spectrum(params);
    sendov::Perturbation bad;
    bad.dzeta.assign(3, Cplx(0.0, 0.0));
    CHECK_THROWS_AS(sendov::apply_perturbation(params, base, bad), std::invalid_argument);
}
