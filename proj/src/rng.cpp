#include "sendov/rng.hpp"

#include <cmath>
#include <numbers>

namespace sendov {

double SplitMix64::gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 mixer(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return mixer.next();
}

}  // namespace sendov
