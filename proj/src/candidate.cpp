#include "sendov/candidate.hpp"

#include <cmath>
#include <stdexcept>

namespace sendov {

void CandidateParams::validate() const {
    if (n < 5) throw std::invalid_argument("candidate degree n must be >= 5");
    require_finite(beta, "beta");
    require_finite(a, "a");
    require_finite(b, "b");
    require_finite(c, "c");
    const std::size_t want = (n % 2 == 0) ? 2 : 3;
    if (d.size() != want)
        throw std::invalid_argument("candidate d must have " + std::to_string(want) +
                                    " entries for n = " + std::to_string(n));
    for (double di : d) {
        require_finite(di, "d_i");
        if (!(std::abs(di) < 2.0))
            throw std::invalid_argument("each |d_i| must be < 2 for a unit-circle pair");
    }
}

ComplexPoly expand_pprime(const CandidateParams& params) {
    if (params.n < 5) throw std::invalid_argument("expand_pprime requires n >= 5");
    require_finite(params.beta, "beta");
    require_finite(params.a, "a");
    require_finite(params.b, "b");
    require_finite(params.c, "c");

    ComplexPoly acc = ComplexPoly::from_real({params.c, params.b, 1.0});
    const ComplexPoly factor = ComplexPoly::from_real({-params.a, 1.0});
    for (int k = 0; k < params.n - 3; ++k) acc = acc * factor;
    return acc;
}

ComplexPoly build_candidate(const CandidateParams& params) {
    const ComplexPoly q = expand_pprime(params).antiderivative();
    return q - ComplexPoly::constant(q.eval(Cplx(params.beta, 0.0)));
}

}  // namespace sendov
