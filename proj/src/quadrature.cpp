#include "sendov/quadrature.hpp"

#include <array>
#include <cmath>

namespace sendov {

namespace {

// QUADPACK (G7,K15) nodes and weights on [-1,1]; positive half, symmetric.
constexpr std::array<double, 8> kKronrodNodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
// Gauss-7 weights matched to Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct PanelResult {
    Cplx kronrod;
    double error;
};

PanelResult evaluate_panel(const std::function<Cplx(Cplx)>& f, Cplx center, Cplx half) {
    Cplx k15(0.0, 0.0);
    Cplx g7(0.0, 0.0);
    for (std::size_t i = 0; i < kKronrodNodes.size(); ++i) {
        const double x = kKronrodNodes[i];
        Cplx sum = f(center + half * x);
        if (x != 0.0) sum += f(center - half * x);
        k15 += kKronrodWeights[i] * sum;
        if (i % 2 == 1) g7 += kGaussWeights[i / 2] * sum;
    }
    const double h = std::abs(half);
    return {half * k15, h * std::abs(k15 - g7)};
}

Cplx integrate_recursive(const std::function<Cplx(Cplx)>& f, Cplx center, Cplx half,
                         double tol, int depth) {
    const PanelResult panel = evaluate_panel(f, center, half);
    if (panel.error <= tol || depth <= 0) return panel.kronrod;
    const Cplx quarter = half * 0.5;
    return integrate_recursive(f, center - quarter, quarter, tol / 2.0, depth - 1) +
           integrate_recursive(f, center + quarter, quarter, tol / 2.0, depth - 1);
}

}  // namespace

Cplx integrate_segment(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1,
                       double abs_tol, int max_depth) {
    require_finite(z0, "integration endpoint");
    require_finite(z1, "integration endpoint");
    if (z0 == z1) return Cplx(0.0, 0.0);
    const Cplx center = (z0 + z1) / 2.0;
    const Cplx half = (z1 - z0) / 2.0;
    return integrate_recursive(f, center, half, abs_tol, max_depth);
}

}  // namespace sendov
