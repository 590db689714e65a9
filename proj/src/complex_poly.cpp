#include "sendov/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sendov {

namespace {
constexpr double kTrimRel = 1e-14;   // leading-coefficient trim threshold
constexpr double kRealRel = 1e-12;   // imaginary-part tolerance for is_real
}  // namespace

void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

void require_finite(Cplx z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

ComplexPoly::ComplexPoly(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
    for (const Cplx& c : coeffs_) require_finite(c, "coefficient");
    double mag = 0.0;
    for (const Cplx& c : coeffs_) mag = std::max(mag, std::abs(c));
    const double tol = kTrimRel * mag;
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
}

ComplexPoly ComplexPoly::constant(Cplx value) {
    return ComplexPoly(std::vector<Cplx>{value});
}

ComplexPoly ComplexPoly::from_real(const std::vector<double>& coeffs) {
    std::vector<Cplx> c(coeffs.begin(), coeffs.end());
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::linear_factor(Cplx root) {
    return ComplexPoly({-root, Cplx(1.0, 0.0)});
}

Cplx ComplexPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Cplx(0.0, 0.0);
}

double ComplexPoly::max_coeff_mag() const {
    double mag = 0.0;
    for (const Cplx& c : coeffs_) mag = std::max(mag, std::abs(c));
    return mag;
}

bool ComplexPoly::is_real() const {
    const double tol = kRealRel * max_coeff_mag();
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Cplx& c) { return std::abs(c.imag()) <= tol; });
}

Cplx ComplexPoly::eval(Cplx z) const {
    require_finite(z, "evaluation point");
    Cplx acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() <= 1) return ComplexPoly();
    std::vector<Cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::antiderivative() const {
    std::vector<Cplx> a(coeffs_.size() + 1, Cplx(0.0, 0.0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
    return ComplexPoly(std::move(a));
}

ComplexPoly ComplexPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic() on the zero polynomial");
    const Cplx lead = coeffs_.back();
    std::vector<Cplx> c(coeffs_);
    for (Cplx& x : c) x /= lead;
    c.back() = Cplx(1.0, 0.0);
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator-() const {
    std::vector<Cplx> c(coeffs_);
    for (Cplx& x : c) x = -x;
    return ComplexPoly(std::move(c));
}

ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q) {
    std::vector<Cplx> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Cplx(0.0, 0.0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
    return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q) {
    std::vector<Cplx> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Cplx(0.0, 0.0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) - q.coeff(k);
    return ComplexPoly(std::move(c));
}

ComplexPoly operator*(const ComplexPoly& p, const ComplexPoly& q) {
    if (p.is_zero() || q.is_zero()) return ComplexPoly();
    std::vector<Cplx> c(p.coeffs_.size() + q.coeffs_.size() - 1, Cplx(0.0, 0.0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return ComplexPoly(std::move(c));
}

ComplexPoly operator*(Cplx s, const ComplexPoly& p) {
    std::vector<Cplx> c(p.coeffs_);
    for (Cplx& x : c) x *= s;
    return ComplexPoly(std::move(c));
}

QuadraticDivision divmod_quadratic(const ComplexPoly& p, double d) {
    require_finite(d, "divisor coefficient d");
    if (!p.is_real())
        throw std::invalid_argument("divmod_quadratic requires a real-flagged polynomial");

    const int deg = p.degree();
    QuadraticDivision out;
    if (deg < 2) {
        out.r1 = p.coeff(1).real();
        out.r0 = p.coeff(0).real();
        return out;
    }

    // p(z) = (z^2 + d z + 1) q(z) + r1 z + r0, matching coefficients of z^k
    // for k = deg..2 gives q_{k-2} = p_k - d q_{k-1} - q_k.
    std::vector<double> q(static_cast<std::size_t>(deg) - 1, 0.0);
    for (int k = deg; k >= 2; --k) {
        double v = p.coeff(static_cast<std::size_t>(k)).real();
        if (k - 1 <= deg - 2) v -= d * q[static_cast<std::size_t>(k - 1)];
        if (k <= deg - 2) v -= q[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(k - 2)] = v;
    }
    out.r1 = p.coeff(1).real() - d * q[0] - (deg >= 3 ? q[1] : 0.0);
    out.r0 = p.coeff(0).real() - q[0];
    out.quotient = ComplexPoly::from_real(q);
    return out;
}

LinearDivision divmod_linear(const ComplexPoly& p, Cplx root) {
    require_finite(root, "division point");
    const int deg = p.degree();
    LinearDivision out;
    if (deg < 1) {
        out.remainder = p.coeff(0);
        return out;
    }
    std::vector<Cplx> q(static_cast<std::size_t>(deg), Cplx(0.0, 0.0));
    Cplx acc = p.coeff(static_cast<std::size_t>(deg));
    for (int k = deg - 1; k >= 0; --k) {
        q[static_cast<std::size_t>(k)] = acc;
        acc = acc * root + p.coeff(static_cast<std::size_t>(k));
    }
    out.quotient = ComplexPoly(std::move(q));
    out.remainder = acc;
    return out;
}

}  // namespace sendov
