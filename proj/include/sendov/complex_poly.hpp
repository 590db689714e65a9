#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sendov {

using Cplx = std::complex<double>;

/// Dense univariate polynomial over complex doubles, coefficients stored in
/// ascending degree order. High-order coefficients with magnitude below
/// 1e-14 times the largest coefficient are dropped on construction, so the
/// leading coefficient of a nonzero polynomial is always nonzero. The zero
/// polynomial has an empty coefficient vector and degree -1.
class ComplexPoly {
  public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Cplx> coeffs);

    static ComplexPoly constant(Cplx value);
    static ComplexPoly from_real(const std::vector<double>& coeffs);
    /// Monic linear factor z - root.
    static ComplexPoly linear_factor(Cplx root);

    const std::vector<Cplx>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^k; zero beyond the stored range.
    Cplx coeff(std::size_t k) const;

    double max_coeff_mag() const;

    /// True iff every coefficient has |Im| <= 1e-12 * max coefficient magnitude.
    bool is_real() const;

    /// Horner evaluation.
    Cplx eval(Cplx z) const;

    ComplexPoly derivative() const;
    /// Term-wise antiderivative with constant term zero.
    ComplexPoly antiderivative() const;
    /// Scaled so the leading coefficient is one.
    ComplexPoly monic() const;

    ComplexPoly operator-() const;
    friend ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q);
    friend ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q);
    friend ComplexPoly operator*(const ComplexPoly& p, const ComplexPoly& q);
    friend ComplexPoly operator*(Cplx s, const ComplexPoly& p);

  private:
    std::vector<Cplx> coeffs_;
};

struct QuadraticDivision {
    ComplexPoly quotient;
    double r1 = 0.0;  // linear remainder coefficient
    double r0 = 0.0;  // constant remainder coefficient
};

/// Synthetic division of a real-flagged polynomial by z^2 + d z + 1:
/// p(z) = (z^2 + d z + 1) * quotient(z) + r1 * z + r0.
QuadraticDivision divmod_quadratic(const ComplexPoly& p, double d);

struct LinearDivision {
    ComplexPoly quotient;
    Cplx remainder;  // equals p(root)
};

/// Synthetic division by the monic linear factor z - root.
LinearDivision divmod_linear(const ComplexPoly& p, Cplx root);

/// Throws std::invalid_argument if z has a NaN or infinite component.
void require_finite(Cplx z, const char* what);
void require_finite(double x, const char* what);

}  // namespace sendov
