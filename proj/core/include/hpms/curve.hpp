#ifndef HPMS_CURVE_HPP
#define HPMS_CURVE_HPP

#include <map>
#include <utility>
#include <vector>

#include "hpms/numbers.hpp"

namespace hpms {

// Univariate polynomials with Gaussian-rational coefficients, ascending
// degree order.  The zero polynomial is the empty vector.
using QPoly = std::vector<GaussianRational>;

namespace qpoly {
QPoly trim(QPoly p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const GaussianRational& c);
GaussianRational eval(const QPoly& p, const GaussianRational& x);
BigComplex eval(const QPoly& p, const BigComplex& x);
QPoly derivative(const QPoly& p);
bool is_zero(const QPoly& p);
long degree(const QPoly& p);  // -1 for zero
// Interpolating polynomial through (x_i, y_i), x_i pairwise distinct.
QPoly interpolate(const std::vector<GaussianRational>& xs,
                  const std::vector<GaussianRational>& ys);
}  // namespace qpoly

// Exact determinant by Gaussian elimination over the Gaussian rationals.
GaussianRational determinant(std::vector<std::vector<GaussianRational>> a);

// Plane curve P(z, w) = 0 with deg_w P = m + 1, exact coefficients.
class AlgebraicCurve {
  public:
    struct Term {
        unsigned za, wb;
        GaussianRational c;
    };

    AlgebraicCurve(unsigned m, const std::vector<Term>& terms);

    unsigned m() const { return m_; }
    unsigned degw() const { return m_ + 1; }
    // Coefficient of w^b as a polynomial in z (b = 0 .. m+1).
    const QPoly& wcoeff(unsigned b) const { return wcoeffs_[b]; }
    const QPoly& leading_wcoeff() const { return wcoeffs_[m_ + 1]; }
    long max_zdeg() const;

    BigComplex eval(const BigComplex& z, const BigComplex& w) const;
    BigComplex dw(const BigComplex& z, const BigComplex& w) const;
    BigComplex dz(const BigComplex& z, const BigComplex& w) const;

    // Coefficients of P(z, .) as a degree-(m+1) polynomial in w.
    std::vector<BigComplex> fiber_poly(const BigComplex& z) const;

    // Res_w(P, dP/dw) as an exact polynomial in z (evaluation-interpolation
    // over rational sample points; the Sylvester determinant is exact).
    QPoly resultant_z() const;

    // Square-free as a polynomial in w over the rational-function field.
    bool squarefree_in_w() const;

    // Only w^{m+1} and w^0 terms present (the pure-radical shape).
    bool pure_radical_form() const;

    // Largest |coefficient| at working precision, for residual scaling.
    BigFloat coefficient_scale() const;

  private:
    unsigned m_;
    std::vector<QPoly> wcoeffs_;  // size m+2
};

}  // namespace hpms

#endif
