#ifndef HPMS_GERM_HPP
#define HPMS_GERM_HPP

#include "hpms/curve.hpp"
#include "hpms/expr.hpp"
#include "hpms/series.hpp"

namespace hpms {

// Branch anchor at infinity: either a finite value w(inf) or pole data
// w ~ c * z^p with p >= 1.
struct GermSpec {
    bool has_pole = false;
    unsigned pole_order = 0;          // p >= 1 when has_pole
    GaussianRational anchor;          // leading coefficient c, or finite value

    static GermSpec regular(GaussianRational value) {
        GermSpec g;
        g.has_pole = false;
        g.anchor = std::move(value);
        return g;
    }
    static GermSpec pole(unsigned order, GaussianRational leading) {
        GermSpec g;
        g.has_pole = true;
        g.pole_order = order;
        g.anchor = std::move(leading);
        return g;
    }
};

// Normalized branch series v(t) with w = v(t) / t^p (p = 0 for a regular
// branch), satisfying the cleared equation Q(t, v(t)) = O(t^{order+1}).
// Newton iteration from the constant anchor, correct order doubling per step.
template <class C>
TruncatedSeries<C> newton_germ(const AlgebraicCurve& curve, const GermSpec& spec, long order);

// The branch itself as a Laurent series in t: w(t) = v(t) * t^{-p}.
template <class C>
TruncatedSeries<C> germ_w_series(const AlgebraicCurve& curve, const GermSpec& spec, long order);

// Substitute z = 1/t and the branch series for w into expr.  The result
// must be holomorphic at infinity (valuation >= 0); coefficients through
// t^order are returned.
template <class C>
TruncatedSeries<C> germ_of_expression(const AlgebraicCurve& curve, const GermSpec& spec,
                                      const ExprPtr& expr, long order);

extern template ExactSeries newton_germ<GaussianRational>(const AlgebraicCurve&,
                                                          const GermSpec&, long);
extern template NumericSeries newton_germ<BigComplex>(const AlgebraicCurve&, const GermSpec&,
                                                      long);
extern template ExactSeries germ_w_series<GaussianRational>(const AlgebraicCurve&,
                                                            const GermSpec&, long);
extern template NumericSeries germ_w_series<BigComplex>(const AlgebraicCurve&, const GermSpec&,
                                                        long);
extern template ExactSeries germ_of_expression<GaussianRational>(const AlgebraicCurve&,
                                                                 const GermSpec&,
                                                                 const ExprPtr&, long);
extern template NumericSeries germ_of_expression<BigComplex>(const AlgebraicCurve&,
                                                             const GermSpec&, const ExprPtr&,
                                                             long);

}  // namespace hpms

#endif
