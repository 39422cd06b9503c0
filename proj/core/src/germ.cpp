#include "hpms/germ.hpp"

#include <algorithm>

#include "hpms/errors.hpp"

namespace hpms {

namespace {

template <class C>
C from_rational(const GaussianRational& q) {
    if constexpr (std::is_same_v<C, GaussianRational>)
        return q;
    else
        return to_bigcomplex(q);
}

// Coefficients of Q(t, v) = sum_b q_b(t) v^b obtained by substituting
// z = 1/t, w = v/t^p into P and clearing t^{-A}, A = max(a + p b).
template <class C>
std::vector<TruncatedSeries<C>> cleared_equation(const AlgebraicCurve& curve, unsigned p) {
    using S = TruncatedSeries<C>;
    long A = 0;
    for (unsigned b = 0; b <= curve.degw(); ++b) {
        const QPoly& cz = curve.wcoeff(b);
        for (std::size_t a = 0; a < cz.size(); ++a)
            if (!cz[a].is_zero())
                A = std::max(A, static_cast<long>(a) + static_cast<long>(p) * b);
    }
    std::vector<S> q(curve.degw() + 1, S::zero());
    for (unsigned b = 0; b <= curve.degw(); ++b) {
        const QPoly& cz = curve.wcoeff(b);
        S acc = S::zero();
        for (std::size_t a = 0; a < cz.size(); ++a) {
            if (cz[a].is_zero()) continue;
            long e = A - static_cast<long>(a) - static_cast<long>(p) * b;
            acc = acc + S::monomial(from_rational<C>(cz[a]), e);
        }
        q[b] = acc;
    }
    return q;
}

template <class C>
TruncatedSeries<C> horner(const std::vector<TruncatedSeries<C>>& coeffs,
                          const TruncatedSeries<C>& v, long cap) {
    TruncatedSeries<C> acc = TruncatedSeries<C>::zero();
    for (std::size_t b = coeffs.size(); b-- > 0;)
        acc = (acc * v + coeffs[b]).truncated(cap);
    return acc;
}

}  // namespace

template <class C>
TruncatedSeries<C> newton_germ(const AlgebraicCurve& curve, const GermSpec& spec, long order) {
    using S = TruncatedSeries<C>;
    unsigned p = spec.has_pole ? spec.pole_order : 0;
    auto q = cleared_equation<C>(curve, p);
    std::vector<S> qv(q.size() - 1);
    for (std::size_t b = 1; b < q.size(); ++b)
        qv[b - 1] = q[b].scaled(from_rational<C>(GaussianRational(static_cast<long>(b))));

    C v0 = from_rational<C>(spec.anchor);
    // anchor checks at t = 0
    C q0(0), qv0(0);
    for (std::size_t b = q.size(); b-- > 0;) q0 = q0 * v0 + q[b].coeff(0);
    for (std::size_t b = qv.size(); b-- > 0;) qv0 = qv0 * v0 + qv[b].coeff(0);
    if constexpr (std::is_same_v<C, GaussianRational>) {
        if (!q0.is_zero()) throw AnchorMismatch("Q(0, v0) != 0 for the given anchor");
        if (qv0.is_zero())
            throw NotSimpleBranch("dQ/dv vanishes at the anchor (Puiseux branch)");
    } else {
        BigFloat tol = working_half_eps() * curve.coefficient_scale();
        if (q0.abs() > tol) throw AnchorMismatch("Q(0, v0) != 0 for the given anchor");
        if (qv0.abs() <= tol)
            throw NotSimpleBranch("dQ/dv vanishes at the anchor (Puiseux branch)");
    }

    S v = S::monomial(v0, 0, 0);  // correct through t^0
    long known = 0;
    while (known < order) {
        long next = std::min(order, known == 0 ? 1 : 2 * known);
        long cap = next;
        S vv = S::from_coeffs(0, [&] {
            std::vector<C> cs;
            for (long e = 0; e <= std::min(v.top_exponent(), cap); ++e) cs.push_back(v.coeff(e));
            return cs;
        }(), cap);
        S f = horner(q, vv, cap);
        S df = horner(qv, vv, cap);
        S corr = f * df.inverse();
        v = (vv - corr).truncated(cap);
        known = next;
    }
    // restore full order tag (coefficients through t^order are now correct)
    std::vector<C> cs;
    for (long e = 0; e <= std::min(v.top_exponent(), order); ++e) cs.push_back(v.coeff(e));
    return S::from_coeffs(0, std::move(cs), order);
}

template <class C>
TruncatedSeries<C> germ_w_series(const AlgebraicCurve& curve, const GermSpec& spec, long order) {
    unsigned p = spec.has_pole ? spec.pole_order : 0;
    auto v = newton_germ<C>(curve, spec, order + static_cast<long>(p));
    return v.shifted(-static_cast<long>(p));
}

template <class C>
TruncatedSeries<C> germ_of_expression(const AlgebraicCurve& curve, const GermSpec& spec,
                                      const ExprPtr& expr, long order) {
    using S = TruncatedSeries<C>;
    long slack = 8 + 4 * static_cast<long>(spec.has_pole ? spec.pole_order : 0);
    for (int attempt = 0; attempt < 5; ++attempt) {
        long cap = order + slack;
        S z = S::monomial(C(1), -1);
        S w = germ_w_series<C>(curve, spec, cap);
        S r = eval_series(expr, z, w, cap);
        if (r.order() >= order) {
            if (!r.is_zero() && r.val() < 0)
                throw PoleAtInfinity("expression germ has a pole at infinity");
            return r.truncated(order);
        }
        slack *= 2;
    }
    throw Error("germ_of_expression: could not reach requested truncation order");
}

template ExactSeries newton_germ<GaussianRational>(const AlgebraicCurve&, const GermSpec&, long);
template NumericSeries newton_germ<BigComplex>(const AlgebraicCurve&, const GermSpec&, long);
template ExactSeries germ_w_series<GaussianRational>(const AlgebraicCurve&, const GermSpec&, long);
template NumericSeries germ_w_series<BigComplex>(const AlgebraicCurve&, const GermSpec&, long);
template ExactSeries germ_of_expression<GaussianRational>(const AlgebraicCurve&, const GermSpec&,
                                                          const ExprPtr&, long);
template NumericSeries germ_of_expression<BigComplex>(const AlgebraicCurve&, const GermSpec&,
                                                      const ExprPtr&, long);

}  // namespace hpms
