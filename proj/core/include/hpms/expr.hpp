#ifndef HPMS_EXPR_HPP
#define HPMS_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "hpms/numbers.hpp"
#include "hpms/series.hpp"

namespace hpms {

// Rational expression in (z, w) with Gaussian-rational constants.
struct Expr {
    enum class Kind { Const, Z, W, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Const;
    GaussianRational value;  // Const
    unsigned exponent = 0;   // Pow
    std::shared_ptr<const Expr> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view s);
std::string to_string(const ExprPtr& e);

ExprPtr make_const(GaussianRational v);
ExprPtr make_var_z();
ExprPtr make_var_w();
ExprPtr make_pow(ExprPtr base, unsigned e);

// Pointwise evaluation.
BigComplex eval_at(const ExprPtr& e, const BigComplex& z, const BigComplex& w);

// Evaluation over truncated series; intermediate exact-order operands are
// truncated to `cap` before inversion.  Throws DenominatorVanishes when a
// denominator is zero to its truncation order.
template <class C>
TruncatedSeries<C> eval_series(const ExprPtr& e, const TruncatedSeries<C>& z,
                               const TruncatedSeries<C>& w, long cap);

extern template ExactSeries eval_series<GaussianRational>(const ExprPtr&, const ExactSeries&,
                                                          const ExactSeries&, long);
extern template NumericSeries eval_series<BigComplex>(const ExprPtr&, const NumericSeries&,
                                                      const NumericSeries&, long);

}  // namespace hpms

#endif
