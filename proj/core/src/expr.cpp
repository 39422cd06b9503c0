#include "hpms/expr.hpp"

#include <cctype>

#include "hpms/errors.hpp"

namespace hpms {

namespace {

ExprPtr node(Expr::Kind k, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos != s.size()) throw ParseError("trailing characters in expression", pos);
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                ExprPtr r = term();
                e = node(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, e, r);
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                ExprPtr r = factor();
                e = node(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, e, r);
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return node(Expr::Kind::Neg, factor());
        }
        ExprPtr base = atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw ParseError("expected exponent", pos);
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
            return make_pow(base, e);
        }
        return base;
    }

    ExprPtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            ExprPtr e = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return e;
        }
        if (c == 'z') {
            ++pos;
            return make_var_z();
        }
        if (c == 'w') {
            ++pos;
            return make_var_w();
        }
        if (c == 'i') {
            ++pos;
            return make_const(GaussianRational(Rational(0), Rational(1)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                    (s[pos] == '/' && pos + 1 < s.size() &&
                     std::isdigit(static_cast<unsigned char>(s[pos + 1])))))
                ++pos;
            GaussianRational v = parse_gaussian_rational(s.substr(start, pos - start));
            if (pos < s.size() && s[pos] == 'i') {
                ++pos;
                v = v * GaussianRational(Rational(0), Rational(1));
            }
            return make_const(std::move(v));
        }
        throw ParseError("unexpected character in expression", pos);
    }
};

}  // namespace

ExprPtr make_const(GaussianRational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Const;
    e->value = std::move(v);
    return e;
}
ExprPtr make_var_z() { return node(Expr::Kind::Z); }
ExprPtr make_var_w() { return node(Expr::Kind::W); }
ExprPtr make_pow(ExprPtr base, unsigned exp) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->exponent = exp;
    e->lhs = std::move(base);
    return e;
}

ExprPtr parse_expr(std::string_view s) {
    Parser p{s};
    return p.parse();
}

std::string to_string(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Const: return to_string(e->value);
        case Expr::Kind::Z: return "z";
        case Expr::Kind::W: return "w";
        case Expr::Kind::Add: return "(" + to_string(e->lhs) + "+" + to_string(e->rhs) + ")";
        case Expr::Kind::Sub: return "(" + to_string(e->lhs) + "-" + to_string(e->rhs) + ")";
        case Expr::Kind::Mul: return "(" + to_string(e->lhs) + "*" + to_string(e->rhs) + ")";
        case Expr::Kind::Div: return "(" + to_string(e->lhs) + "/" + to_string(e->rhs) + ")";
        case Expr::Kind::Neg: return "(-" + to_string(e->lhs) + ")";
        case Expr::Kind::Pow: return to_string(e->lhs) + "^" + std::to_string(e->exponent);
    }
    return "?";
}

BigComplex eval_at(const ExprPtr& e, const BigComplex& z, const BigComplex& w) {
    switch (e->kind) {
        case Expr::Kind::Const: return to_bigcomplex(e->value);
        case Expr::Kind::Z: return z;
        case Expr::Kind::W: return w;
        case Expr::Kind::Add: return eval_at(e->lhs, z, w) + eval_at(e->rhs, z, w);
        case Expr::Kind::Sub: return eval_at(e->lhs, z, w) - eval_at(e->rhs, z, w);
        case Expr::Kind::Mul: return eval_at(e->lhs, z, w) * eval_at(e->rhs, z, w);
        case Expr::Kind::Div: return eval_at(e->lhs, z, w) / eval_at(e->rhs, z, w);
        case Expr::Kind::Neg: return -eval_at(e->lhs, z, w);
        case Expr::Kind::Pow: {
            BigComplex b = eval_at(e->lhs, z, w), r(1);
            for (unsigned j = 0; j < e->exponent; ++j) r *= b;
            return r;
        }
    }
    throw Error("corrupt expression node");
}

template <class C>
TruncatedSeries<C> eval_series(const ExprPtr& e, const TruncatedSeries<C>& z,
                               const TruncatedSeries<C>& w, long cap) {
    using S = TruncatedSeries<C>;
    switch (e->kind) {
        case Expr::Kind::Const: {
            if constexpr (std::is_same_v<C, GaussianRational>)
                return S::monomial(e->value, 0);
            else
                return S::monomial(to_bigcomplex(e->value), 0);
        }
        case Expr::Kind::Z: return z;
        case Expr::Kind::W: return w;
        case Expr::Kind::Add:
            return eval_series(e->lhs, z, w, cap) + eval_series(e->rhs, z, w, cap);
        case Expr::Kind::Sub:
            return eval_series(e->lhs, z, w, cap) - eval_series(e->rhs, z, w, cap);
        case Expr::Kind::Mul:
            return eval_series(e->lhs, z, w, cap) * eval_series(e->rhs, z, w, cap);
        case Expr::Kind::Div: {
            S num = eval_series(e->lhs, z, w, cap);
            S den = eval_series(e->rhs, z, w, cap);
            if (den.is_zero())
                throw DenominatorVanishes("expression denominator is zero to truncation order");
            if (den.order() >= S::kExactOrder) den = den.truncated(den.val() + cap);
            return num * den.inverse();
        }
        case Expr::Kind::Neg: return -eval_series(e->lhs, z, w, cap);
        case Expr::Kind::Pow: return eval_series(e->lhs, z, w, cap).pow(e->exponent);
    }
    throw Error("corrupt expression node");
}

template ExactSeries eval_series<GaussianRational>(const ExprPtr&, const ExactSeries&,
                                                   const ExactSeries&, long);
template NumericSeries eval_series<BigComplex>(const ExprPtr&, const NumericSeries&,
                                               const NumericSeries&, long);

}  // namespace hpms
