#include "hpms/numbers.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <sstream>

namespace hpms {

BigComplex to_bigcomplex(const GaussianRational& q) {
    return {BigFloat(q.re), BigFloat(q.im)};
}

BigFloat abs_value(const GaussianRational& q) {
    return to_bigcomplex(q).abs();
}

BigFloat half_precision_eps(unsigned prec_bits) {
    BigFloat e = ldexp(BigFloat(1), -static_cast<long>(prec_bits / 2));
    return e;
}

BigFloat working_half_eps() {
    long bits = static_cast<long>(BigFloat::default_precision() * 3.32);
    return ldexp(BigFloat(1), -bits / 2);
}

BigFloat working_quarter_eps() {
    long bits = static_cast<long>(BigFloat::default_precision() * 3.32);
    return ldexp(BigFloat(1), -bits / 4);
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
};

// unsigned rational: digits [ '/' digits ]
Rational parse_unsigned_rational(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) throw ParseError("expected digits", c.pos);
    boost::multiprecision::mpz_int num(std::string(c.s.substr(start, c.pos - start)));
    boost::multiprecision::mpz_int den(1);
    if (c.peek() == '/') {
        ++c.pos;
        std::size_t dstart = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        if (c.pos == dstart) throw ParseError("expected denominator digits", c.pos);
        den = boost::multiprecision::mpz_int(std::string(c.s.substr(dstart, c.pos - dstart)));
        if (den == 0) throw ParseError("zero denominator", dstart);
    }
    return Rational(num, den);
}

}  // namespace

GaussianRational parse_gaussian_rational(std::string_view s) {
    Cursor c{s};
    GaussianRational out;
    bool any = false;
    c.skip_ws();
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.pos;
            c.skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' between parts", c.pos);
        }
        Rational mag;
        bool imag = false;
        if (c.peek() == 'i') {
            ++c.pos;
            mag = 1;
            imag = true;
        } else {
            mag = parse_unsigned_rational(c);
            if (c.peek() == 'i') {
                ++c.pos;
                imag = true;
            }
        }
        if (sign < 0) mag = -mag;
        if (imag)
            out.im += mag;
        else
            out.re += mag;
        any = true;
        c.skip_ws();
    }
    if (!any) throw ParseError("empty number", 0);
    return out;
}

std::string to_string(const GaussianRational& q) {
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    if (q.im == 0) return rat(q.re);
    std::string imag = rat(q.im < 0 ? Rational(-q.im) : q.im) + "i";
    std::string sign = q.im < 0 ? "-" : "+";
    if (q.re == 0) return (q.im < 0 ? "-" : "") + imag;
    return rat(q.re) + sign + imag;
}

BigComplex parse_bigcomplex(std::string_view s) {
    // decimal strings "a+bi"; each part parsed by mpfr
    Cursor c{s};
    BigComplex out;
    bool any = false;
    c.skip_ws();
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.pos;
            c.skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' between parts", c.pos);
        }
        BigFloat mag;
        bool imag = false;
        if (c.peek() == 'i') {
            ++c.pos;
            mag = 1;
            imag = true;
        } else {
            std::size_t start = c.pos;
            while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) ||
                                 c.peek() == '.' || c.peek() == 'e' || c.peek() == 'E' ||
                                 ((c.peek() == '+' || c.peek() == '-') && c.pos > start &&
                                  (c.s[c.pos - 1] == 'e' || c.s[c.pos - 1] == 'E'))))
                ++c.pos;
            if (c.pos == start) throw ParseError("expected number", c.pos);
            mag = BigFloat(std::string(c.s.substr(start, c.pos - start)));
            if (c.peek() == 'i') {
                ++c.pos;
                imag = true;
            }
        }
        if (sign < 0) mag = -mag;
        if (imag)
            out.im += mag;
        else
            out.re += mag;
        any = true;
        c.skip_ws();
    }
    if (!any) throw ParseError("empty number", 0);
    return out;
}

std::string to_string(const BigComplex& z) {
    std::ostringstream os;
    os.precision(static_cast<int>(z.re.precision()));
    os << z.re.str();
    if (z.im >= 0)
        os << "+" << z.im.str();
    else
        os << "-" << BigFloat(-z.im).str();
    os << "i";
    return os.str();
}

}  // namespace hpms
