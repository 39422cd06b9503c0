#ifndef HPMS_NUMBERS_HPP
#define HPMS_NUMBERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hpms {

using Rational = boost::multiprecision::mpq_rational;
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Thrown for malformed inputs (number strings, curve files, expressions).
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"),
          offset(off) {}
};

inline unsigned bits_to_digits10(unsigned bits) {
    // mpfr precision is set in decimal digits through boost; round up.
    return static_cast<unsigned>(bits * 0.30103) + 3;
}

// RAII for the thread-local working precision, in bits.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned prec_bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(prec_bits));
    }
    ~ScopedPrecision() { BigFloat::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

// Exact complex number with rational real/imaginary parts.  All arithmetic
// is exact; gmp keeps denominators positive and reduced.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i)
        : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a,
                                      const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

// Complex number over mpfr at the thread's working precision.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(int r) : re(r), im(0) {}
    BigComplex(long r) : re(r), im(0) {}
    BigComplex(double r) : re(r), im(0) {}
    BigComplex(BigFloat r) : re(std::move(r)), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    unsigned precision() const { return re.precision(); }
    bool is_zero() const { return re == 0 && im == 0; }

    BigComplex conj() const { return {re, -im}; }
    BigFloat norm() const { return re * re + im * im; }
    BigFloat abs() const { return hypot(re, im); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.norm();
        if (n == 0) throw std::domain_error("BigComplex: division by zero");
        BigComplex p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) {
        return !(a == b);
    }
};

BigComplex to_bigcomplex(const GaussianRational& q);
BigFloat abs_value(const GaussianRational& q);  // |q| at working precision
inline BigFloat abs_value(const BigComplex& z) { return z.abs(); }

// "p/q+r/si" with optional parts; accepts e.g. "3", "-1/2", "i", "2-3i",
// "1/2-3/4i".
GaussianRational parse_gaussian_rational(std::string_view s);
std::string to_string(const GaussianRational& q);

BigComplex parse_bigcomplex(std::string_view s);
std::string to_string(const BigComplex& z);

// 2^{-bits/2}: the artifact-wide "negligible" threshold at a given precision.
BigFloat half_precision_eps(unsigned prec_bits);

// Same threshold derived from the thread's current working precision.
BigFloat working_half_eps();
// 2^{-bits/4} variant (cluster merging, backend agreement checks).
BigFloat working_quarter_eps();

}  // namespace hpms

#endif
