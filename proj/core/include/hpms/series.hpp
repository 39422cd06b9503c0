#ifndef HPMS_SERIES_HPP
#define HPMS_SERIES_HPP

#include <algorithm>
#include <cassert>
#include <vector>

#include "hpms/errors.hpp"
#include "hpms/numbers.hpp"

namespace hpms {

// Truncated Laurent series in the local coordinate t = 1/z.  Coefficients
// are stored for exponents val .. val+size-1; exponents above order() are
// unknown (not zero).  The leading stored coefficient is nonzero unless the
// series is zero to its truncation order.  Arithmetic tracks the truncation
// order pessimistically.
template <class C>
class TruncatedSeries {
  public:
    // Polynomials and other exactly-known inputs carry this sentinel order.
    static constexpr long kExactOrder = 1L << 40;

    TruncatedSeries() : val_(0), order_(kExactOrder) {}  // zero series

    static TruncatedSeries zero(long order = kExactOrder) {
        TruncatedSeries s;
        s.order_ = order;
        return s;
    }
    static TruncatedSeries monomial(C c, long exponent, long order = kExactOrder) {
        TruncatedSeries s;
        s.val_ = exponent;
        s.order_ = order;
        s.coeffs_.push_back(std::move(c));
        s.normalize();
        return s;
    }
    static TruncatedSeries one() { return monomial(C(1), 0); }
    static TruncatedSeries from_coeffs(long valuation, std::vector<C> coeffs, long order) {
        TruncatedSeries s;
        s.val_ = valuation;
        s.coeffs_ = std::move(coeffs);
        s.order_ = order;
        s.normalize();
        return s;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Valuation of a zero series is taken as order+1 (first unknown slot).
    long val() const { return coeffs_.empty() ? order_ + 1 : val_; }
    long order() const { return order_; }
    long top_exponent() const { return val_ + static_cast<long>(coeffs_.size()) - 1; }

    const C& leading() const {
        if (coeffs_.empty()) throw ZeroSeries("series is zero to truncation order");
        return coeffs_.front();
    }

    C coeff(long e) const {
        if (coeffs_.empty() || e < val_ || e > top_exponent()) return C(0);
        return coeffs_[static_cast<std::size_t>(e - val_)];
    }

    TruncatedSeries truncated(long order) const {
        TruncatedSeries s = *this;
        s.order_ = std::min(s.order_, order);
        s.clip();
        s.normalize();
        return s;
    }

    TruncatedSeries shifted(long e) const {  // multiply by t^e
        TruncatedSeries s = *this;
        s.val_ += e;
        if (s.order_ < kExactOrder) s.order_ += e;
        return s;
    }

    TruncatedSeries scaled(const C& c) const {
        TruncatedSeries s = *this;
        if (c == C(0)) {
            s.coeffs_.clear();
            s.val_ = 0;
            return s;
        }
        for (auto& a : s.coeffs_) a = a * c;
        s.normalize();
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s;
        s.order_ = std::min(a.order_, b.order_);
        if (a.coeffs_.empty() && b.coeffs_.empty()) return s;
        long lo = std::min(a.coeffs_.empty() ? b.val_ : a.val_,
                           b.coeffs_.empty() ? a.val_ : b.val_);
        long hi = std::min(std::max(a.top_or(lo), b.top_or(lo)), s.order_);
        if (hi < lo) return s;
        s.val_ = lo;
        s.coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), C(0));
        for (long e = lo; e <= hi; ++e)
            s.coeffs_[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
        s.normalize();
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + b.scaled(C(-1));
    }
    TruncatedSeries operator-() const { return scaled(C(-1)); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s;
        s.order_ = std::min(std::min(cap_add(a.order_, b.val()), cap_add(b.order_, a.val())),
                            kExactOrder);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return s;
        long lo = a.val_ + b.val_;
        long hi = std::min(a.top_exponent() + b.top_exponent(), s.order_);
        if (hi < lo) return s;
        s.val_ = lo;
        s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            long ea = a.val_ + static_cast<long>(i);
            if (ea + b.val_ > hi) break;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                long e = ea + b.val_ + static_cast<long>(j);
                if (e > hi) break;
                s.coeffs_[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        s.normalize();
        return s;
    }

    // Multiplicative inverse: a * inverse(a) = 1 + O(t^{order - val + 1})
    // relative to the result valuation -val.  Exactly-known inputs with more
    // than one term must be truncated to a finite order first.
    TruncatedSeries inverse() const {
        if (coeffs_.empty()) throw ZeroSeries("cannot invert zero series");
        if (coeffs_.size() == 1)
            return monomial(C(1) / coeffs_.front(), -val_, order_ == kExactOrder
                                ? kExactOrder
                                : order_ - 2 * val_);
        if (order_ >= kExactOrder)
            throw Error("inverse of exact-order series: truncate first");
        std::vector<C> b(static_cast<std::size_t>(order_ - val_ + 1));
        C a0inv = C(1) / coeffs_.front();
        b[0] = a0inv;
        for (std::size_t n = 1; n < b.size(); ++n) {
            C acc(0);
            for (std::size_t j = 1; j <= n; ++j) {
                C aj = coeff(val_ + static_cast<long>(j));
                if (!(aj == C(0))) acc += aj * b[n - j];
            }
            b[n] = -(acc * a0inv);
        }
        return from_coeffs(-val_, std::move(b), order_ - 2 * val_);
    }

    TruncatedSeries pow(unsigned j) const {
        TruncatedSeries r = one();
        TruncatedSeries base = *this;
        while (j) {
            if (j & 1) r = r * base;
            j >>= 1;
            if (j) base = base * base;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.val() == b.val() && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

  private:
    long top_or(long fallback) const {
        return coeffs_.empty() ? fallback : top_exponent();
    }
    static long cap_add(long a, long b) {
        return (a >= kExactOrder || b >= kExactOrder / 2) ? kExactOrder : a + b;
    }
    void clip() {
        if (coeffs_.empty()) return;
        long hi = std::min(top_exponent(), order_);
        if (hi < val_) {
            coeffs_.clear();
            val_ = 0;
            return;
        }
        coeffs_.resize(static_cast<std::size_t>(hi - val_ + 1));
    }
    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == C(0)) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            val_ = 0;
            return;
        }
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
        while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
    }

    long val_;
    std::vector<C> coeffs_;
    long order_;
};

using ExactSeries = TruncatedSeries<GaussianRational>;
using NumericSeries = TruncatedSeries<BigComplex>;

// Evaluate at a point t0 by summing stored terms (valuation may be negative).
inline BigComplex evaluate(const NumericSeries& s, const BigComplex& t0) {
    if (s.is_zero()) return BigComplex(0);
    BigComplex h(0);
    for (long k = s.top_exponent(); k >= s.val(); --k) h = h * t0 + s.coeff(k);
    long v = s.val();
    BigComplex base = v >= 0 ? t0 : BigComplex(1) / t0;
    for (long j = 0; j < (v >= 0 ? v : -v); ++j) h = h * base;
    return h;
}

inline NumericSeries to_numeric(const ExactSeries& s) {
    std::vector<BigComplex> c;
    if (!s.is_zero()) {
        c.reserve(static_cast<std::size_t>(s.top_exponent() - s.val() + 1));
        for (long e = s.val(); e <= s.top_exponent(); ++e)
            c.push_back(to_bigcomplex(s.coeff(e)));
    }
    return NumericSeries::from_coeffs(s.is_zero() ? 0 : s.val(), std::move(c), s.order());
}

}  // namespace hpms

#endif
