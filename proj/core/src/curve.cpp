#include "hpms/curve.hpp"

#include <algorithm>

#include "hpms/errors.hpp"

namespace hpms {

namespace qpoly {

QPoly trim(QPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) { return add(a, scale(b, GaussianRational(-1))); }

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

QPoly scale(const QPoly& a, const GaussianRational& c) {
    if (c.is_zero()) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

GaussianRational eval(const QPoly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigComplex eval(const QPoly& p, const BigComplex& x) {
    BigComplex acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_bigcomplex(*it);
    return acc;
}

QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        r[i - 1] = p[i] * GaussianRational(static_cast<long>(i));
    return trim(std::move(r));
}

bool is_zero(const QPoly& p) { return trim(p).empty(); }

long degree(const QPoly& p) {
    QPoly t = trim(p);
    return static_cast<long>(t.size()) - 1;
}

QPoly interpolate(const std::vector<GaussianRational>& xs,
                  const std::vector<GaussianRational>& ys) {
    // Newton divided differences
    std::size_t n = xs.size();
    std::vector<GaussianRational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    QPoly r;
    for (std::size_t i = n; i-- > 0;) {
        // r = r * (x - xs[i]) + dd[i]
        QPoly shifted = mul(r, QPoly{-xs[i], GaussianRational(1)});
        r = add(shifted, QPoly{dd[i]});
    }
    return trim(std::move(r));
}

}  // namespace qpoly

GaussianRational determinant(std::vector<std::vector<GaussianRational>> a) {
    std::size_t n = a.size();
    GaussianRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return GaussianRational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        GaussianRational inv = GaussianRational(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            GaussianRational f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

AlgebraicCurve::AlgebraicCurve(unsigned m, const std::vector<Term>& terms) : m_(m) {
    if (m < 1) throw Error("curve: m must be >= 1");
    wcoeffs_.assign(m + 2, QPoly{});
    for (const auto& t : terms) {
        if (t.wb > m + 1) throw Error("curve: term exceeds deg_w = m+1");
        QPoly& p = wcoeffs_[t.wb];
        if (p.size() <= t.za) p.resize(t.za + 1);
        p[t.za] += t.c;
    }
    for (auto& p : wcoeffs_) p = qpoly::trim(std::move(p));
    if (qpoly::is_zero(wcoeffs_[m + 1]))
        throw Error("curve: deg_w P must equal m+1 exactly");
}

long AlgebraicCurve::max_zdeg() const {
    long d = 0;
    for (const auto& p : wcoeffs_) d = std::max(d, qpoly::degree(p));
    return d;
}

BigComplex AlgebraicCurve::eval(const BigComplex& z, const BigComplex& w) const {
    BigComplex acc;
    for (std::size_t b = wcoeffs_.size(); b-- > 0;)
        acc = acc * w + qpoly::eval(wcoeffs_[b], z);
    return acc;
}

BigComplex AlgebraicCurve::dw(const BigComplex& z, const BigComplex& w) const {
    BigComplex acc;
    for (std::size_t b = wcoeffs_.size(); b-- > 1;)
        acc = acc * w + qpoly::eval(wcoeffs_[b], z) * BigComplex(static_cast<long>(b));
    return acc;
}

BigComplex AlgebraicCurve::dz(const BigComplex& z, const BigComplex& w) const {
    BigComplex acc;
    for (std::size_t b = wcoeffs_.size(); b-- > 0;)
        acc = acc * w + qpoly::eval(qpoly::derivative(wcoeffs_[b]), z);
    return acc;
}

std::vector<BigComplex> AlgebraicCurve::fiber_poly(const BigComplex& z) const {
    std::vector<BigComplex> p(wcoeffs_.size());
    for (std::size_t b = 0; b < wcoeffs_.size(); ++b) p[b] = qpoly::eval(wcoeffs_[b], z);
    return p;
}

QPoly AlgebraicCurve::resultant_z() const {
    // Sylvester matrix of P and dP/dw in w; entries are z-polynomials.
    // Evaluate the determinant at rational sample points and interpolate.
    unsigned dp = m_ + 1, dq = m_;
    std::size_t n = dp + dq;
    std::vector<QPoly> pw(wcoeffs_.rbegin(), wcoeffs_.rend());  // lead first
    std::vector<QPoly> qw(dq + 1);
    for (unsigned b = 0; b <= dq; ++b)
        qw[dq - b] = qpoly::scale(wcoeffs_[b + 1], GaussianRational(static_cast<long>(b + 1)));

    long dz = max_zdeg();
    long dcount = static_cast<long>(n) * dz + 1;  // generous degree bound + 1
    std::vector<GaussianRational> xs, ys;
    xs.reserve(dcount);
    ys.reserve(dcount);
    for (long j = 0; j < dcount; ++j) {
        GaussianRational x(static_cast<long>(j));
        std::vector<std::vector<GaussianRational>> mat(
            n, std::vector<GaussianRational>(n, GaussianRational(0)));
        for (unsigned r = 0; r < dq; ++r)
            for (unsigned c = 0; c <= dp; ++c) mat[r][r + c] = qpoly::eval(pw[c], x);
        for (unsigned r = 0; r < dp; ++r)
            for (unsigned c = 0; c <= dq; ++c) mat[dq + r][r + c] = qpoly::eval(qw[c], x);
        xs.push_back(x);
        ys.push_back(determinant(std::move(mat)));
    }
    return qpoly::interpolate(xs, ys);
}

bool AlgebraicCurve::squarefree_in_w() const { return !qpoly::is_zero(resultant_z()); }

bool AlgebraicCurve::pure_radical_form() const {
    for (unsigned b = 1; b <= m_; ++b)
        if (!qpoly::is_zero(wcoeffs_[b])) return false;
    return true;
}

BigFloat AlgebraicCurve::coefficient_scale() const {
    BigFloat s(0);
    for (const auto& p : wcoeffs_)
        for (const auto& c : p) s = std::max(s, abs_value(c));
    return s == 0 ? BigFloat(1) : s;
}

}  // namespace hpms
