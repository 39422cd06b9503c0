#include "hpms/linalg.hpp"

#include <algorithm>

#include "hpms/errors.hpp"

namespace hpms {

namespace {

using boost::multiprecision::mpz_int;

// Scale a row to Gaussian-integer entries (row scaling preserves the
// nullspace).
void clear_denominators(std::vector<GaussianRational>& row) {
    mpz_int l = 1;
    for (const auto& e : row) {
        l = lcm(l, denominator(e.re));
        l = lcm(l, denominator(e.im));
    }
    if (l == 1) return;
    GaussianRational s{Rational(l), Rational(0)};
    for (auto& e : row) e *= s;
}

}  // namespace

ExactEchelon bareiss_echelon(ExactMatrix a, long cols) {
    for (auto& row : a) {
        if (static_cast<long>(row.size()) != cols)
            throw Error("bareiss_echelon: ragged matrix");
        clear_denominators(row);
    }
    ExactEchelon ech;
    ech.cols = cols;

    std::size_t r = 0;
    GaussianRational prev(1);
    for (long c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][static_cast<std::size_t>(c)].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const GaussianRational p = a[r][static_cast<std::size_t>(c)];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            const GaussianRational f = a[i][static_cast<std::size_t>(c)];
            for (long j = c; j < cols; ++j) {
                auto& e = a[i][static_cast<std::size_t>(j)];
                e = (p * e - f * a[r][static_cast<std::size_t>(j)]) / prev;
            }
        }
        prev = p;
        ech.pivot_col.push_back(c);
        ++r;
    }
    a.resize(r);
    ech.rows = std::move(a);
    return ech;
}

std::vector<GaussianRational> exact_nullspace_vector(const ExactEchelon& ech) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(ech.cols), false);
    for (long c : ech.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    long free_col = -1;
    for (long c = ech.cols - 1; c >= 0; --c)
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            free_col = c;
            break;
        }
    if (free_col < 0) throw EmptyNullspace("matrix has full column rank");

    std::vector<GaussianRational> x(static_cast<std::size_t>(ech.cols), GaussianRational(0));
    x[static_cast<std::size_t>(free_col)] = GaussianRational(1);
    for (std::size_t ri = ech.rows.size(); ri-- > 0;) {
        long pc = ech.pivot_col[ri];
        GaussianRational acc(0);
        for (long j = pc + 1; j < ech.cols; ++j)
            acc += ech.rows[ri][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(pc)] = -acc / ech.rows[ri][static_cast<std::size_t>(pc)];
    }
    return x;
}

SvdResult jacobi_svd(const NumericMatrix& a_rows) {
    const std::size_t rows = a_rows.size();
    const std::size_t cols = rows == 0 ? 0 : a_rows[0].size();
    for (const auto& r : a_rows)
        if (r.size() != cols) throw Error("jacobi_svd: ragged matrix");

    // column-major working copy, V accumulated from the identity
    NumericMatrix col(cols, std::vector<BigComplex>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) col[j][i] = a_rows[i][j];
    NumericMatrix v(cols, std::vector<BigComplex>(cols, BigComplex(0)));
    for (std::size_t j = 0; j < cols; ++j) v[j][j] = BigComplex(1);

    auto inner = [](const std::vector<BigComplex>& u, const std::vector<BigComplex>& w) {
        BigComplex s(0);
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i].conj() * w[i];
        return s;
    };

    long bits = static_cast<long>(BigFloat::default_precision() * 3.32);
    BigFloat eps = ldexp(BigFloat(1), -(bits - 8));
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                BigFloat ap = inner(col[p], col[p]).re;
                BigFloat aq = inner(col[q], col[q]).re;
                BigComplex c = inner(col[p], col[q]);
                BigFloat cabs = c.abs();
                if (cabs * cabs <= eps * eps * ap * aq || cabs == 0) continue;
                rotated = true;

                // absorb the phase into column q so the 2x2 Gram is real
                BigComplex phase = c / BigComplex(cabs);
                BigComplex d = phase.conj();
                for (auto& e : col[q]) e *= d;
                for (auto& e : v[q]) e *= d;

                BigFloat tau = (aq - ap) / (2 * cabs);
                BigFloat t;
                if (tau >= 0)
                    t = 1 / (tau + sqrt(1 + tau * tau));
                else
                    t = -1 / (-tau + sqrt(1 + tau * tau));
                BigFloat cs = 1 / sqrt(1 + t * t);
                BigFloat sn = t * cs;
                BigComplex ccs(cs), csn(sn);
                for (std::size_t i = 0; i < rows; ++i) {
                    BigComplex up = col[p][i], uq = col[q][i];
                    col[p][i] = ccs * up - csn * uq;
                    col[q][i] = csn * up + ccs * uq;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    BigComplex vp = v[p][i], vq = v[q][i];
                    v[p][i] = ccs * vp - csn * vq;
                    v[q][i] = csn * vp + ccs * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<std::size_t> order(cols);
    for (std::size_t j = 0; j < cols; ++j) order[j] = j;
    std::vector<BigFloat> norms(cols);
    for (std::size_t j = 0; j < cols; ++j) norms[j] = sqrt(inner(col[j], col[j]).re);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

    SvdResult out;
    for (std::size_t j : order) {
        out.sigma.push_back(norms[j]);
        out.right.push_back(v[j]);
    }
    return out;
}

long numeric_rank(const SvdResult& svd, const BigFloat& threshold) {
    long r = 0;
    for (const auto& s : svd.sigma)
        if (s > threshold) ++r;
    return r;
}

}  // namespace hpms
