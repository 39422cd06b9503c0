#include "hpms/roots.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>

#include "hpms/errors.hpp"

namespace hpms {

namespace {

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& x) {
    BigComplex acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::vector<BigComplex> aberth_roots(std::vector<BigComplex> coeffs, const BigFloat& drop_tol) {
    BigFloat cmax(0);
    for (const auto& c : coeffs) cmax = std::max(cmax, c.abs());
    if (cmax == 0) throw Error("aberth_roots: zero polynomial");
    while (!coeffs.empty() && coeffs.back().abs() <= drop_tol * cmax) coeffs.pop_back();
    std::size_t n = coeffs.empty() ? 0 : coeffs.size() - 1;
    if (n == 0) return {};

    std::vector<BigComplex> deriv(n);
    for (std::size_t j = 1; j <= n; ++j)
        deriv[j - 1] = coeffs[j] * BigComplex(static_cast<long>(j));

    // Cauchy-style radius
    BigFloat lead = coeffs.back().abs();
    BigFloat r(0);
    for (std::size_t j = 0; j < n; ++j) r = std::max(r, coeffs[j].abs() / lead);
    r = 1 + r;

    std::vector<BigComplex> z(n);
    BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    for (std::size_t i = 0; i < n; ++i) {
        BigFloat th = two_pi * (BigFloat(static_cast<long>(i)) + BigFloat(1) / 4) /
                          BigFloat(static_cast<long>(n)) +
                      BigFloat(1) / 2;  // asymmetric offset
        z[i] = BigComplex(r * cos(th), r * sin(th)) * BigComplex(BigFloat(1), BigFloat(1) / 1000);
    }

    long bits = static_cast<long>(BigFloat::default_precision() * 3.32);
    BigFloat stop = ldexp(BigFloat(1), -(bits - 8));
    const int max_iter = 600;
    for (int iter = 0; iter < max_iter; ++iter) {
        BigFloat worst(0);
        for (std::size_t i = 0; i < n; ++i) {
            BigComplex p = horner(coeffs, z[i]);
            BigComplex dp = horner(deriv, z[i]);
            if (dp.is_zero()) {
                z[i] += BigComplex(stop, stop);
                worst = std::max(worst, BigFloat(1));
                continue;
            }
            BigComplex newton = p / dp;
            BigComplex sum(0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                BigComplex d = z[i] - z[j];
                if (d.is_zero()) d = BigComplex(stop, 0);
                sum += BigComplex(1) / d;
            }
            BigComplex denom = BigComplex(1) - newton * sum;
            BigComplex w = denom.is_zero() ? newton : newton / denom;
            z[i] -= w;
            BigFloat scale = std::max(BigFloat(1), z[i].abs());
            worst = std::max(worst, w.abs() / scale);
        }
        if (worst < stop) break;
    }
    return z;
}

std::vector<RootCluster> cluster_roots(std::vector<BigComplex> roots, const BigFloat& tol) {
    std::vector<RootCluster> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        BigComplex sum = roots[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if ((roots[j] - roots[i]).abs() <= tol) {
                sum += roots[j];
                ++count;
                used[j] = true;
            }
        }
        out.push_back({sum / BigComplex(static_cast<long>(count)), count});
    }
    return out;
}

void canonical_sort(std::vector<BigComplex>& values) {
    std::sort(values.begin(), values.end(), [](const BigComplex& a, const BigComplex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
}

BigFloat min_pairwise_distance(const std::vector<BigComplex>& values) {
    BigFloat best = ldexp(BigFloat(1), 400);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            best = std::min(best, (values[i] - values[j]).abs());
    return best;
}

}  // namespace hpms
