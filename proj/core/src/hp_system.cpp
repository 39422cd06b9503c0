#include "hpms/hp_system.hpp"

#include <algorithm>

#include "hpms/errors.hpp"

namespace hpms {

namespace {

using boost::multiprecision::mpz_int;

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// P(z) of degree <= D as a Laurent series in t = 1/z.
template <class C>
TruncatedSeries<C> poly_to_series(const std::vector<C>& coeffs) {
    std::vector<C> rev(coeffs.rbegin(), coeffs.rend());
    long d = static_cast<long>(coeffs.size()) - 1;
    return TruncatedSeries<C>::from_coeffs(-d, std::move(rev),
                                           TruncatedSeries<C>::kExactOrder);
}

template <class C>
const std::vector<std::vector<C>>& solution_polys(const HPSolution& sol);

template <>
const std::vector<std::vector<GaussianRational>>& solution_polys<GaussianRational>(
    const HPSolution& sol) {
    if (sol.exact_polys.empty())
        throw Error("exact verification requires an exact-backend solution");
    return sol.exact_polys;
}

template <>
const std::vector<std::vector<BigComplex>>& solution_polys<BigComplex>(const HPSolution& sol) {
    return sol.polys;
}

// Alternating-sum residual over one (k+1)-subset T: the coefficients of
// sum_s (-1)^s P_{T \ {i_s}} f_{i_s} through t^{kn} must vanish.
template <class C>
void block_residual(const HPSolution& sol, const GermTuple<C>& germs,
                    const std::vector<int>& T, ResidualReport& rep) {
    const auto& polys = solution_polys<C>(sol);
    long kn = static_cast<long>(sol.k) * sol.n;
    TruncatedSeries<C> acc = TruncatedSeries<C>::zero(kn);
    for (std::size_t s = 0; s < T.size(); ++s) {
        std::vector<int> rest;
        for (std::size_t u = 0; u < T.size(); ++u)
            if (u != s) rest.push_back(T[u]);
        auto p = poly_to_series(polys[static_cast<std::size_t>(
            subset_index(sol.subsets, rest))]);
        TruncatedSeries<C> term =
            T[s] == 0 ? p.truncated(kn) : (p * germs.f(T[s])).truncated(kn);
        if (s % 2) term = -term;
        acc = acc + term;
    }
    if (!acc.is_zero()) {
        rep.all_exact_zero = false;
        for (long e = acc.val(); e <= std::min(acc.top_exponent(), kn); ++e)
            rep.max_residual = std::max(rep.max_residual, abs_value(acc.coeff(e)));
    }
}

template <class C>
BigFloat magnitude_scale(const HPSolution& sol, const GermTuple<C>& germs) {
    BigFloat scale(1);
    for (const auto& p : sol.polys)
        for (const auto& c : p) scale = std::max(scale, c.abs());
    for (const auto& f : germs.germs)
        if (!f.is_zero())
            for (long e = f.val(); e <= f.top_exponent(); ++e)
                scale = std::max(scale, abs_value(f.coeff(e)));
    return scale;
}

void normalize_exact(std::vector<GaussianRational>& x) {
    mpz_int l = 1;
    for (const auto& e : x) {
        l = boost::multiprecision::lcm(l, denominator(e.re));
        l = boost::multiprecision::lcm(l, denominator(e.im));
    }
    GaussianRational scale{Rational(l), Rational(0)};
    mpz_int g = 0;
    for (auto& e : x) {
        e *= scale;
        g = boost::multiprecision::gcd(g, numerator(e.re));
        g = boost::multiprecision::gcd(g, numerator(e.im));
    }
    if (g > 1) {
        GaussianRational inv{Rational(mpz_int(1), g), Rational(0)};
        for (auto& e : x) e *= inv;
    }
    // unit normalization: leading nonzero entry gets a positive real part
    for (const auto& e : x) {
        if (e.is_zero()) continue;
        GaussianRational u(1);
        if (e.re > 0 || (e.re == 0 && e.im > 0))
            u = GaussianRational(Rational(1), Rational(0));
        else
            u = GaussianRational(Rational(-1), Rational(0));
        if (e.re == 0) u *= GaussianRational(Rational(0), Rational(-1));
        for (auto& f : x) f *= u;
        break;
    }
}

template <class C>
HPSolution split_solution(const GermTuple<C>& germs, long n, int k,
                          std::vector<C> x);

template <>
HPSolution split_solution<GaussianRational>(const ExactGermTuple& germs, long n, int k,
                                            std::vector<GaussianRational> x) {
    HPSolution sol;
    sol.m = germs.m;
    sol.n = n;
    sol.k = k;
    sol.subsets = k_subsets(static_cast<int>(germs.m) + 1, k);
    long stride = sol.degree_bound() + 1;
    normalize_exact(x);
    for (std::size_t s = 0; s < sol.subsets.size(); ++s) {
        auto first = x.begin() + static_cast<long>(s) * stride;
        sol.exact_polys.emplace_back(first, first + stride);
        std::vector<BigComplex> num;
        for (auto it = first; it != first + stride; ++it) num.push_back(to_bigcomplex(*it));
        sol.polys.push_back(std::move(num));
    }
    return sol;
}

template <>
HPSolution split_solution<BigComplex>(const NumericGermTuple& germs, long n, int k,
                                      std::vector<BigComplex> x) {
    HPSolution sol;
    sol.m = germs.m;
    sol.n = n;
    sol.k = k;
    sol.subsets = k_subsets(static_cast<int>(germs.m) + 1, k);
    long stride = sol.degree_bound() + 1;
    // unit normalization: divide by the entry of largest magnitude
    std::size_t lead = 0;
    BigFloat best(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigFloat a = x[i].abs();
        if (a > best) {
            best = a;
            lead = i;
        }
    }
    if (best == 0) throw EmptyNullspace("candidate nullspace vector is zero");
    BigComplex div = x[lead];
    for (auto& e : x) e /= div;
    for (std::size_t s = 0; s < sol.subsets.size(); ++s) {
        auto first = x.begin() + static_cast<long>(s) * stride;
        sol.polys.emplace_back(first, first + stride);
    }
    return sol;
}

}  // namespace

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int subset_index(const std::vector<std::vector<int>>& subsets, const std::vector<int>& s) {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
    if (it == subsets.end() || *it != s) throw Error("subset not found in index");
    return static_cast<int>(it - subsets.begin());
}

template <class C>
long GermTuple<C>::order() const {
    long o = TruncatedSeries<C>::kExactOrder;
    for (const auto& f : germs) o = std::min(o, f.order());
    return o;
}

NumericGermTuple to_numeric(const ExactGermTuple& t) {
    NumericGermTuple out;
    out.m = t.m;
    for (const auto& f : t.germs) out.germs.push_back(to_numeric(f));
    return out;
}

template <class C>
GermTuple<C> power_tuple(const AlgebraicCurve& curve, const GermSpec& spec, const ExprPtr& f,
                         unsigned m, long order) {
    GermTuple<C> t;
    t.m = m;
    auto f1 = germ_of_expression<C>(curve, spec, f, order);
    for (unsigned j = 1; j <= m; ++j) t.germs.push_back(f1.pow(j).truncated(order));
    return t;
}

template <class C>
GermTuple<C> expression_tuple(const AlgebraicCurve& curve, const GermSpec& spec,
                              const std::vector<ExprPtr>& fs, long order) {
    GermTuple<C> t;
    t.m = static_cast<unsigned>(fs.size());
    for (const auto& f : fs) t.germs.push_back(germ_of_expression<C>(curve, spec, f, order));
    return t;
}

const std::vector<BigComplex>& HPSolution::poly(const std::vector<int>& subset) const {
    return polys[static_cast<std::size_t>(subset_index(subsets, subset))];
}

template <class C>
std::vector<std::vector<C>> assemble_system(const GermTuple<C>& germs, long n, int k) {
    const long m = static_cast<long>(germs.m);
    if (k < 1 || k > m + 1) throw Error("assemble_system: k out of range");
    if (germs.order() < (m + 1) * n)
        throw TruncationTooShort("germ truncation order below (m+1)n");
    for (const auto& f : germs.germs)
        if (!f.is_zero() && f.val() < 0)
            throw PoleAtInfinity("germ tuple entry has a pole at infinity");

    const long D = (m + 1 - k) * n;           // degree bound
    const long rows_per_block = (m + 1) * n + 1;
    auto all_subsets = k_subsets(static_cast<int>(m) + 1, k);
    auto blocks = k_subsets(static_cast<int>(m), k);  // subsets of {1..m}, 0-based
    for (auto& J : blocks)
        for (auto& j : J) ++j;

    const long cols = (D + 1) * static_cast<long>(all_subsets.size());
    const long rows = rows_per_block * static_cast<long>(blocks.size());
    if (rows != (n * (m + 1) + 1) * binom(m, k) ||
        cols != (n * (m + 1 - k) + 1) * binom(m + 1, k))
        throw Error("assemble_system: size does not match the counting formula");

    std::vector<std::vector<C>> a(static_cast<std::size_t>(rows),
                                  std::vector<C>(static_cast<std::size_t>(cols), C(0)));
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& J = blocks[bi];
        long row0 = static_cast<long>(bi) * rows_per_block;
        // + P_J: coefficient of t^r picks the z^{-r} coefficient
        long cJ = subset_index(all_subsets, J) * (D + 1);
        for (long e = 0; e <= D; ++e) {
            long r = -e;  // within -D .. kn automatically
            a[static_cast<std::size_t>(row0 + r + D)][static_cast<std::size_t>(cJ + e)] = C(1);
        }
        // + (-1)^s P_{{0} u J\{j_s}} f_{j_s}
        for (std::size_t s = 1; s <= J.size(); ++s) {
            int js = J[s - 1];
            std::vector<int> I{0};
            for (std::size_t u = 0; u < J.size(); ++u)
                if (u != s - 1) I.push_back(J[u]);
            long cI = subset_index(all_subsets, I) * (D + 1);
            const auto& f = germs.f(js);
            C sign = (s % 2) ? C(-1) : C(1);
            for (long r = -D; r <= k * n; ++r) {
                for (long e = 0; e <= D; ++e) {
                    C fc = f.coeff(r + e);
                    if (fc == C(0)) continue;
                    a[static_cast<std::size_t>(row0 + r + D)]
                     [static_cast<std::size_t>(cI + e)] += sign * fc;
                }
            }
        }
    }
    return a;
}

HPSolution solve_hp(const ExactGermTuple& germs, long n, int k, Backend backend,
                    unsigned prec_bits) {
    if (backend == Backend::Numeric) {
        ScopedPrecision sp(prec_bits);
        return solve_hp_numeric(to_numeric(germs), n, k, prec_bits);
    }
    auto a = assemble_system(germs, n, k);
    long cols = static_cast<long>(a.empty() ? 0 : a[0].size());
    auto ech = bareiss_echelon(std::move(a), cols);
    auto x = exact_nullspace_vector(ech);
    HPSolution sol = split_solution<GaussianRational>(germs, n, k, std::move(x));
    sol.backend = Backend::Exact;
    sol.nullspace_dim = ech.nullity();
    sol.max_residual = verify_order_conditions(sol, germs).max_residual;
    return sol;
}

HPSolution solve_hp_numeric(const NumericGermTuple& germs, long n, int k, unsigned prec_bits) {
    auto a = assemble_system(germs, n, k);
    long cols = static_cast<long>(a.empty() ? 0 : a[0].size());
    auto svd = jacobi_svd(a);
    if (svd.sigma.empty() || svd.sigma.front() == 0)
        throw EmptyNullspace("assembled system is identically zero");
    BigFloat threshold = svd.sigma.front() * half_precision_eps(prec_bits);
    long rank = numeric_rank(svd, threshold);
    if (rank >= cols)
        throw EmptyNullspace("no singular value below the rank threshold");
    HPSolution sol = split_solution<BigComplex>(germs, n, k, svd.right.back());
    sol.backend = Backend::Numeric;
    sol.prec_bits = prec_bits;
    sol.nullspace_dim = cols - rank;
    sol.max_residual = verify_order_conditions(sol, germs).max_residual;
    return sol;
}

template <class C>
ResidualReport verify_order_conditions(const HPSolution& sol, const GermTuple<C>& germs) {
    ResidualReport rep{BigFloat(0), true, magnitude_scale(sol, germs)};
    // the defining blocks: T = {0} u J over k-subsets J of {1..m}
    auto blocks = k_subsets(static_cast<int>(sol.m), sol.k);
    for (auto& J : blocks) {
        std::vector<int> T{0};
        for (int j : J) T.push_back(j + 1);
        block_residual(sol, germs, T, rep);
    }
    return rep;
}

template <class C>
ResidualReport verify_homogeneous_conditions(const HPSolution& sol, const GermTuple<C>& germs) {
    ResidualReport rep{BigFloat(0), true, magnitude_scale(sol, germs)};
    for (const auto& T : k_subsets(static_cast<int>(sol.m) + 1, sol.k + 1))
        block_residual(sol, germs, T, rep);
    return rep;
}

template struct GermTuple<GaussianRational>;
template struct GermTuple<BigComplex>;
template ExactGermTuple power_tuple<GaussianRational>(const AlgebraicCurve&, const GermSpec&,
                                                      const ExprPtr&, unsigned, long);
template NumericGermTuple power_tuple<BigComplex>(const AlgebraicCurve&, const GermSpec&,
                                                  const ExprPtr&, unsigned, long);
template ExactGermTuple expression_tuple<GaussianRational>(const AlgebraicCurve&,
                                                           const GermSpec&,
                                                           const std::vector<ExprPtr>&, long);
template NumericGermTuple expression_tuple<BigComplex>(const AlgebraicCurve&, const GermSpec&,
                                                       const std::vector<ExprPtr>&, long);
template std::vector<std::vector<GaussianRational>> assemble_system<GaussianRational>(
    const ExactGermTuple&, long, int);
template std::vector<std::vector<BigComplex>> assemble_system<BigComplex>(
    const NumericGermTuple&, long, int);
template ResidualReport verify_order_conditions<GaussianRational>(const HPSolution&,
                                                                  const ExactGermTuple&);
template ResidualReport verify_order_conditions<BigComplex>(const HPSolution&,
                                                            const NumericGermTuple&);
template ResidualReport verify_homogeneous_conditions<GaussianRational>(const HPSolution&,
                                                                        const ExactGermTuple&);
template ResidualReport verify_homogeneous_conditions<BigComplex>(const HPSolution&,
                                                                  const NumericGermTuple&);

}  // namespace hpms
