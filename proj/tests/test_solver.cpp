#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hpms/errors.hpp"
#include "hpms/hp_system.hpp"

using namespace hpms;
using fixtures::Q;

namespace {

ExactGermTuple sqrt_tuple(long order) {
    return power_tuple<GaussianRational>(fixtures::sqrt_curve(), fixtures::sqrt_branch(),
                                         parse_expr("1/w"), 1, order);
}
ExactGermTuple cbrt_tuple(long order) {
    return power_tuple<GaussianRational>(fixtures::cbrt_curve(), fixtures::cbrt_branch(),
                                         parse_expr("1/w"), 2, order);
}
ExactGermTuple quartic_tuple(long order) {
    return power_tuple<GaussianRational>(fixtures::quartic_curve(), fixtures::quartic_branch(),
                                         parse_expr("1/w"), 3, order);
}

// Independent diagonal Pade oracle: denominator p (deg <= n, p(0)=1) of the
// [n/n] approximant of f at t=0, from the plain Toeplitz system solved by
// naive Gaussian elimination.
std::vector<GaussianRational> pade_denominator(const ExactSeries& f, long n) {
    // unknowns p_1..p_n; equations sum_j p_j f_{r-j} = -f_r, r = n+1..2n
    std::vector<std::vector<GaussianRational>> a;
    for (long r = n + 1; r <= 2 * n; ++r) {
        std::vector<GaussianRational> row;
        for (long j = 1; j <= n; ++j) row.push_back(f.coeff(r - j));
        row.push_back(-f.coeff(r));
        a.push_back(row);
    }
    std::size_t rows = a.size(), cols = static_cast<std::size_t>(n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussianRational f2 = a[i][c] / a[r][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f2 * a[r][j];
        }
        ++r;
    }
    REQUIRE(r == cols);  // the oracle system must be nonsingular here
    std::vector<GaussianRational> p(static_cast<std::size_t>(n + 1), Q(0));
    p[0] = Q(1);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t row = 0;
        while (a[row][c].is_zero()) ++row;
        p[c + 1] = a[row][cols] / a[row][c];
    }
    return p;
}

bool proportional(const std::vector<GaussianRational>& a,
                  const std::vector<GaussianRational>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("assembled system sizes match the counting formula") {
    auto a1 = assemble_system(sqrt_tuple(2), 1, 1);
    CHECK(a1.size() == 3);
    CHECK(a1[0].size() == 4);

    auto a2 = assemble_system(cbrt_tuple(6), 2, 1);
    CHECK(a2.size() == 14);
    CHECK(a2[0].size() == 15);

    auto a3 = assemble_system(quartic_tuple(4), 1, 2);
    CHECK(a3.size() == 15);
    CHECK(a3[0].size() == 18);

    CHECK_THROWS_AS(assemble_system(sqrt_tuple(3), 2, 1), TruncationTooShort);
}

TEST_CASE("m=1 n=1 solution is q0 = z, q1 = 1 up to normalization") {
    auto germs = sqrt_tuple(4);
    // germ sanity: f = 1/sqrt(z^2-1) = t + t^3/2 + ...
    CHECK(germs.f(1).coeff(1) == Q(1));
    CHECK(germs.f(1).coeff(3) == Q(1, 2));

    auto sol = solve_hp(germs, 1, 1, Backend::Exact);
    REQUIRE(sol.exact_polys.size() == 2);
    CHECK(proportional(sol.exact_polys[0], {Q(0), Q(1)}));  // P_{0} = z
    CHECK(proportional(sol.exact_polys[1], {Q(1), Q(0)}));  // P_{1} = 1
    CHECK(sol.nullspace_dim >= 1);
    CHECK(sol.max_residual == 0);
}

TEST_CASE("nullspace dimension is at least C(m, k-1)") {
    auto s1 = solve_hp(sqrt_tuple(8), 3, 1, Backend::Exact);
    CHECK(s1.nullspace_dim >= 1);

    auto s2 = solve_hp(cbrt_tuple(9), 2, 1, Backend::Exact);
    CHECK(s2.nullspace_dim >= 1);

    auto s3 = solve_hp(cbrt_tuple(9), 2, 2, Backend::Exact);
    CHECK(s3.nullspace_dim >= 2);  // C(2,1)

    auto s4 = solve_hp(quartic_tuple(8), 1, 2, Backend::Exact);
    CHECK(s4.nullspace_dim >= 3);  // C(3,1)
}

TEST_CASE("k=1, m=1 output matches the classical diagonal Pade denominator") {
    long n = 4;
    auto germs = sqrt_tuple(2 * n + 2);
    auto sol = solve_hp(germs, n, 1, Backend::Exact);

    // reversing P_{0} gives the Pade denominator of f in t
    std::vector<GaussianRational> rev(sol.exact_polys[0].rbegin(),
                                      sol.exact_polys[0].rend());
    auto oracle = pade_denominator(germs.f(1), n);
    CHECK(proportional(rev, oracle));
}

TEST_CASE("order conditions verify to exact zero; homogeneous conditions follow") {
    auto germs = cbrt_tuple(12);
    for (int k : {1, 2}) {
        auto sol = solve_hp(germs, 2, k, Backend::Exact);
        auto rep = verify_order_conditions(sol, germs);
        CHECK(rep.all_exact_zero);
        CHECK(rep.max_residual == 0);
        auto hom = verify_homogeneous_conditions(sol, germs);
        CHECK(hom.all_exact_zero);
        CHECK(hom.max_residual == 0);
    }
}

TEST_CASE("scaling invariance of the conditions") {
    auto germs = cbrt_tuple(9);
    auto sol = solve_hp(germs, 2, 2, Backend::Exact);
    for (auto& p : sol.exact_polys)
        for (auto& c : p) c *= fixtures::Qi(7, 3, 1, 5);
    auto rep = verify_order_conditions(sol, germs);
    CHECK(rep.all_exact_zero);
}

TEST_CASE("corrupted solution is detected by the residual report") {
    ScopedPrecision sp(256);
    auto germs = cbrt_tuple(9);
    auto sol = solve_hp(germs, 2, 1, Backend::Numeric, 256);
    auto clean = verify_order_conditions(sol, to_numeric(germs));
    CHECK(clean.max_residual < half_precision_eps(256) * clean.scale);

    sol.polys[1][2] += BigComplex(BigFloat(1) / 1000);
    auto dirty = verify_order_conditions(sol, to_numeric(germs));
    CHECK(dirty.max_residual > BigFloat(1) / 10000);
}

TEST_CASE("numeric backend agrees with the exact backend") {
    ScopedPrecision sp(256);
    auto germs = sqrt_tuple(8);
    long n = 2;
    auto ex = solve_hp(germs, n, 1, Backend::Exact);
    auto nu = solve_hp(germs, n, 1, Backend::Numeric, 256);
    REQUIRE(ex.polys.size() == nu.polys.size());

    // nullspace is 1-dimensional here, so agreement = proportionality
    CHECK(ex.nullspace_dim == 1);
    CHECK(nu.nullspace_dim == 1);
    BigFloat tol = working_quarter_eps();
    for (std::size_t s = 0; s < ex.polys.size(); ++s)
        for (std::size_t i = 0; i < ex.polys[s].size(); ++i)
            for (std::size_t j = 0; j < nu.polys[s].size(); ++j) {
                BigComplex cross = ex.polys[s][i] * nu.polys[s][j] -
                                   ex.polys[s][j] * nu.polys[s][i];
                CHECK(cross.abs() < tol);
            }
    CHECK(nu.max_residual < half_precision_eps(256) * 100);
}

TEST_CASE("homogeneous conditions hold for the numeric backend too") {
    ScopedPrecision sp(256);
    auto germs = quartic_tuple(12);
    auto sol = solve_hp(germs, 2, 2, Backend::Numeric, 256);
    auto hom = verify_homogeneous_conditions(sol, to_numeric(germs));
    CHECK(hom.max_residual < half_precision_eps(256) * hom.scale);
}

TEST_CASE("k-subset enumeration is lexicographic") {
    auto s = k_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<int>({0, 1}));
    CHECK(s[1] == std::vector<int>({0, 2}));
    CHECK(s[5] == std::vector<int>({2, 3}));
    CHECK(subset_index(s, {1, 3}) == 4);
}
