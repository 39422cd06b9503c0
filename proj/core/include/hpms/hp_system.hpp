#ifndef HPMS_HP_SYSTEM_HPP
#define HPMS_HP_SYSTEM_HPP

#include <vector>

#include "hpms/germ.hpp"
#include "hpms/linalg.hpp"
#include "hpms/series.hpp"

namespace hpms {

// Lexicographically ordered k-element subsets of {0, .., n-1}.
std::vector<std::vector<int>> k_subsets(int n, int k);
// Position of a sorted subset in that ordering.
int subset_index(const std::vector<std::vector<int>>& subsets, const std::vector<int>& s);

// Germs f_1 .. f_m at infinity, all holomorphic there (valuation >= 0);
// the constant germ f_0 == 1 is implicit.
template <class C>
struct GermTuple {
    unsigned m = 0;
    std::vector<TruncatedSeries<C>> germs;

    long order() const;  // common truncation order (minimum over germs)
    const TruncatedSeries<C>& f(int j) const { return germs[static_cast<std::size_t>(j - 1)]; }
};

using ExactGermTuple = GermTuple<GaussianRational>;
using NumericGermTuple = GermTuple<BigComplex>;

NumericGermTuple to_numeric(const ExactGermTuple& t);

// f, f^2, .., f^m for one expression on the curve branch.
template <class C>
GermTuple<C> power_tuple(const AlgebraicCurve& curve, const GermSpec& spec, const ExprPtr& f,
                         unsigned m, long order);
// One germ per expression (general tuple).
template <class C>
GermTuple<C> expression_tuple(const AlgebraicCurve& curve, const GermSpec& spec,
                              const std::vector<ExprPtr>& fs, long order);

enum class Backend { Exact, Numeric };

// The degree-(m+1-k)n polynomial tuple for one (n, k), plus solve metadata.
struct HPSolution {
    unsigned m = 0;
    long n = 0;
    int k = 1;
    Backend backend = Backend::Exact;
    unsigned prec_bits = 0;  // numeric backend only
    long nullspace_dim = 0;
    BigFloat max_residual;  // from the order-condition verification

    // Per k-subset of {0..m} (lexicographic), ascending z-coefficients of
    // length (m+1-k)n + 1.
    std::vector<std::vector<int>> subsets;
    std::vector<std::vector<BigComplex>> polys;              // always populated
    std::vector<std::vector<GaussianRational>> exact_polys;  // exact backend only

    long degree_bound() const { return (static_cast<long>(m) + 1 - k) * n; }
    const std::vector<BigComplex>& poly(const std::vector<int>& subset) const;
};

// Homogeneous linear system for the k-th polynomials: one block of
// (m+1)n + 1 equations per k-subset J of {1..m}, unknowns ordered
// column-major by (subset of {0..m}, degree).
template <class C>
std::vector<std::vector<C>> assemble_system(const GermTuple<C>& germs, long n, int k);

// One nonzero nullspace vector.  Exact: fraction-free elimination, free
// variables 0 except the last free column; content-free Gaussian-integer
// normalization.  Numeric: Jacobi SVD, smallest singular vector, rank
// threshold sigma_max * 2^{-prec/2}; unit-leading normalization.
HPSolution solve_hp(const ExactGermTuple& germs, long n, int k, Backend backend,
                    unsigned prec_bits = 256);
HPSolution solve_hp_numeric(const NumericGermTuple& germs, long n, int k, unsigned prec_bits);

struct ResidualReport {
    BigFloat max_residual;   // max |coefficient| over the required orders
    bool all_exact_zero;     // meaningful for the exact domain
    BigFloat scale;          // max input magnitude, for relative judgments
};

// Re-derives every order condition by independent series arithmetic.
template <class C>
ResidualReport verify_order_conditions(const HPSolution& sol, const GermTuple<C>& germs);
// Checks the alternating-sum condition over ALL (k+1)-subsets of {0..m}.
template <class C>
ResidualReport verify_homogeneous_conditions(const HPSolution& sol, const GermTuple<C>& germs);

extern template struct GermTuple<GaussianRational>;
extern template struct GermTuple<BigComplex>;

}  // namespace hpms

#endif
