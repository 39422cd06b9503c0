#ifndef HPMS_LINALG_HPP
#define HPMS_LINALG_HPP

#include <vector>

#include "hpms/numbers.hpp"

namespace hpms {

using ExactMatrix = std::vector<std::vector<GaussianRational>>;
using NumericMatrix = std::vector<std::vector<BigComplex>>;

// Fraction-free (Bareiss) row echelon form.  Rows are first scaled to
// Gaussian-integer entries; the two-step elimination keeps every division
// exact and the intermediate growth polynomial.
struct ExactEchelon {
    ExactMatrix rows;            // echelon rows, zero rows dropped
    std::vector<long> pivot_col; // pivot column per echelon row
    long cols = 0;
    long rank() const { return static_cast<long>(pivot_col.size()); }
    long nullity() const { return cols - rank(); }
};

ExactEchelon bareiss_echelon(ExactMatrix a, long cols);

// One exact nullspace vector: free variables set to 0 except the last free
// column set to 1, pivots by back-substitution.  Throws EmptyNullspace if
// the matrix has full column rank.
std::vector<GaussianRational> exact_nullspace_vector(const ExactEchelon& ech);

// One-sided Jacobi SVD: A = U diag(sigma) V^*, computed by orthogonalizing
// the columns of A with unitary plane rotations accumulated into V.
struct SvdResult {
    std::vector<BigFloat> sigma;   // descending
    NumericMatrix right;           // right[j] is the singular vector of sigma[j]
};

SvdResult jacobi_svd(const NumericMatrix& a_rows);

// Number of singular values above the threshold.
long numeric_rank(const SvdResult& svd, const BigFloat& threshold);

}  // namespace hpms

#endif
