#ifndef HPMS_ROOTS_HPP
#define HPMS_ROOTS_HPP

#include <vector>

#include "hpms/numbers.hpp"

namespace hpms {

// All complex roots of a polynomial (ascending coefficients) by simultaneous
// Aberth--Ehrlich iteration from perturbed circle guesses, Newton-polished.
// Leading coefficients with |c| <= drop_tol * max|c| are dropped first
// (drop_tol = 0 keeps exact degrees).
std::vector<BigComplex> aberth_roots(std::vector<BigComplex> coeffs,
                                     const BigFloat& drop_tol = BigFloat(0));

struct RootCluster {
    BigComplex value;
    int multiplicity;
};

// Greedy clustering of near-coincident roots within tol.
std::vector<RootCluster> cluster_roots(std::vector<BigComplex> roots, const BigFloat& tol);

// Canonical labeling: lexicographic by (real part, imaginary part).
void canonical_sort(std::vector<BigComplex>& values);

// Minimum pairwise distance; +inf substitute (huge value) for < 2 points.
BigFloat min_pairwise_distance(const std::vector<BigComplex>& values);

}  // namespace hpms

#endif
