#ifndef HPMS_RECONSTRUCTION_HPP
#define HPMS_RECONSTRUCTION_HPP

#include <vector>

#include "hpms/continuation.hpp"
#include "hpms/hp_system.hpp"
#include "hpms/monodromy.hpp"

namespace hpms {

// Horner evaluation of P_{n;J}(z) / P_{n;I}(z).  Throws DenominatorNearZero
// when |P_{n;I}(z)| falls below 2^{-prec/2} times the coefficient scale
// (a spurious-pole point for this n).
BigComplex ratio_eval(const HPSolution& sol, const std::vector<int>& J,
                      const std::vector<int>& I, const BigComplex& z);

struct Candidate {
    std::vector<int> branch_subset;  // sheet labels in canonical fiber order at z
    BigComplex value;
    bool valid = true;               // false when the I-minor is singular
    bool contains_germ_branch = false;
};

struct CandidateTable {
    BigComplex z;
    int k = 1;
    int germ_sheet = -1;
    std::vector<Candidate> candidates;  // one per k-subset of branches, lex order
    BigFloat separation;                // min pairwise distance of valid values
};

// Power-tuple candidates: all k-fold sums of branch values of f at z.
CandidateTable subset_sum_oracle(const CurveContext& ctx, const ExprPtr& f,
                                 const GermSpec& spec, int k, const BigComplex& z);

// General-tuple candidates: for each branch subset S the ratio of the k x k
// minors det(f_{J}) / det(f_{I}) with rows the branches in S.  A singular
// I-minor marks the candidate invalid instead of failing.
CandidateTable minor_ratio_candidates(const CurveContext& ctx, const std::vector<ExprPtr>& fs,
                                      const GermSpec& spec, const std::vector<int>& J,
                                      const std::vector<int>& I, int k, const BigComplex& z);

struct ReconPoint {
    BigComplex z;
    std::vector<long> ns;            // n values that produced a ratio
    std::vector<BigComplex> ratios;  // same order as ns
    std::vector<long> skipped;       // n values skipped (spurious pole)
    std::vector<int> matched_subset;
    bool germ_branch_in_subset = false;
    std::vector<BigFloat> errors;    // |ratio - matched candidate| per usable n
    BigFloat final_error;
    bool rate_available = false;
    BigFloat rate;                   // fitted geometric factor rho
    BigFloat r_squared;
    bool ambiguous = false;
    bool disconnected_warning = false;
};

// Matches the largest-n ratio against the candidate table, reports the error
// sequence and a geometric rate fit over the monotone-decreasing tail
// (>= 4 points).  Throws NoUsableN when fewer than 2 ratios survive.
ReconPoint infer_limit_and_rate(const std::vector<std::pair<long, HPSolution>>& sols,
                                const CandidateTable& table, const std::vector<int>& J,
                                const std::vector<int>& I, const BigComplex& z,
                                bool disconnected = false);

struct ZeroCluster {
    BigComplex z;
    int multiplicity = 1;
};

// All zeros of P_{n;I}, with clusters closer than 2^{-prec/4} merged.
std::vector<ZeroCluster> export_zeros(const HPSolution& sol, const std::vector<int>& I);

}  // namespace hpms

#endif
