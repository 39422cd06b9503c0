#ifndef HPMS_MONODROMY_HPP
#define HPMS_MONODROMY_HPP

#include <optional>
#include <vector>

#include "hpms/continuation.hpp"

namespace hpms {

// Permutations are stored as image tables: p[i] is where label i goes.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& first, const Perm& then);  // apply first, then then
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);
// Cycle lengths, descending (a partition of the label count).
std::vector<int> cycle_type(const Perm& p);

// Monodromy data on sheet labels (k = 1) or on k-subsets of sheets.
struct MonodromyAction {
    int k = 1;
    BigComplex base;                          // base point z*
    std::vector<BigComplex> critical_values;  // loop order: (argument, modulus) around z*
    std::vector<Perm> generators;             // one per critical value
    Perm infinity_perm;                       // inverse of the ordered product
    std::vector<std::vector<int>> labels;     // k-subsets, lexicographic
};

// Continuation-based generators on sheet labels.  PermutationCollision
// during tracking triggers a retry at doubled precision (at most twice).
// radius_factor scales the base-point radius (base-point independence runs).
MonodromyAction monodromy_generators(const AlgebraicCurve& curve, unsigned prec_bits = 192,
                                     double radius_factor = 1.0);

// The induced action on unordered k-subsets of sheets.
MonodromyAction ksubset_action(const MonodromyAction& gens, int k);

// Orbits as lists of label indices, sorted by size descending, then by
// smallest representative.
std::vector<std::vector<int>> connected_components(const MonodromyAction& action);

struct BranchingProfile {
    std::vector<BigComplex> critical_values;
    std::vector<std::vector<int>> cycle_types;  // per critical value
};

BranchingProfile branching_profile(const MonodromyAction& gens);

struct SimpleBranchingResult {
    bool simple = false;
    std::optional<BigComplex> witness;  // offending critical value
};

// True iff every finite generator is a single transposition.
SimpleBranchingResult simple_branching_check(const BranchingProfile& profile);

// Syntactic detector for w^{m+1} = R(z) with m >= 3 (expected to give
// disconnected k-subset surfaces for k = 2 .. m-1).
bool cyclic_disconnection_expected(const AlgebraicCurve& curve);

}  // namespace hpms

#endif
