#ifndef HPMS_CONTINUATION_HPP
#define HPMS_CONTINUATION_HPP

#include <optional>
#include <vector>

#include "hpms/curve.hpp"
#include "hpms/germ.hpp"
#include "hpms/roots.hpp"

namespace hpms {

// Piecewise path in the z-plane: straight segments and circular arcs.
struct PathSegment {
    enum class Kind { Line, Arc } kind;
    // Line: from a to b.  Arc: center, radius, angles ang0 -> ang1 (radians,
    // increasing = counterclockwise; |ang1 - ang0| may exceed pi).
    BigComplex a, b;
    BigComplex center;
    BigFloat radius, ang0, ang1;

    static PathSegment line(BigComplex from, BigComplex to);
    static PathSegment arc(BigComplex center, BigFloat radius, BigFloat ang0, BigFloat ang1);
    BigComplex point(const BigFloat& s) const;  // s in [0,1]
    BigFloat length() const;
};

struct Path {
    std::vector<PathSegment> segs;
    BigComplex start() const { return segs.front().point(BigFloat(0)); }
    BigComplex end() const { return segs.back().point(BigFloat(1)); }
    Path reversed() const;
};

// Nearest-neighbour matching of tracked values against target roots:
// result[i] is the index in `to` closest to from[i].  Throws SheetAmbiguity
// when a value is not clearly closest to one target (factor 3), and
// PermutationCollision when two values claim the same target.
std::vector<int> match_roots(const std::vector<BigComplex>& from,
                             const std::vector<BigComplex>& to);

struct FiberRoots {
    BigComplex z;
    std::vector<BigComplex> roots;  // canonical (re, im)-lex order, size m+1
    BigFloat separation;            // min pairwise distance
};

struct CriticalValues {
    std::vector<BigComplex> finite;
    bool infinity_critical = false;
};

// Curve services: critical values, fibers, analytic continuation of roots.
// Critical values and the clearance radius are computed once and cached.
class CurveContext {
  public:
    explicit CurveContext(AlgebraicCurve curve);

    const AlgebraicCurve& curve() const { return curve_; }
    const CriticalValues& critical_values() const;
    const BigFloat& clearance() const;
    BigFloat max_critical_radius() const;  // max |finite critical value|

    FiberRoots fiber(const BigComplex& z) const;
    // Fiber without the degenerate-point guard (loop construction interior).
    std::vector<BigComplex> raw_fiber(const BigComplex& z) const;

    // Track the whole fiber along the path.  start_roots must be the fiber
    // at path.start() in any order; returns their continuations in the same
    // order.  Predictor-corrector with adaptive stepping.
    std::vector<BigComplex> track(const Path& path, std::vector<BigComplex> start_roots) const;

    // Single-root continuation per the one-branch contract.
    BigComplex continue_branch(const Path& path, const BigComplex& start_root) const;

    // Straight path from p to q with counterclockwise semicircle detours
    // around critical values closer than the clearance radius.
    Path path_avoiding(const BigComplex& p, const BigComplex& q) const;

    // Value (and canonical sheet index at z) of the branch anchored at
    // infinity by spec, continued down from the reference radius.
    struct BranchValue {
        BigComplex value;
        int sheet;
    };
    BranchValue germ_branch_at(const GermSpec& spec, const BigComplex& z) const;

    // Reference point for infinity-anchored continuations.
    BigComplex reference_point() const;

  private:
    AlgebraicCurve curve_;
    mutable std::optional<CriticalValues> cvs_;
    mutable std::optional<BigFloat> clearance_;
};

}  // namespace hpms

#endif
