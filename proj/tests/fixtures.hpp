#ifndef HPMS_TEST_FIXTURES_HPP
#define HPMS_TEST_FIXTURES_HPP

#include "hpms/curve.hpp"
#include "hpms/germ.hpp"

namespace hpms::fixtures {

inline GaussianRational Q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }
inline GaussianRational Qi(long rn, long rd, long in_, long id) {
    return GaussianRational(Rational(rn, rd), Rational(in_, id));
}

// w^2 - (z^2 - 1), m = 1; branch w ~ z at infinity
inline AlgebraicCurve sqrt_curve() {
    return AlgebraicCurve(1, {{0, 2, Q(1)}, {2, 0, Q(-1)}, {0, 0, Q(1)}});
}
inline GermSpec sqrt_branch() { return GermSpec::pole(1, Q(1)); }

// w^3 - (z^3 - 1), m = 2; branch w ~ z
inline AlgebraicCurve cbrt_curve() {
    return AlgebraicCurve(2, {{0, 3, Q(1)}, {3, 0, Q(-1)}, {0, 0, Q(1)}});
}
inline GermSpec cbrt_branch() { return GermSpec::pole(1, Q(1)); }

// w^4 - (z^4 - 1), m = 3; branch w ~ z
inline AlgebraicCurve quartic_curve() {
    return AlgebraicCurve(3, {{0, 4, Q(1)}, {4, 0, Q(-1)}, {0, 0, Q(1)}});
}
inline GermSpec quartic_branch() { return GermSpec::pole(1, Q(1)); }

// w^4 - z, m = 3
inline AlgebraicCurve root4_curve() {
    return AlgebraicCurve(3, {{0, 4, Q(1)}, {1, 0, Q(-1)}});
}

// w^2 - z, m = 1
inline AlgebraicCurve root2_curve() {
    return AlgebraicCurve(1, {{0, 2, Q(1)}, {1, 0, Q(-1)}});
}

// minimal polynomial of sqrt(z) + sqrt(z-1): w^4 - 2(2z-1)w^2 + 1
inline AlgebraicCurve two_sqrt_curve() {
    return AlgebraicCurve(3, {{0, 4, Q(1)}, {1, 2, Q(-4)}, {0, 2, Q(2)}, {0, 0, Q(1)}});
}

// w^4 - z(z-1), m = 3 (pure radical, disconnected k-subset surfaces)
inline AlgebraicCurve radical4_curve() {
    return AlgebraicCurve(3, {{0, 4, Q(1)}, {2, 0, Q(-1)}, {1, 0, Q(1)}});
}

// w^5 - (z^2 + 1), m = 4
inline AlgebraicCurve radical5_curve() {
    return AlgebraicCurve(4, {{0, 5, Q(1)}, {2, 0, Q(-1)}, {0, 0, Q(-1)}});
}

// The z = (w^4-(1+i)w^3+3iw^2) / (w^2+(1+i)/3 w+i/3) curve, denominators
// cleared (times 3):  3w^4 - 3(1+i)w^3 + 9iw^2 - z(3w^2 + (1+i)w + i) = 0
inline AlgebraicCurve connected_quartic_curve() {
    return AlgebraicCurve(3, {
        {0, 4, Q(3)},
        {0, 3, Qi(-3, 1, -3, 1)},
        {0, 2, Qi(0, 1, 9, 1)},
        {1, 2, Q(-3)},
        {1, 1, Qi(-1, 1, -1, 1)},
        {1, 0, Qi(0, 1, -1, 1)},
    });
}

}  // namespace hpms::fixtures

#endif
