#include "hpms/monodromy.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <functional>
#include <numeric>

#include "hpms/errors.hpp"
#include "hpms/hp_system.hpp"

namespace hpms {

Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& first, const Perm& then) {
    Perm p(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        p[i] = then[static_cast<std::size_t>(first[i])];
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return q;
}

bool perm_is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

namespace {

MonodromyAction generators_once(const AlgebraicCurve& curve, double radius_factor) {
    CurveContext ctx(curve);
    const auto& cvs = ctx.critical_values();
    const BigFloat cl = ctx.clearance();

    MonodromyAction act;
    act.k = 1;
    BigComplex base(BigFloat(radius_factor) * (2 * ctx.max_critical_radius() + 2));
    for (const auto& cv : cvs.finite)  // nudge off any critical value
        while ((base - cv).abs() < cl) base += BigComplex(cl);
    act.base = base;

    // loop order: by (argument, modulus) of cv - z*
    act.critical_values = cvs.finite;
    std::sort(act.critical_values.begin(), act.critical_values.end(),
              [&](const BigComplex& a, const BigComplex& b) {
                  BigComplex ra = a - base, rb = b - base;
                  BigFloat aa = atan2(ra.im, ra.re), ab = atan2(rb.im, rb.re);
                  if (aa != ab) return aa < ab;
                  return ra.abs() < rb.abs();
              });

    auto fiber = ctx.raw_fiber(base);
    int n = static_cast<int>(fiber.size());
    for (int s = 0; s < n; ++s)
        act.labels.push_back({s});

    Perm product = perm_identity(n);
    BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    for (const auto& cv : act.critical_values) {
        // approach the clearance circle around cv, detouring elsewhere
        BigComplex dir = (base - cv);
        BigComplex entry = cv + dir * BigComplex(cl / dir.abs());
        Path approach = ctx.path_avoiding(base, entry);
        BigComplex rel = entry - cv;
        BigFloat ang = atan2(rel.im, rel.re);

        Path loop = approach;
        loop.segs.push_back(PathSegment::arc(cv, cl, ang, ang + two_pi));
        for (const auto& seg : approach.reversed().segs) loop.segs.push_back(seg);

        auto end = ctx.track(loop, fiber);
        act.generators.push_back(match_roots(end, fiber));
        product = perm_compose(product, act.generators.back());
    }
    act.infinity_perm = perm_inverse(product);
    return act;
}

}  // namespace

MonodromyAction monodromy_generators(const AlgebraicCurve& curve, unsigned prec_bits,
                                     double radius_factor) {
    for (int attempt = 0;; ++attempt) {
        try {
            ScopedPrecision sp(prec_bits << attempt);
            return generators_once(curve, radius_factor);
        } catch (const PermutationCollision&) {
            if (attempt >= 2) throw;
        }
    }
}

MonodromyAction ksubset_action(const MonodromyAction& gens, int k) {
    const int n = static_cast<int>(gens.labels.size());
    if (k < 1 || k >= n) throw Error("ksubset_action: k out of range");

    MonodromyAction act;
    act.k = k;
    act.base = gens.base;
    act.critical_values = gens.critical_values;
    act.labels = k_subsets(n, k);

    auto lift = [&](const Perm& sigma) {
        Perm tau(act.labels.size());
        for (std::size_t i = 0; i < act.labels.size(); ++i) {
            std::vector<int> image;
            for (int s : act.labels[i]) image.push_back(sigma[static_cast<std::size_t>(s)]);
            std::sort(image.begin(), image.end());
            tau[i] = subset_index(act.labels, image);
        }
        return tau;
    };
    for (const auto& g : gens.generators) act.generators.push_back(lift(g));
    act.infinity_perm = lift(gens.infinity_perm);
    return act;
}

std::vector<std::vector<int>> connected_components(const MonodromyAction& action) {
    const int n = static_cast<int>(action.labels.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (const auto& g : action.generators)
        for (int i = 0; i < n; ++i) unite(i, g[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n && !action.infinity_perm.empty(); ++i)
        unite(i, action.infinity_perm[static_cast<std::size_t>(i)]);

    std::vector<std::vector<int>> orbits;
    std::vector<int> root_to_orbit(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_to_orbit[static_cast<std::size_t>(r)] < 0) {
            root_to_orbit[static_cast<std::size_t>(r)] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[static_cast<std::size_t>(root_to_orbit[static_cast<std::size_t>(r)])].push_back(i);
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return orbits;
}

BranchingProfile branching_profile(const MonodromyAction& gens) {
    BranchingProfile prof;
    prof.critical_values = gens.critical_values;
    for (const auto& g : gens.generators) prof.cycle_types.push_back(cycle_type(g));
    return prof;
}

SimpleBranchingResult simple_branching_check(const BranchingProfile& profile) {
    for (std::size_t i = 0; i < profile.cycle_types.size(); ++i) {
        const auto& t = profile.cycle_types[i];
        bool ok = !t.empty() && t[0] == 2 && (t.size() < 2 || t[1] == 1);
        if (!ok) return {false, profile.critical_values[i]};
    }
    return {true, std::nullopt};
}

bool cyclic_disconnection_expected(const AlgebraicCurve& curve) {
    return curve.m() >= 3 && curve.pure_radical_form();
}

}  // namespace hpms
