#include "hpms/continuation.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>

#include "hpms/errors.hpp"

namespace hpms {

namespace {

BigFloat pi() { return boost::math::constants::pi<BigFloat>(); }

}  // namespace

std::vector<int> match_roots(const std::vector<BigComplex>& from,
                             const std::vector<BigComplex>& to) {
    // nearest-neighbour matching with collision detection
    std::vector<int> map(from.size(), -1);
    std::vector<bool> taken(to.size(), false);
    for (std::size_t i = 0; i < from.size(); ++i) {
        std::vector<std::pair<BigFloat, int>> dist;
        for (std::size_t j = 0; j < to.size(); ++j)
            dist.emplace_back((from[i] - to[j]).abs(), static_cast<int>(j));
        std::sort(dist.begin(), dist.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        int best = dist[0].second;
        if (taken[static_cast<std::size_t>(best)])
            throw PermutationCollision("two tracked roots matched the same target");
        if (dist.size() > 1 && !(dist[0].first * 3 < dist[1].first))
            throw SheetAmbiguity("tracked root is not clearly closest to one target");
        taken[static_cast<std::size_t>(best)] = true;
        map[i] = best;
    }
    return map;
}

PathSegment PathSegment::line(BigComplex from, BigComplex to) {
    PathSegment s;
    s.kind = Kind::Line;
    s.a = std::move(from);
    s.b = std::move(to);
    return s;
}

PathSegment PathSegment::arc(BigComplex center, BigFloat radius, BigFloat ang0, BigFloat ang1) {
    PathSegment s;
    s.kind = Kind::Arc;
    s.center = std::move(center);
    s.radius = std::move(radius);
    s.ang0 = std::move(ang0);
    s.ang1 = std::move(ang1);
    return s;
}

BigComplex PathSegment::point(const BigFloat& s) const {
    if (kind == Kind::Line) return a + (b - a) * BigComplex(s);
    BigFloat th = ang0 + (ang1 - ang0) * s;
    return center + BigComplex(radius * cos(th), radius * sin(th));
}

BigFloat PathSegment::length() const {
    if (kind == Kind::Line) return (b - a).abs();
    BigFloat d = ang1 - ang0;
    if (d < 0) d = -d;
    return radius * d;
}

Path Path::reversed() const {
    Path r;
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        PathSegment s = *it;
        if (s.kind == PathSegment::Kind::Line)
            std::swap(s.a, s.b);
        else
            std::swap(s.ang0, s.ang1);
        r.segs.push_back(std::move(s));
    }
    return r;
}

CurveContext::CurveContext(AlgebraicCurve curve) : curve_(std::move(curve)) {}

const CriticalValues& CurveContext::critical_values() const {
    if (cvs_) return *cvs_;
    QPoly res = curve_.resultant_z();
    if (qpoly::is_zero(res))
        throw Error("curve is not square-free in w (vanishing discriminant)");

    std::vector<BigComplex> candidates;
    auto add_roots = [&](const QPoly& p) {
        if (qpoly::degree(p) < 1) return;
        std::vector<BigComplex> c;
        for (const auto& q : p) c.push_back(to_bigcomplex(q));
        for (auto& r : aberth_roots(std::move(c))) candidates.push_back(std::move(r));
    };
    add_roots(res);
    add_roots(curve_.leading_wcoeff());

    BigFloat scale(1);
    for (const auto& r : candidates) scale = std::max(scale, r.abs());
    std::vector<BigComplex> finite;
    for (auto& cl : cluster_roots(std::move(candidates), working_quarter_eps() * scale))
        finite.push_back(cl.value);
    canonical_sort(finite);

    CriticalValues out;
    out.finite = std::move(finite);
    cvs_ = std::move(out);

    // clearance from the finite values
    BigFloat cl(1);
    if (cvs_->finite.size() >= 2)
        cl = std::min(BigFloat(1), min_pairwise_distance(cvs_->finite) / 2);
    clearance_ = cl;

    // infinity is critical iff the loop around all finite critical values
    // permutes the fiber nontrivially
    BigFloat R = 2 * max_critical_radius() + 2;
    Path circle;
    circle.segs.push_back(PathSegment::arc(BigComplex(0), R, BigFloat(0), 2 * pi()));
    auto start = raw_fiber(BigComplex(R));
    auto end = track(circle, start);
    auto map = match_roots(end, start);
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != static_cast<int>(i)) {
            cvs_->infinity_critical = true;
            break;
        }
    return *cvs_;
}

const BigFloat& CurveContext::clearance() const {
    critical_values();
    return *clearance_;
}

BigFloat CurveContext::max_critical_radius() const {
    critical_values();
    BigFloat r(0);
    for (const auto& c : cvs_->finite) r = std::max(r, c.abs());
    return r;
}

std::vector<BigComplex> CurveContext::raw_fiber(const BigComplex& z) const {
    auto poly = curve_.fiber_poly(z);
    if (poly.back().abs() == 0)
        throw DegenerateFiber("leading coefficient vanishes at this point");
    auto roots = aberth_roots(poly);
    canonical_sort(roots);
    return roots;
}

FiberRoots CurveContext::fiber(const BigComplex& z) const {
    for (const auto& cv : critical_values().finite)
        if ((z - cv).abs() < clearance())
            throw DegenerateFiber("point is within clearance of a critical value");
    FiberRoots fr;
    fr.z = z;
    fr.roots = raw_fiber(z);
    fr.separation = min_pairwise_distance(fr.roots);

    // polish-residual sanity at half precision
    BigFloat scale(0);
    auto poly = curve_.fiber_poly(z);
    BigFloat wmax(1);
    for (const auto& w : fr.roots) wmax = std::max(wmax, w.abs());
    BigFloat wpow(1);
    for (unsigned j = 0; j <= curve_.degw(); ++j) {
        scale = std::max(scale, poly[j].abs() * wpow);
        wpow *= wmax;
    }
    for (const auto& w : fr.roots)
        if (curve_.eval(z, w).abs() > working_half_eps() * scale)
            throw Error("fiber root residual exceeds tolerance");
    return fr;
}

std::vector<BigComplex> CurveContext::track(const Path& path,
                                            std::vector<BigComplex> w) const {
    const BigFloat cl = clearance();
    long bits = static_cast<long>(BigFloat::default_precision() * 3.32);
    BigFloat newton_tol = ldexp(BigFloat(1), -(bits - 16));
    BigFloat floor_frac = ldexp(BigFloat(1), -33);

    for (const auto& seg : path.segs) {
        BigFloat len = seg.length();
        if (len == 0) continue;
        BigFloat s(0), h = std::min(BigFloat(1), cl / (8 * len));
        int streak = 0;
        BigComplex z0 = seg.point(s);
        BigFloat sep0 = min_pairwise_distance(w);
        while (s < 1) {
            if (h > 1 - s) h = 1 - s;
            BigComplex z1 = seg.point(s + h);
            BigComplex dz = z1 - z0;
            bool ok = true;
            std::vector<BigComplex> next(w.size());
            for (std::size_t i = 0; i < w.size() && ok; ++i) {
                BigComplex pw = curve_.dw(z0, w[i]);
                if (pw.is_zero()) {
                    ok = false;
                    break;
                }
                BigComplex wi = w[i] - dz * (curve_.dz(z0, w[i]) / pw);
                // Newton correction at z1
                bool converged = false;
                for (int it = 0; it < 40; ++it) {
                    BigComplex d = curve_.dw(z1, wi);
                    if (d.is_zero()) break;
                    BigComplex delta = curve_.eval(z1, wi) / d;
                    wi -= delta;
                    if (delta.abs() <= newton_tol * std::max(BigFloat(1), wi.abs())) {
                        converged = true;
                        break;
                    }
                }
                if (!converged || (wi - w[i]).abs() >= sep0 / 3) {
                    ok = false;
                    break;
                }
                next[i] = wi;
            }
            if (ok && w.size() > 1 && min_pairwise_distance(next) == 0) ok = false;
            if (ok) {
                s += h;
                z0 = z1;
                w = std::move(next);
                sep0 = min_pairwise_distance(w);
                if (++streak >= 4) {
                    h *= 2;
                    streak = 0;
                }
            } else {
                h /= 2;
                streak = 0;
                if (h * len < cl * floor_frac)
                    throw StepCollapse("adaptive step fell below the floor");
            }
        }
    }
    return w;
}

BigComplex CurveContext::continue_branch(const Path& path, const BigComplex& start_root) const {
    auto fiber0 = raw_fiber(path.start());
    BigFloat sep = min_pairwise_distance(fiber0);
    int idx = -1;
    for (std::size_t j = 0; j < fiber0.size(); ++j) {
        if ((start_root - fiber0[j]).abs() < sep / 2) {
            if (idx >= 0) throw SheetAmbiguity("start root matches two fiber roots");
            idx = static_cast<int>(j);
        }
    }
    if (idx < 0) throw SheetAmbiguity("start root does not match a fiber root");
    auto end = track(path, fiber0);
    return end[static_cast<std::size_t>(idx)];
}

Path CurveContext::path_avoiding(const BigComplex& p, const BigComplex& q) const {
    const BigFloat cl = clearance();
    Path path;
    BigComplex dir = q - p;
    BigFloat len = dir.abs();
    if (len == 0) {
        path.segs.push_back(PathSegment::line(p, q));
        return path;
    }
    BigComplex u = dir / BigComplex(len);

    struct Detour {
        BigFloat t;  // foot parameter along p->q (z-plane units)
        BigComplex c;
        BigFloat d;  // distance of c from the line
    };
    std::vector<Detour> detours;
    for (const auto& cv : critical_values().finite) {
        BigComplex rel = (cv - p) * u.conj();
        BigFloat t = rel.re, d = abs(rel.im);
        if (t <= 0 || t >= len) continue;
        if (d >= cl) continue;
        detours.push_back({t, cv, d});
    }
    std::sort(detours.begin(), detours.end(),
              [](const Detour& a, const Detour& b) { return a.t < b.t; });

    BigComplex cur = p;
    for (const auto& dt : detours) {
        BigFloat half = sqrt(cl * cl - dt.d * dt.d);
        BigComplex A = p + u * BigComplex(dt.t - half);
        BigComplex B = p + u * BigComplex(dt.t + half);
        BigComplex ra = A - dt.c, rb = B - dt.c;
        BigFloat angA = atan2(ra.im, ra.re), angB = atan2(rb.im, rb.re);
        BigFloat delta = angB - angA;
        BigFloat two_pi = 2 * pi();
        while (delta <= 0) delta += two_pi;  // counterclockwise detour side
        path.segs.push_back(PathSegment::line(cur, A));
        path.segs.push_back(PathSegment::arc(dt.c, cl, angA, angA + delta));
        cur = B;
    }
    path.segs.push_back(PathSegment::line(cur, q));
    return path;
}

BigComplex CurveContext::reference_point() const {
    critical_values();
    return BigComplex(4 * max_critical_radius() + 4);
}

CurveContext::BranchValue CurveContext::germ_branch_at(const GermSpec& spec,
                                                       const BigComplex& z) const {
    BigComplex zref = reference_point();
    long order = 96;
    auto ws = germ_w_series<BigComplex>(curve_, spec, order);
    BigComplex wref = evaluate(ws, BigComplex(1) / zref);

    auto fref = raw_fiber(zref);
    BigFloat sep = min_pairwise_distance(fref);
    int idx = -1;
    for (std::size_t j = 0; j < fref.size(); ++j)
        if ((wref - fref[j]).abs() < sep / 3) idx = static_cast<int>(j);
    if (idx < 0)
        throw SheetAmbiguity("germ series value does not single out a fiber root at the "
                             "reference point");

    Path path = path_avoiding(zref, z);
    auto end = track(path, fref);
    BigComplex val = end[static_cast<std::size_t>(idx)];

    auto fz = raw_fiber(z);
    auto map = match_roots(std::vector<BigComplex>{val}, fz);
    return {val, map[0]};
}

}  // namespace hpms
