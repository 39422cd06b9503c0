#include "hpms/reconstruction.hpp"

#include <algorithm>

#include "hpms/errors.hpp"
#include "hpms/roots.hpp"

namespace hpms {

namespace {

BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

BigFloat solution_eps(const HPSolution& sol) {
    return sol.prec_bits ? half_precision_eps(sol.prec_bits) : working_half_eps();
}

// det of a small complex matrix by elimination with partial pivoting
BigComplex small_det(std::vector<std::vector<BigComplex>> a) {
    const std::size_t n = a.size();
    BigComplex det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (a[r][c].abs() > a[piv][c].abs()) piv = r;
        if (a[piv][c].is_zero()) return BigComplex(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            BigComplex f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

void finish_table(CandidateTable& table) {
    BigFloat sep = ldexp(BigFloat(1), 400);
    for (std::size_t i = 0; i < table.candidates.size(); ++i) {
        if (!table.candidates[i].valid) continue;
        for (std::size_t j = i + 1; j < table.candidates.size(); ++j) {
            if (!table.candidates[j].valid) continue;
            sep = std::min(sep,
                           (table.candidates[i].value - table.candidates[j].value).abs());
        }
    }
    table.separation = sep;
}

}  // namespace

BigComplex ratio_eval(const HPSolution& sol, const std::vector<int>& J,
                      const std::vector<int>& I, const BigComplex& z) {
    const auto& pJ = sol.poly(J);
    const auto& pI = sol.poly(I);
    BigFloat scale(0);
    for (const auto& c : pI) scale = std::max(scale, c.abs());
    BigComplex den = horner(pI, z);
    if (den.abs() <= solution_eps(sol) * scale)
        throw DenominatorNearZero("P_I vanishes at the evaluation point");
    return horner(pJ, z) / den;
}

CandidateTable subset_sum_oracle(const CurveContext& ctx, const ExprPtr& f,
                                 const GermSpec& spec, int k, const BigComplex& z) {
    auto fiber = ctx.fiber(z);
    const int sheets = static_cast<int>(fiber.roots.size());
    std::vector<BigComplex> fvals;
    for (const auto& w : fiber.roots) fvals.push_back(eval_at(f, z, w));

    CandidateTable table;
    table.z = z;
    table.k = k;
    table.germ_sheet = ctx.germ_branch_at(spec, z).sheet;
    for (const auto& S : k_subsets(sheets, k)) {
        Candidate c;
        c.branch_subset = S;
        for (int s : S) {
            c.value += fvals[static_cast<std::size_t>(s)];
            if (s == table.germ_sheet) c.contains_germ_branch = true;
        }
        table.candidates.push_back(std::move(c));
    }
    finish_table(table);
    return table;
}

CandidateTable minor_ratio_candidates(const CurveContext& ctx, const std::vector<ExprPtr>& fs,
                                      const GermSpec& spec, const std::vector<int>& J,
                                      const std::vector<int>& I, int k, const BigComplex& z) {
    auto fiber = ctx.fiber(z);
    const int sheets = static_cast<int>(fiber.roots.size());
    // value of f_j on each branch; f_0 is the constant 1
    std::vector<std::vector<BigComplex>> fval(static_cast<std::size_t>(sheets));
    for (int s = 0; s < sheets; ++s) {
        fval[static_cast<std::size_t>(s)].push_back(BigComplex(1));
        for (const auto& f : fs)
            fval[static_cast<std::size_t>(s)].push_back(
                eval_at(f, z, fiber.roots[static_cast<std::size_t>(s)]));
    }

    BigFloat scale(1);
    for (const auto& row : fval)
        for (const auto& v : row) scale = std::max(scale, v.abs());
    BigFloat tiny = working_half_eps() * scale;

    CandidateTable table;
    table.z = z;
    table.k = k;
    table.germ_sheet = ctx.germ_branch_at(spec, z).sheet;
    for (const auto& S : k_subsets(sheets, k)) {
        Candidate c;
        c.branch_subset = S;
        for (int s : S)
            if (s == table.germ_sheet) c.contains_germ_branch = true;
        auto minor = [&](const std::vector<int>& cols) {
            std::vector<std::vector<BigComplex>> a;
            for (int s : S) {
                std::vector<BigComplex> row;
                for (int j : cols) row.push_back(fval[static_cast<std::size_t>(s)]
                                                     [static_cast<std::size_t>(j)]);
                a.push_back(std::move(row));
            }
            return small_det(std::move(a));
        };
        BigComplex di = minor(I);
        if (di.abs() <= tiny) {
            c.valid = false;  // singular I-minor: candidate absent
        } else {
            c.value = minor(J) / di;
        }
        table.candidates.push_back(std::move(c));
    }
    finish_table(table);
    return table;
}

ReconPoint infer_limit_and_rate(const std::vector<std::pair<long, HPSolution>>& sols,
                                const CandidateTable& table, const std::vector<int>& J,
                                const std::vector<int>& I, const BigComplex& z,
                                bool disconnected) {
    ReconPoint rp;
    rp.z = z;
    rp.disconnected_warning = disconnected;

    std::vector<std::pair<long, const HPSolution*>> ordered;
    for (const auto& [n, sol] : sols) ordered.emplace_back(n, &sol);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [n, sol] : ordered) {
        try {
            rp.ratios.push_back(ratio_eval(*sol, J, I, z));
            rp.ns.push_back(n);
        } catch (const DenominatorNearZero&) {
            rp.skipped.push_back(n);
        }
    }
    if (rp.ns.size() < 2)
        throw NoUsableN("fewer than 2 n values produced a usable ratio");

    // match the largest-n ratio to the nearest valid candidate
    const BigComplex& last = rp.ratios.back();
    const Candidate* best = nullptr;
    BigFloat bestd(0);
    for (const auto& c : table.candidates) {
        if (!c.valid) continue;
        BigFloat d = (last - c.value).abs();
        if (!best || d < bestd) {
            best = &c;
            bestd = d;
        }
    }
    if (!best) throw Error("candidate table has no valid entries");
    rp.matched_subset = best->branch_subset;
    rp.germ_branch_in_subset = best->contains_germ_branch;

    for (const auto& r : rp.ratios) rp.errors.push_back((r - best->value).abs());
    rp.final_error = rp.errors.back();

    for (const auto& c : table.candidates) {
        if (!c.valid || &c == best) continue;
        if ((last - c.value).abs() <= 10 * rp.final_error) rp.ambiguous = true;
    }

    // geometric fit over the longest strictly-decreasing positive tail
    std::size_t tail = 1;
    while (tail < rp.errors.size() &&
           rp.errors[rp.errors.size() - tail - 1] > rp.errors[rp.errors.size() - tail] &&
           rp.errors[rp.errors.size() - tail - 1] > 0)
        ++tail;
    if (tail >= 4 && rp.errors.back() > 0) {
        std::size_t first = rp.errors.size() - tail;
        BigFloat sx(0), sy(0), sxx(0), sxy(0), cnt(static_cast<long>(tail));
        for (std::size_t i = first; i < rp.errors.size(); ++i) {
            BigFloat x(rp.ns[i]);
            BigFloat y = log(rp.errors[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        BigFloat denom = cnt * sxx - sx * sx;
        if (denom != 0) {
            BigFloat slope = (cnt * sxy - sx * sy) / denom;
            BigFloat intercept = (sy - slope * sx) / cnt;
            BigFloat ss_res(0), ss_tot(0), mean = sy / cnt;
            for (std::size_t i = first; i < rp.errors.size(); ++i) {
                BigFloat y = log(rp.errors[i]);
                BigFloat fit = slope * BigFloat(rp.ns[i]) + intercept;
                ss_res += (y - fit) * (y - fit);
                ss_tot += (y - mean) * (y - mean);
            }
            rp.rate = exp(slope);
            rp.r_squared = ss_tot > 0 ? 1 - ss_res / ss_tot : BigFloat(1);
            rp.rate_available = true;
        }
    }
    return rp;
}

std::vector<ZeroCluster> export_zeros(const HPSolution& sol, const std::vector<int>& I) {
    const auto& coeffs = sol.poly(I);
    unsigned bits = sol.prec_bits
                        ? sol.prec_bits
                        : static_cast<unsigned>(BigFloat::default_precision() * 3.32);
    BigFloat merge_tol = ldexp(BigFloat(1), -static_cast<long>(bits / 4));
    auto roots = aberth_roots(coeffs, merge_tol);
    std::vector<ZeroCluster> out;
    for (auto& cl : cluster_roots(std::move(roots), merge_tol))
        out.push_back({cl.value, cl.multiplicity});
    std::sort(out.begin(), out.end(), [](const ZeroCluster& a, const ZeroCluster& b) {
        if (a.z.re != b.z.re) return a.z.re < b.z.re;
        return a.z.im < b.z.im;
    });
    return out;
}

}  // namespace hpms
