#include "hpms/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hpms/errors.hpp"

namespace hpms {

using nlohmann::json;

namespace {

template <class S, class Str>
json series_json_impl(const S& s, Str&& coeff_string) {
    json j;
    j["valuation"] = s.is_zero() ? 0 : s.val();
    j["order"] = s.order();
    json coeffs = json::array();
    if (!s.is_zero())
        for (long e = s.val(); e <= s.top_exponent(); ++e)
            coeffs.push_back(coeff_string(s.coeff(e)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

}  // namespace

json series_to_json(const ExactSeries& s) {
    return series_json_impl(s, [](const GaussianRational& c) { return to_string(c); });
}

json series_to_json(const NumericSeries& s, unsigned prec_bits) {
    json j = series_json_impl(s, [](const BigComplex& c) { return to_string(c); });
    j["prec_bits"] = prec_bits;
    return j;
}

ExactSeries exact_series_from_json(const json& j) {
    long val = j.at("valuation").get<long>();
    long order = j.at("order").get<long>();
    std::vector<GaussianRational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(parse_gaussian_rational(c.get<std::string>()));
    return ExactSeries::from_coeffs(val, std::move(coeffs), order);
}

json curve_to_json(const AlgebraicCurve& curve, const GermSpec& spec) {
    json j;
    j["m"] = curve.m();
    json terms = json::array();
    for (unsigned b = 0; b <= curve.degw(); ++b) {
        const auto& p = curve.wcoeff(b);
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (p[a].is_zero()) continue;
            terms.push_back({{"za", a}, {"wb", b}, {"c", to_string(p[a])}});
        }
    }
    j["terms"] = std::move(terms);
    if (spec.has_pole)
        j["branch"] = {{"pole_order", spec.pole_order}, {"leading", to_string(spec.anchor)}};
    else
        j["branch"] = {{"value", to_string(spec.anchor)}};
    return j;
}

std::pair<AlgebraicCurve, GermSpec> curve_from_json(const json& j) {
    unsigned m = j.at("m").get<unsigned>();
    std::vector<AlgebraicCurve::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({t.at("za").get<unsigned>(), t.at("wb").get<unsigned>(),
                         parse_gaussian_rational(t.at("c").get<std::string>())});
    AlgebraicCurve curve(m, terms);

    const auto& b = j.at("branch");
    GermSpec spec = b.contains("pole_order")
                        ? GermSpec::pole(b.at("pole_order").get<unsigned>(),
                                         parse_gaussian_rational(
                                             b.at("leading").get<std::string>()))
                        : GermSpec::regular(parse_gaussian_rational(
                              b.at("value").get<std::string>()));
    return {std::move(curve), std::move(spec)};
}

std::pair<AlgebraicCurve, GermSpec> load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open curve file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("malformed curve file " + path + ": " + e.what());
    }
    return curve_from_json(j);
}

json solution_to_json(const HPSolution& sol) {
    json j;
    j["m"] = sol.m;
    j["n"] = sol.n;
    j["k"] = sol.k;
    j["backend"] = sol.backend == Backend::Exact ? "exact" : "numeric";
    j["prec_bits"] = sol.prec_bits;
    j["nullspace_dim"] = sol.nullspace_dim;
    j["max_residual"] = sol.max_residual.str();
    j["subsets"] = sol.subsets;
    json polys = json::array();
    if (sol.backend == Backend::Exact) {
        for (const auto& p : sol.exact_polys) {
            json coeffs = json::array();
            for (const auto& c : p) coeffs.push_back(to_string(c));
            polys.push_back(std::move(coeffs));
        }
    } else {
        for (const auto& p : sol.polys) {
            json coeffs = json::array();
            for (const auto& c : p) coeffs.push_back(to_string(c));
            polys.push_back(std::move(coeffs));
        }
    }
    j["polynomials"] = std::move(polys);
    return j;
}

json monodromy_to_json(const MonodromyAction& action,
                       const std::vector<std::vector<int>>& orbits, bool simple_branching) {
    json j;
    j["k"] = action.k;
    j["base_point"] = to_string(action.base);
    json cvs = json::array();
    for (const auto& cv : action.critical_values) cvs.push_back(to_string(cv));
    j["critical_values"] = std::move(cvs);
    j["permutations"] = action.generators;
    j["infinity_permutation"] = action.infinity_perm;
    json os = json::array();
    for (const auto& o : orbits) {
        json subsets = json::array();
        for (int idx : o) subsets.push_back(action.labels[static_cast<std::size_t>(idx)]);
        os.push_back({{"size", o.size()}, {"subsets", std::move(subsets)}});
    }
    j["orbits"] = std::move(os);
    j["connected"] = orbits.size() == 1;
    j["simple_branching"] = simple_branching;
    return j;
}

json recon_to_json(const ReconPoint& rp) {
    json j;
    j["z"] = to_string(rp.z);
    j["n_values"] = rp.ns;
    json ratios = json::array();
    for (const auto& r : rp.ratios) ratios.push_back(to_string(r));
    j["ratios"] = std::move(ratios);
    j["skipped_n"] = rp.skipped;
    j["matched_subset"] = rp.matched_subset;
    j["germ_branch_in_subset"] = rp.germ_branch_in_subset;
    json errs = json::array();
    for (const auto& e : rp.errors) errs.push_back(e.str());
    j["errors"] = std::move(errs);
    j["final_error"] = rp.final_error.str();
    j["rate_available"] = rp.rate_available;
    if (rp.rate_available) {
        j["rate"] = rp.rate.str();
        j["r_squared"] = rp.r_squared.str();
    }
    j["ambiguous"] = rp.ambiguous;
    j["disconnected_warning"] = rp.disconnected_warning;
    return j;
}

std::string errors_to_csv(const ReconPoint& rp) {
    std::ostringstream os;
    os << "n,abs_error,skipped\n";
    std::size_t ui = 0, si = 0;
    while (ui < rp.ns.size() || si < rp.skipped.size()) {
        bool take_skip = si < rp.skipped.size() &&
                         (ui >= rp.ns.size() || rp.skipped[si] < rp.ns[ui]);
        if (take_skip) {
            os << rp.skipped[si] << ",,1\n";
            ++si;
        } else {
            os << rp.ns[ui] << "," << rp.errors[ui].str() << ",0\n";
            ++ui;
        }
    }
    return os.str();
}

std::string zeros_to_csv(const std::vector<ZeroCluster>& zeros) {
    std::ostringstream os;
    os << "re,im,multiplicity\n";
    for (const auto& z : zeros)
        os << z.z.re.str() << "," << z.z.im.str() << "," << z.multiplicity << "\n";
    return os.str();
}

std::string zeros_to_svg(const std::vector<ZeroCluster>& zeros,
                         const std::vector<BigComplex>& critical_values) {
    // fixed viewport [-2, 2] x [-2, 2], y up
    const double size = 600.0, half = 2.0;
    auto px = [&](double x) { return (x + half) / (2 * half) * size; };
    auto py = [&](double y) { return size - (y + half) / (2 * half) * size; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
       << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& cv : critical_values) {
        double x = px(to_double(cv.re)), y = py(to_double(cv.im));
        os << "  <path d=\"M " << x - 5 << " " << y - 5 << " L " << x + 5 << " " << y + 5
           << " M " << x - 5 << " " << y + 5 << " L " << x + 5 << " " << y - 5
           << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& z : zeros) {
        os << "  <circle cx=\"" << px(to_double(z.z.re)) << "\" cy=\""
           << py(to_double(z.z.im)) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hpms
