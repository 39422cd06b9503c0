#ifndef HPMS_JSON_IO_HPP
#define HPMS_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "hpms/curve.hpp"
#include "hpms/germ.hpp"
#include "hpms/hp_system.hpp"
#include "hpms/monodromy.hpp"
#include "hpms/reconstruction.hpp"
#include "hpms/series.hpp"

namespace hpms {

// Series files: { "valuation", "order", "coeffs": ["p/q+r/si", ...] }
// exactly; numeric series add "prec_bits" and use decimal strings.
nlohmann::json series_to_json(const ExactSeries& s);
nlohmann::json series_to_json(const NumericSeries& s, unsigned prec_bits);
ExactSeries exact_series_from_json(const nlohmann::json& j);

// Curve files: { "m", "terms": [ {"za","wb","c"}, ... ],
//               "branch": {"pole_order","leading"} | {"value"} }.
nlohmann::json curve_to_json(const AlgebraicCurve& curve, const GermSpec& spec);
std::pair<AlgebraicCurve, GermSpec> curve_from_json(const nlohmann::json& j);
std::pair<AlgebraicCurve, GermSpec> load_curve_file(const std::string& path);

nlohmann::json solution_to_json(const HPSolution& sol);

nlohmann::json monodromy_to_json(const MonodromyAction& action,
                                 const std::vector<std::vector<int>>& orbits,
                                 bool simple_branching);

nlohmann::json recon_to_json(const ReconPoint& rp);

// CSV exports (with a header row).
std::string errors_to_csv(const ReconPoint& rp);  // n, |error|, skipped
std::string zeros_to_csv(const std::vector<ZeroCluster>& zeros);  // re, im, multiplicity

// Fixed-viewport scatter: zeros as dots, critical values as crosses.
std::string zeros_to_svg(const std::vector<ZeroCluster>& zeros,
                         const std::vector<BigComplex>& critical_values);

}  // namespace hpms

#endif
