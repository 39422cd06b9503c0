// Command-line front end: germ expansion, system solving, reconstruction
// diagnostics, monodromy/connectedness, and zero export.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>

#include "hpms/errors.hpp"
#include "hpms/json_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hpms;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitRefused = 4;

struct Config {
    std::string curve_path;
    std::vector<std::string> f_exprs;
    bool power_tuple = false;
    int k = 1;
    long n = -1;
    std::string n_range;
    std::vector<std::string> points;
    std::string backend = "auto";
    unsigned prec_bits = 256;
    long order = 20;
    std::string out_dir = ".";
    bool strict = false;
    unsigned jobs = 1;

    std::string hash() const {
        std::string blob = curve_path + "|" + std::to_string(k) + "|" +
                           std::to_string(n) + "|" + n_range + "|" + backend + "|" +
                           std::to_string(prec_bits) + "|" + std::to_string(order) + "|" +
                           (power_tuple ? "p" : "g") + "|" + (strict ? "s" : "");
        for (const auto& f : f_exprs) blob += "|" + f;
        for (const auto& p : points) blob += "|" + p;
        std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
        for (unsigned char c : blob) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

std::vector<long> parse_n_list(const Config& cfg) {
    std::vector<long> ns;
    if (!cfg.n_range.empty()) {
        long start = 0, stop = 0, step = 1;
        if (std::sscanf(cfg.n_range.c_str(), "%ld:%ld:%ld", &start, &stop, &step) < 2 ||
            step <= 0 || stop < start)
            throw Error("bad --n-range, expected start:stop:step");
        for (long n = start; n <= stop; n += step) ns.push_back(n);
    } else if (cfg.n >= 1) {
        ns.push_back(cfg.n);
    }
    if (ns.empty()) throw Error("no n values given (use --n or --n-range)");
    return ns;
}

std::vector<BigComplex> parse_points(const Config& cfg) {
    std::vector<BigComplex> pts;
    for (const auto& tok : cfg.points) {
        if (fs::exists(tok)) {  // CSV file: one point per line, "re,im" or "a+bi"
            std::ifstream in(tok);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])) ||
                                      line[0] == '-' || line[0] == '+' || line[0] == 'i'))
                    continue;
                auto comma = line.find(',');
                if (comma == std::string::npos)
                    pts.push_back(parse_bigcomplex(line));
                else
                    pts.push_back(BigComplex(BigFloat(line.substr(0, comma)),
                                             BigFloat(line.substr(comma + 1))));
            }
        } else {
            pts.push_back(parse_bigcomplex(tok));
        }
    }
    if (pts.empty()) throw Error("no evaluation points given (use --points)");
    return pts;
}

std::vector<ExprPtr> parse_exprs(const Config& cfg) {
    if (cfg.f_exprs.empty()) throw Error("no --f expression given");
    std::vector<ExprPtr> out;
    for (const auto& s : cfg.f_exprs) out.push_back(parse_expr(s));
    return out;
}

void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path().empty() ? "." : p.parent_path());
    std::ofstream out(p);
    if (!out) throw Error("cannot write " + p.string());
    out << content;
}

void write_json(const fs::path& p, json j, const Config& cfg) {
    j["config_hash"] = cfg.hash();
    write_file(p, j.dump(2) + "\n");
}

bool use_exact(const Config& cfg, long n) {
    if (cfg.backend == "exact") return true;
    if (cfg.backend == "numeric") return false;
    return n <= 8;  // default: exact for small n, numeric beyond
}

HPSolution solve_for(const Config& cfg, const AlgebraicCurve& curve, const GermSpec& spec,
                     const std::vector<ExprPtr>& fs, long n, int k) {
    unsigned m = cfg.power_tuple ? curve.m() : static_cast<unsigned>(fs.size());
    long order = (static_cast<long>(m) + 1) * n;
    if (use_exact(cfg, n)) {
        ExactGermTuple germs =
            cfg.power_tuple
                ? power_tuple<GaussianRational>(curve, spec, fs.at(0), m, order)
                : expression_tuple<GaussianRational>(curve, spec, fs, order);
        return solve_hp(germs, n, k, Backend::Exact);
    }
    ScopedPrecision sp(cfg.prec_bits);
    NumericGermTuple germs =
        cfg.power_tuple ? power_tuple<BigComplex>(curve, spec, fs.at(0), m, order)
                        : expression_tuple<BigComplex>(curve, spec, fs, order);
    return solve_hp_numeric(germs, n, k, cfg.prec_bits);
}

int cmd_expand(const Config& cfg) {
    auto [curve, spec] = load_curve_file(cfg.curve_path);
    auto fs_ = parse_exprs(cfg);
    unsigned m = cfg.power_tuple ? curve.m() : static_cast<unsigned>(fs_.size());
    ExactGermTuple germs =
        cfg.power_tuple ? power_tuple<GaussianRational>(curve, spec, fs_.at(0), m, cfg.order)
                        : expression_tuple<GaussianRational>(curve, spec, fs_, cfg.order);
    for (unsigned j = 1; j <= m; ++j) {
        json out = series_to_json(germs.f(static_cast<int>(j)));
        write_json(fs::path(cfg.out_dir) / ("germ_f" + std::to_string(j) + ".json"), out,
                   cfg);
    }
    std::cout << "wrote " << m << " germ file(s) to " << cfg.out_dir << "\n";
    return kExitOk;
}

int cmd_solve(const Config& cfg) {
    auto [curve, spec] = load_curve_file(cfg.curve_path);
    auto fs_ = parse_exprs(cfg);
    auto ns = parse_n_list(cfg);
    ScopedPrecision sp(cfg.prec_bits);
    int failures = 0;
    for (long n : ns) {
        auto sol = solve_for(cfg, curve, spec, fs_, n, cfg.k);
        unsigned m = sol.m;
        long order = (static_cast<long>(m) + 1) * n;
        json j = solution_to_json(sol);

        ResidualReport ord, hom;
        if (sol.backend == Backend::Exact) {
            ExactGermTuple germs =
                cfg.power_tuple
                    ? power_tuple<GaussianRational>(curve, spec, fs_.at(0), m, order)
                    : expression_tuple<GaussianRational>(curve, spec, fs_, order);
            ord = verify_order_conditions(sol, germs);
            hom = verify_homogeneous_conditions(sol, germs);
        } else {
            NumericGermTuple germs =
                cfg.power_tuple ? power_tuple<BigComplex>(curve, spec, fs_.at(0), m, order)
                                : expression_tuple<BigComplex>(curve, spec, fs_, order);
            ord = verify_order_conditions(sol, germs);
            hom = verify_homogeneous_conditions(sol, germs);
        }
        j["order_residual"] = ord.max_residual.str();
        j["homogeneous_residual"] = hom.max_residual.str();
        write_json(fs::path(cfg.out_dir) / ("solution_n" + std::to_string(n) + ".json"), j,
                   cfg);

        BigFloat tol = sol.backend == Backend::Exact
                           ? BigFloat(0)
                           : half_precision_eps(cfg.prec_bits) * ord.scale;
        bool ok = sol.backend == Backend::Exact
                      ? (ord.all_exact_zero && hom.all_exact_zero)
                      : (ord.max_residual <= tol && hom.max_residual <= tol);
        if (!ok) {
            std::cerr << "n=" << n << ": residuals exceed tolerance\n";
            ++failures;
        }
    }
    std::cout << "wrote " << ns.size() << " solution file(s) to " << cfg.out_dir << "\n";
    return failures ? kExitNumeric : kExitOk;
}

int cmd_monodromy(const Config& cfg) {
    auto [curve, spec] = load_curve_file(cfg.curve_path);
    (void)spec;
    if (cfg.k < 1 || cfg.k > static_cast<int>(curve.m()))
        throw Error("--k must lie in [1, m]");
    auto gens = monodromy_generators(curve, cfg.prec_bits);
    auto act = ksubset_action(gens, cfg.k);
    auto orbits = connected_components(act);
    auto simple = simple_branching_check(branching_profile(gens));
    json j = monodromy_to_json(act, orbits, simple.simple);
    j["cyclic_disconnection_expected"] = cyclic_disconnection_expected(curve);
    write_json(fs::path(cfg.out_dir) / "monodromy.json", j, cfg);
    std::cout << (orbits.size() == 1 ? "connected" : "disconnected") << " ("
              << orbits.size() << " orbit(s))\n";
    return kExitOk;
}

int cmd_reconstruct(const Config& cfg) {
    auto [curve, spec] = load_curve_file(cfg.curve_path);
    auto fs_ = parse_exprs(cfg);
    auto ns = parse_n_list(cfg);
    ScopedPrecision sp(cfg.prec_bits);
    auto pts = parse_points(cfg);
    int k = cfg.k;

    auto gens = monodromy_generators(curve, cfg.prec_bits);
    bool connected =
        connected_components(ksubset_action(gens, k)).size() == 1;
    if (!connected && cfg.strict) {
        std::cerr << "surface for k=" << k
                  << " is disconnected; refusing reconstruction (--strict)\n";
        return kExitRefused;
    }

    std::vector<std::pair<long, HPSolution>> sols;
    for (long n : ns) sols.emplace_back(n, solve_for(cfg, curve, spec, fs_, n, k));

    // Corollary ratio: J = {0..k-2, k}, I = {0..k-1}
    std::vector<int> J, I;
    for (int i = 0; i < k - 1; ++i) J.push_back(i);
    J.push_back(k);
    for (int i = 0; i < k; ++i) I.push_back(i);

    CurveContext ctx(curve);
    auto run_point = [&](std::size_t i) {
        ScopedPrecision sp2(cfg.prec_bits);
        const BigComplex& z = pts[i];
        CandidateTable table =
            cfg.power_tuple ? subset_sum_oracle(ctx, fs_.at(0), spec, k, z)
                            : minor_ratio_candidates(ctx, fs_, spec, J, I, k, z);
        ReconPoint rp = infer_limit_and_rate(sols, table, J, I, z, !connected);
        json j = recon_to_json(rp);
        j["connected"] = connected;
        write_json(fs::path(cfg.out_dir) / ("recon_" + std::to_string(i) + ".json"), j, cfg);
        write_file(fs::path(cfg.out_dir) / ("errors_" + std::to_string(i) + ".csv"),
                   errors_to_csv(rp));
    };
    if (cfg.jobs > 1) {
        std::vector<std::future<void>> futs;
        for (std::size_t i = 0; i < pts.size(); ++i)
            futs.push_back(std::async(std::launch::async, run_point, i));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) run_point(i);
    }
    std::cout << "wrote " << pts.size() << " report(s) to " << cfg.out_dir << "\n";
    return kExitOk;
}

int cmd_zeros(const Config& cfg) {
    auto [curve, spec] = load_curve_file(cfg.curve_path);
    auto fs_ = parse_exprs(cfg);
    auto ns = parse_n_list(cfg);
    ScopedPrecision sp(cfg.prec_bits);
    CurveContext ctx(curve);
    for (long n : ns) {
        auto sol = solve_for(cfg, curve, spec, fs_, n, cfg.k);
        std::vector<int> I;
        for (int i = 0; i < cfg.k; ++i) I.push_back(i);
        auto zeros = export_zeros(sol, I);
        std::string base = "zeros_n" + std::to_string(n);
        write_file(fs::path(cfg.out_dir) / (base + ".csv"), zeros_to_csv(zeros));
        write_file(fs::path(cfg.out_dir) / (base + ".svg"),
                   zeros_to_svg(zeros, ctx.critical_values().finite));
    }
    std::cout << "wrote zero exports for " << ns.size() << " n value(s) to " << cfg.out_dir
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-Pade m-system toolkit"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* c, bool needs_f) {
        c->add_option("--curve", cfg.curve_path, "curve JSON file")->required();
        if (needs_f)
            c->add_option("--f", cfg.f_exprs, "germ expression (repeat for general tuples)");
        c->add_flag("--power-tuple", cfg.power_tuple, "use the tuple f, f^2, .., f^m");
        c->add_option("--k", cfg.k, "subset size k");
        c->add_option("--n", cfg.n, "single n");
        c->add_option("--n-range", cfg.n_range, "n range start:stop:step");
        c->add_option("--points", cfg.points, "evaluation points (inline or CSV path)");
        c->add_option("--backend", cfg.backend, "exact | numeric | auto")
            ->check(CLI::IsMember({"exact", "numeric", "auto"}));
        c->add_option("--prec-bits", cfg.prec_bits, "working precision in bits")
            ->check(CLI::Range(64u, 65536u));
        c->add_option("--out", cfg.out_dir, "output directory");
        c->add_flag("--strict", cfg.strict, "refuse disconnected-surface reconstruction");
        c->add_option("--jobs", cfg.jobs, "parallel jobs across points");
    };

    auto* expand = app.add_subcommand("expand", "expand germs at infinity");
    add_common(expand, true);
    expand->add_option("--order", cfg.order, "truncation order");

    auto* solve = app.add_subcommand("solve", "solve the k-th polynomial system");
    add_common(solve, true);
    auto* reconstruct = app.add_subcommand("reconstruct", "ratio limits and rates");
    add_common(reconstruct, true);
    auto* monodromy = app.add_subcommand("monodromy", "connectedness of the k-surface");
    add_common(monodromy, false);
    auto* zeros = app.add_subcommand("zeros", "export polynomial zeros");
    add_common(zeros, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(cfg);
        if (solve->parsed()) return cmd_solve(cfg);
        if (reconstruct->parsed()) return cmd_reconstruct(cfg);
        if (monodromy->parsed()) return cmd_monodromy(cfg);
        if (zeros->parsed()) return cmd_zeros(cfg);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const StepCollapse& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const SheetAmbiguity& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const PermutationCollision& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DenominatorNearZero& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const NoUsableN& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const EmptyNullspace& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
