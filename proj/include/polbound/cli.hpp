#pragma once

// Command-line dispatcher. Every successful command prints one JSON envelope
//
//   {"command", "inputs", "result", "assumptions", "version"}
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure or a
// counterexample found by the sweep.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polbound/bounds.hpp"
#include "polbound/error.hpp"
#include "polbound/json_io.hpp"
#include "polbound/quotient_sing.hpp"
#include "polbound/rational.hpp"
#include "polbound/search.hpp"
#include "polbound/verify.hpp"
#include "polbound/wps.hpp"

namespace polbound::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFailed = 2;

inline constexpr const char* kModelNote =
    "singularities are inspected only at coordinate vertices and coordinate strata (quasi-smooth-lite model)";

using json::Json;

struct Envelope {
    std::string command;
    Json inputs = Json::object();
    Json result;
    std::vector<std::string> assumptions;
    int exit_code = kExitOk;

    Json to_json() const {
        return Json{{"command", command},
                    {"inputs", inputs},
                    {"result", result},
                    {"assumptions", assumptions},
                    {"version", kVersion}};
    }
};

namespace detail {

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_int64(std::string_view(text).substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

inline std::string scalar_text(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

inline void render_table(const Json& value, const std::string& prefix, std::ostream& os) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            render_table(item, prefix.empty() ? key : prefix + "." + key, os);
        }
        return;
    }
    if (value.is_array()) {
        const bool scalars = std::none_of(value.begin(), value.end(),
                                          [](const Json& v) { return v.is_structured(); });
        if (scalars) {
            std::string joined;
            for (const auto& v : value) {
                joined += (joined.empty() ? "" : ",") + scalar_text(v);
            }
            os << prefix << "  " << joined << "\n";
            return;
        }
        for (std::size_t i = 0; i < value.size(); ++i) {
            render_table(value[i], prefix + "[" + std::to_string(i) + "]", os);
        }
        return;
    }
    os << prefix << "  " << scalar_text(value) << "\n";
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

inline std::string hits_csv(const std::vector<SearchHit>& hits) {
    std::ostringstream os;
    os << "weights,degree,eps,volume,bound,tightness,assumptions\n";
    for (const auto& h : hits) {
        std::string ws;
        for (std::int64_t w : h.instance.weights().weights()) {
            ws += (ws.empty() ? "" : ",") + std::to_string(w);
        }
        std::string notes;
        for (const auto& a : h.assumptions) {
            notes += (notes.empty() ? "" : "; ") + a;
        }
        os << csv_quote(ws) << ',' << h.instance.degree() << ',' << to_string(h.eps) << ','
           << to_string(h.volume) << ',' << to_string(h.bound) << ',' << to_string(h.tightness) << ','
           << csv_quote(notes) << "\n";
    }
    return os.str();
}

inline TheoremCase parse_case(int c) {
    return c == 1 ? TheoremCase::ImageDimN_NonBirational : TheoremCase::ImageDimNMinus1;
}

inline const char* case_hypothesis(TheoremCase c) {
    return c == TheoremCase::ImageDimN_NonBirational ? "dim of image = n and the map is not birational"
                                                      : "dim of image = n-1";
}

} // namespace detail

/// Parses argv-style arguments (without the program name), runs the command
/// and writes the envelope. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact volume and birationality bounds for epsilon-lc polarised varieties", "polbound"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format = "json";
    std::string out_file;
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(formats)));
        sub->add_option("--out", out_file, "Write output to FILE instead of standard output");
    };

    // mld
    std::string mld_order;
    std::string mld_weights;
    std::string mld_eps;
    bool mld_profile = false;
    auto* mld_cmd = app.add_subcommand("mld", "Minimal log discrepancy of 1/r(a_1,...,a_n)");
    mld_cmd->add_option("r", mld_order, "Group order r")->required();
    mld_cmd->add_option("weights", mld_weights, "Comma-separated weights a_1,...,a_n")->required();
    mld_cmd->add_option("--eps", mld_eps, "Also test eps-lc for this eps (p/q)");
    mld_cmd->add_flag("--profile", mld_profile, "Include the per-j discrepancy sums");
    add_common(mld_cmd, {"json", "table"});

    // wps info
    std::string wps_weights;
    std::int64_t wps_degree = 0;
    std::string wps_input;
    std::int64_t wps_sections = 3;
    auto* wps_cmd = app.add_subcommand("wps", "Hypersurfaces in weighted projective space");
    wps_cmd->require_subcommand(1);
    auto* info_cmd = wps_cmd->add_subcommand("info", "Invariants and singularities of a general X_d");
    auto* w_opt = info_cmd->add_option("--weights", wps_weights, "Comma-separated weights w_0,...,w_{n+1}");
    auto* d_opt = info_cmd->add_option("--degree", wps_degree, "Degree d");
    auto* in_opt = info_cmd->add_option("--input", wps_input, "Read {\"weights\":[...],\"degree\":d} from FILE");
    in_opt->excludes(w_opt)->excludes(d_opt);
    info_cmd->add_option("--sections", wps_sections, "List h0(O_X(m)) for m = 0..M")->check(CLI::Range(0, 1000));
    add_common(info_cmd, {"json", "table"});

    // bounds
    std::string b_theorem;
    std::int64_t b_n = 0;
    std::string b_eps;
    std::int64_t b_l = 1;
    int b_case = 2;
    std::string b_cond = "effective";
    auto* bounds_cmd = app.add_subcommand("bounds", "Volume lower bound and birationality threshold");
    bounds_cmd->add_option("--theorem", b_theorem, "main | gt | fano | cy | surface")
        ->required()
        ->check(CLI::IsMember({"main", "gt", "fano", "cy", "surface"}));
    auto* bn_opt = bounds_cmd->add_option("--n", b_n, "Dimension n");
    bounds_cmd->add_option("--eps", b_eps, "eps in (0,1], as p/q or an integer")->required();
    bounds_cmd->add_option("--l", b_l, "Multiple l of the polarisation");
    bounds_cmd->add_option("--case", b_case, "1: image dim n, non-birational; 2: image dim n-1")
        ->check(CLI::IsMember({1, 2}));
    bounds_cmd->add_option("--cond", b_cond, "Condition on L: effective | nef")
        ->check(CLI::IsMember({"effective", "nef"}));
    add_common(bounds_cmd, {"json", "table"});

    // compose
    std::int64_t c_n = 0;
    std::string c_eps;
    std::int64_t c_t = 0;
    std::string c_variant;
    auto* compose_cmd = app.add_subcommand("compose", "Birational multiple once |tH| has image dim >= n-1");
    compose_cmd->add_option("--n", c_n, "Dimension n")->required();
    compose_cmd->add_option("--eps", c_eps, "eps in (0,1]")->required();
    compose_cmd->add_option("--t", c_t, "Multiple t")->required();
    compose_cmd->add_option("--variant", c_variant, "sum: |K_X+H| nonempty; nef: tH-K_X nef")
        ->required()
        ->check(CLI::IsMember({"sum", "nef"}));
    add_common(compose_cmd, {"json", "table"});

    // verify
    int v_example = 0;
    std::int64_t v_n = 0;
    std::int64_t v_big_n = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Reproduce an extremal hypersurface family");
    verify_cmd->add_option("--example", v_example, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    verify_cmd->add_option("--n", v_n, "Dimension n")->required();
    auto* bign_opt = verify_cmd->add_option("--bigN", v_big_n, "N for the second family");
    add_common(verify_cmd, {"json", "table"});

    // search
    std::int64_t s_n = 0;
    std::int64_t s_budget = 0;
    std::string s_structure;
    std::size_t s_top = 10;
    std::int64_t s_max_degree = 0;
    std::string s_eps_min;
    std::int64_t s_l = 1;
    auto* search_cmd = app.add_subcommand("search", "Enumerate hypersurfaces and rank them by tightness");
    search_cmd->add_option("--n", s_n, "Dimension n")->required();
    search_cmd->add_option("--budget", s_budget, "Upper bound on the weight sum")->required();
    search_cmd->add_option("--structure", s_structure, "cy | gt | fano")
        ->required()
        ->check(CLI::IsMember({"cy", "gt", "fano"}));
    search_cmd->add_option("--top", s_top, "Number of ranked hits to report")->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-degree", s_max_degree, "Largest degree for gt (default 2*budget)");
    search_cmd->add_option("--eps-min", s_eps_min, "Drop instances with eps below this");
    search_cmd->add_option("--l", s_l, "Polarisation H = O_X(l)");
    add_common(search_cmd, {"json", "csv", "table"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    Envelope env;
    std::string raw_text; // non-JSON output (csv)
    try {
        if (mld_cmd->parsed()) {
            env.command = "mld";
            const auto s = QuotientSingularity::normalize(parse_int64(mld_order), detail::parse_int_list(mld_weights));
            env.inputs = Json{{"order", s.order()}, {"weights", json::weights(detail::parse_int_list(mld_weights))}};
            env.result = Json{{"singularity", json::quotient(s)}, {"mld", json::rational(mld(s))}};
            if (!mld_eps.empty()) {
                const Rational eps = parse_rational(mld_eps);
                env.inputs["eps"] = json::rational(eps);
                env.result["eps_lc"] = is_eps_lc(s, eps);
            }
            if (mld_profile) {
                Json profile = Json::array();
                for (const auto& q : discrepancy_profile(s)) {
                    profile.push_back(json::rational(q));
                }
                env.result["profile"] = std::move(profile);
            }
        } else if (info_cmd->parsed()) {
            env.command = "wps info";
            std::optional<Hypersurface> X;
            if (!wps_input.empty()) {
                std::ifstream in(wps_input);
                if (!in) {
                    throw InvalidInput("cannot read " + wps_input);
                }
                Json parsed;
                try {
                    parsed = Json::parse(in);
                } catch (const nlohmann::json::exception& e) {
                    throw InvalidInput(std::string("malformed hypersurface JSON: ") + e.what());
                }
                X = json::parse_hypersurface(parsed);
            } else {
                if (wps_weights.empty() || d_opt->count() == 0) {
                    throw InvalidInput("wps info needs --weights and --degree, or --input");
                }
                X = Hypersurface(WeightSystem(detail::parse_int_list(wps_weights)), wps_degree);
            }
            env.inputs = json::hypersurface(*X);
            Json result;
            result["dimension"] = X->dimension();
            result["well_formed"] = is_well_formed(X->weights());
            result["quasi_smooth_lite"] = is_quasi_smooth_lite(*X);
            result["canonical_amplitude"] = canonical_amplitude(*X);
            result["structure"] = to_string(structure_of(*X));
            result["volume_O1"] = json::rational(volume_O1(*X));
            Json sections = Json::array();
            for (std::int64_t m = 0; m <= wps_sections; ++m) {
                sections.push_back(to_int64(h0(*X, m), "h0"));
            }
            result["h0"] = std::move(sections);
            result["fibration_dimension_O1"] = fibration_dimension_O1(*X);
            env.assumptions.emplace_back(kModelNote);
            if (!is_well_formed(X->weights())) {
                result["inventory"] = nullptr;
                result["mld_estimate"] = nullptr;
                result["eps"] = nullptr;
                result["inventory_error"] = "weights are not well-formed";
            } else {
                try {
                    const auto inventory = singularity_inventory(*X);
                    Rational best(static_cast<std::int64_t>(X->dimension()));
                    bool strata = false;
                    for (const auto& r : inventory) {
                        best = std::min(best, r.mld);
                        strata = strata || r.locus.kind == Locus::Kind::Stratum;
                    }
                    result["inventory"] = json::records(inventory);
                    result["mld_estimate"] = json::rational(best);
                    result["eps"] = json::rational(std::min(best, Rational(1)));
                    if (strata) {
                        env.assumptions.emplace_back(kStratumMeetsX);
                    }
                } catch (const NotQuasiSmoothAtVertex& e) {
                    result["inventory"] = nullptr;
                    result["mld_estimate"] = nullptr;
                    result["eps"] = nullptr;
                    result["inventory_error"] = e.what();
                }
            }
            env.result = std::move(result);
        } else if (bounds_cmd->parsed()) {
            env.command = "bounds";
            const Rational eps = parse_rational(b_eps);
            const TheoremCase which = detail::parse_case(b_case);
            env.inputs = Json{{"theorem", b_theorem}, {"eps", json::rational(eps)}};
            BoundReport report;
            if (b_theorem == "surface") {
                if (bn_opt->count() > 0 && b_n != 2) {
                    throw InvalidInput("the surface bounds are for n = 2");
                }
                env.inputs["n"] = 2;
                report = surface_bounds(eps);
                env.assumptions = {"h0(H) >= 2", "H nef and big",
                                   std::string("L effective with ") +
                                       (b_cond == "nef" ? "L - K_S nef" : "|L - K_S| nonempty")};
            } else {
                if (bn_opt->count() == 0) {
                    throw InvalidInput("--n is required for theorem " + b_theorem);
                }
                env.inputs["n"] = b_n;
                env.inputs["case"] = b_case;
                env.assumptions.emplace_back(detail::case_hypothesis(which));
                if (b_theorem == "main") {
                    const LCondition cond =
                        b_cond == "nef" ? LCondition::NefDifference : LCondition::EffectiveDifference;
                    env.inputs["cond"] = to_string(cond);
                    report = main_theorem_bounds(b_n, eps, which, cond);
                    env.assumptions.emplace_back("H nef and big");
                    env.assumptions.emplace_back(cond == LCondition::NefDifference ? "L effective, L - K_X nef"
                                                                                   : "L effective, |L - K_X| nonempty");
                } else {
                    env.inputs["l"] = b_l;
                    if (b_theorem == "gt") {
                        report = general_type_bounds(b_n, eps, b_l, which);
                        env.assumptions.emplace_back("K_X nef and big, H = lK_X");
                    } else if (b_theorem == "fano") {
                        report = fano_bounds(b_n, eps, b_l, which);
                        env.assumptions.emplace_back("-K_X nef and big, H = -lK_X");
                    } else {
                        report = calabi_yau_bounds(b_n, eps, b_l, which);
                        env.assumptions.emplace_back("K_X numerically trivial, map induced by |lH|");
                    }
                }
            }
            env.result = json::bound_report(report);
        } else if (compose_cmd->parsed()) {
            env.command = "compose";
            const Rational eps = parse_rational(c_eps);
            const CompositionVariant variant =
                c_variant == "sum" ? CompositionVariant::PluricanonicalSum : CompositionVariant::NefMultiple;
            env.inputs = Json{{"n", c_n}, {"eps", json::rational(eps)}, {"t", c_t}, {"variant", c_variant}};
            env.result = json::composed(composed_threshold(c_n, eps, c_t, variant));
            env.assumptions = {"|tH| maps onto an image of dimension >= n-1",
                               variant == CompositionVariant::PluricanonicalSum ? "|K_X + H| nonempty"
                                                                                : "tH - K_X nef"};
        } else if (verify_cmd->parsed()) {
            env.command = "verify";
            env.inputs = Json{{"example", v_example}, {"n", v_n}};
            if (v_example == 2) {
                if (bign_opt->count() == 0) {
                    throw InvalidInput("--bigN is required for example 2");
                }
                env.inputs["bigN"] = v_big_n;
            }
            env.assumptions.emplace_back(kModelNote);
            try {
                const VerificationReport report = v_example == 1 ? example_one(v_n) : example_two(v_n, v_big_n);
                env.result = json::verification(report);
                env.assumptions.insert(env.assumptions.end(), report.assumptions.begin(), report.assumptions.end());
            } catch (const VerificationFailure& e) {
                env.result = Json{{"pass", false}, {"failed_field", e.field()}, {"detail", e.what()}};
                env.exit_code = kExitFailed;
            }
        } else if (search_cmd->parsed()) {
            env.command = "search";
            SearchConfig cfg;
            cfg.n = s_n;
            cfg.max_weight_sum = s_budget;
            cfg.structure = s_structure == "cy"   ? Structure::CalabiYau
                            : s_structure == "gt" ? Structure::GeneralType
                                                  : Structure::Fano;
            cfg.max_degree = s_max_degree;
            cfg.l = s_l;
            if (!s_eps_min.empty()) {
                cfg.eps_min = parse_rational(s_eps_min);
            }
            cfg.validate();
            env.inputs = Json{{"n", cfg.n},          {"budget", cfg.max_weight_sum}, {"structure", s_structure},
                              {"top", s_top},        {"l", cfg.l}};
            if (cfg.structure == Structure::GeneralType) {
                env.inputs["max_degree"] = cfg.degree_cap();
            }
            if (cfg.eps_min) {
                env.inputs["eps_min"] = json::rational(*cfg.eps_min);
            }
            const auto candidates = enumerate_candidates(cfg);
            const auto assessed = assess_all(candidates, cfg.l);
            const auto sweep = check_no_counterexample(std::span<const SearchHit>(assessed));
            const auto ranked = rank_by_tightness(assessed, s_top);
            env.result = Json{{"candidates", candidates.size()},
                              {"ranked", json::hits(ranked)},
                              {"sweep", json::sweep(sweep)}};
            env.assumptions.emplace_back(kModelNote);
            env.assumptions.emplace_back("image dimension of phi_H taken as min(n, h0(O_X(l)) - 1)");
            if (!sweep.violations.empty()) {
                env.exit_code = kExitFailed;
            }
            if (format == "csv") {
                raw_text = detail::hits_csv(ranked);
            }
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const HypothesisNotMet& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    std::string text;
    if (!raw_text.empty()) {
        text = raw_text;
    } else if (format == "table") {
        std::ostringstream os;
        os << "command  " << env.command << "\n";
        detail::render_table(env.result, "", os);
        for (const auto& a : env.assumptions) {
            os << "assumption  " << a << "\n";
        }
        text = os.str();
    } else {
        text = env.to_json().dump(2) + "\n";
    }

    if (!out_file.empty()) {
        std::ofstream file(out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << out_file << "\n";
            return kExitInvalid;
        }
        file << text;
    } else {
        out << text;
    }
    return env.exit_code;
}

} // namespace polbound::cli
