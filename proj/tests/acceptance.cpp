// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance [path-to-polbound-cli]
//
// When the CLI path is given, the determinism criterion also runs the real
// executable twice and compares its standard output byte for byte.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polbound/bounds.hpp"
#include "polbound/cli.hpp"
#include "polbound/quotient_sing.hpp"
#include "polbound/wps.hpp"

using namespace polbound;
using Json = nlohmann::ordered_json;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Failure{what};
    }
}

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

Json cli_json(const std::vector<std::string>& args) {
    const auto r = cli(args);
    require(r.code == 0, "command exited with " + std::to_string(r.code));
    return Json::parse(r.out);
}

std::string rat(std::int64_t p, std::int64_t q) { return to_string(Rational(p, q)); }

// ---------------------------------------------------------------------------

void example_one_reproduction() {
    for (std::int64_t n = 2; n <= 6; ++n) {
        const auto j = cli_json({"verify", "--example", "1", "--n", std::to_string(n)});
        const auto& r = j["result"];
        const std::string tag = " (n=" + std::to_string(n) + ")";
        require(r["pass"] == true, "pass" + tag);
        require(r["volume"] == rat(2, 1), "volume" + tag);
        require(r["mld"] == rat(n, 1), "mld" + tag);
        require(r["threshold_paper"] == n + 1, "threshold_paper" + tag);
        require(r["threshold_computed"] == n + 1, "threshold_computed" + tag);
    }
}

void example_two_reproduction() {
    for (std::int64_t n = 2; n <= 5; ++n) {
        for (std::int64_t big_n = n; big_n <= 10; ++big_n) {
            const auto j =
                cli_json({"verify", "--example", "2", "--n", std::to_string(n), "--bigN", std::to_string(big_n)});
            const auto& r = j["result"];
            const std::string tag = " (n=" + std::to_string(n) + ", N=" + std::to_string(big_n) + ")";
            require(r["pass"] == true, "pass" + tag);
            require(r["eps"] == rat(n, big_n), "eps" + tag);
            require(r["volume"] == rat(1, big_n), "volume" + tag);
            require(r["tightness"] == rat(1, 1), "tightness" + tag);
            require(r["threshold_computed"] == n + 2 * big_n, "threshold" + tag);
            require(r["threshold_paper"] == n + 2 * big_n, "threshold_paper" + tag);
        }
    }
}

void mld_oracle_equivalence() {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<std::int64_t> order(1, 200);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t cases = 0;
    for (; cases < 12000; ++cases) {
        const std::int64_t r = order(rng);
        std::vector<std::int64_t> a(dim(rng));
        for (auto& x : a) {
            x = std::uniform_int_distribution<std::int64_t>(0, r - 1)(rng);
        }
        const auto s = QuotientSingularity::normalize(r, a);
        require(mld(s) == oracle::mld(r, a), "mismatch at " + s.to_string());
    }
    require(cases >= 10000, "too few cases");
}

void mld_properties() {
    std::mt19937_64 rng(0xBEEF);
    auto random_germ = [&]() {
        const std::int64_t r = std::uniform_int_distribution<std::int64_t>(1, 200)(rng);
        std::vector<std::int64_t> a(std::uniform_int_distribution<std::size_t>(1, 6)(rng));
        for (auto& x : a) {
            x = std::uniform_int_distribution<std::int64_t>(0, r - 1)(rng);
        }
        return QuotientSingularity::normalize(r, a);
    };
    for (int i = 0; i < 1000; ++i) {
        const auto s = random_germ();
        const Rational v = mld(s);
        require(v > 0 && v <= Rational(static_cast<std::int64_t>(s.dimension())), "range at " + s.to_string());
    }
    for (std::int64_t n = 1; n <= 12; ++n) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n));
        std::iota(a.begin(), a.end(), -3);
        require(mld(QuotientSingularity::normalize(1, a)) == Rational(n), "smooth case n=" + std::to_string(n));
    }
    for (int i = 0; i < 1000; ++i) {
        const auto s = random_germ();
        std::int64_t u = 0;
        do {
            u = std::uniform_int_distribution<std::int64_t>(1, 1000)(rng);
        } while (std::gcd(u, s.order()) != 1);
        std::vector<std::int64_t> scaled;
        for (auto a : s.weights()) {
            scaled.push_back(u * a);
        }
        require(mld(QuotientSingularity::normalize(s.order(), scaled)) == mld(s), "unit invariance at " + s.to_string());
    }
    for (int i = 0; i < 1000; ++i) {
        const auto s = random_germ();
        std::vector<std::int64_t> longer(s.weights().begin(), s.weights().end());
        longer.push_back(std::uniform_int_distribution<std::int64_t>(0, 400)(rng));
        require(mld(QuotientSingularity::normalize(s.order(), longer)) > mld(s), "monotonicity at " + s.to_string());
    }
}

void bound_formula_table() {
    using TC = TheoremCase;
    const std::vector<std::pair<std::int64_t, std::int64_t>> eps_grid{{1, 1}, {2, 3}, {1, 2}, {1, 3}, {1, 5}};
    auto check = [](const BoundReport& r, const Rational& vol, std::int64_t m, const std::string& what) {
        require(r.vol_lower_bound == vol && r.birational_threshold == m, what);
    };
    for (std::int64_t n = 2; n <= 6; ++n) {
        for (const auto& [p, q] : eps_grid) {
            const Rational eps(p, q);
            const std::int64_t fl = (2 * n * q) / p; // floor(2n / eps), p > 0
            const std::string tag = " n=" + std::to_string(n) + " eps=" + to_string(eps);
            check(main_theorem_bounds(n, eps, TC::ImageDimN_NonBirational), 2, n + 1, "main case 1" + tag);
            check(main_theorem_bounds(n, eps, TC::ImageDimNMinus1), eps / n, n + fl, "main case 2" + tag);
            for (std::int64_t l = 1; l <= 3; ++l) {
                std::int64_t ln = 1;
                for (std::int64_t i = 0; i < n; ++i) {
                    ln *= l;
                }
                const std::string ltag = tag + " l=" + std::to_string(l);
                check(general_type_bounds(n, eps, l, TC::ImageDimN_NonBirational), Rational(2, ln), n + 2, "gt 1" + ltag);
                check(general_type_bounds(n, eps, l, TC::ImageDimNMinus1), eps / (n * ln), n + fl + 1, "gt 2" + ltag);
                check(fano_bounds(n, eps, l, TC::ImageDimN_NonBirational), Rational(2, ln), n + 1, "fano 1" + ltag);
                check(fano_bounds(n, eps, l, TC::ImageDimNMinus1), eps / (n * ln), n + fl, "fano 2" + ltag);
                check(calabi_yau_bounds(n, eps, l, TC::ImageDimN_NonBirational), Rational(2, ln), n + 1, "cy 1" + ltag);
                check(calabi_yau_bounds(n, eps, l, TC::ImageDimNMinus1), eps / (n * ln), n + fl, "cy 2" + ltag);
                require(general_type_bounds(n, eps, l, TC::ImageDimNMinus1).birational_threshold ==
                            fano_bounds(n, eps, l, TC::ImageDimNMinus1).birational_threshold + 1,
                        "gt = fano + 1" + ltag);
            }
            for (std::int64_t t = 1; t <= 3; ++t) {
                const auto sum = composed_threshold(n, eps, t, CompositionVariant::PluricanonicalSum);
                const auto nef = composed_threshold(n, eps, t, CompositionVariant::NefMultiple);
                require(sum.m == n + fl && sum.coefficient == 1 + (n + fl) * t, "compose sum" + tag);
                require(nef.m == n + fl + 1 && nef.coefficient == (n + fl + 1) * t, "compose nef" + tag);
            }
        }
    }
    for (const auto& [p, q] : eps_grid) {
        const Rational eps(p, q);
        check(surface_bounds(eps), eps / 2, 2 + (4 * q) / p, "surface eps=" + to_string(eps));
    }
    check(surface_bounds(Rational(1)), Rational(1, 2), 6, "surface eps=1");
}

bool is_family_two(const Json& instance) {
    const auto& w = instance["weights"];
    if (w.size() != 4 || w[0] != 1 || w[1] != 1) {
        return false;
    }
    const std::int64_t a = w[2].get<std::int64_t>();
    const std::int64_t b = w[3].get<std::int64_t>();
    const std::int64_t d = instance["degree"].get<std::int64_t>();
    return a % 2 == 0 && a / 2 >= 2 && b == 3 * (a / 2) && d == 6 * (a / 2);
}

void counterexample_sweep() {
    const auto j = cli_json({"search", "--n", "2", "--budget", "30", "--structure", "cy"});
    const auto& r = j["result"];
    require(r["sweep"]["violations"].empty(), "violations reported");
    require(r["sweep"]["certified"].get<std::size_t>() > 0, "no certified instances");
    const auto& ranked = r["ranked"];
    require(!ranked.empty() && ranked[0]["tightness"] == rat(1, 1), "best tightness is not 1");
    std::size_t members = 0;
    bool in_tied_prefix = true;
    for (const auto& hit : ranked) {
        in_tied_prefix = in_tied_prefix && hit["tightness"] == rat(1, 1);
        if (is_family_two(hit["instance"])) {
            ++members;
            require(hit["tightness"] == rat(1, 1), "family member with tightness != 1");
            require(in_tied_prefix, "family member ranked behind a looser instance");
            require(hit["certified"] == true, "family member not certified");
        }
    }
    require(members >= 1, "(1,1,2N,3N; 6N) family absent from ranking");
}

void count_monomials_equivalence() {
    std::size_t systems = 0;
    std::size_t literal = 0;
    for (std::size_t len = 2; len <= 20; ++len) {
        for (const auto& w : oracle::sorted_tuples(len, 20)) {
            ++systems;
            const WeightSystem ws(w);
            for (std::int64_t m = 0; m <= 40; ++m) {
                const Integer got = count_monomials(ws, m);
                require(got == oracle::count_monomials_grouped(w, m), "grouped oracle mismatch");
                // Literal enumeration visits every exponent vector; run it where that is cheap.
                if (got <= 5000) {
                    ++literal;
                    require(got == oracle::count_monomials(w, m), "enumeration mismatch");
                }
            }
        }
    }
    require(systems > 2000, "weight-system corpus unexpectedly small");
    require(literal > systems * 20, "literal enumeration covered too few cases");
}

std::string capture(const std::string& command) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "cannot run " + command);
    while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    require(status == 0, command + " exited with status " + std::to_string(status));
    return out;
}

void determinism(const std::string& cli_path) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"search", "--n", "2", "--budget", "30", "--structure", "cy"},
             {"search", "--n", "3", "--budget", "30", "--structure", "gt", "--format", "csv"},
             {"search", "--n", "2", "--budget", "30", "--structure", "fano", "--top", "50"}}) {
        const auto first = cli(args);
        const auto second = cli(args);
        require(first.code == 0 && !first.out.empty(), "search failed");
        require(first.out == second.out, "in-process outputs differ");
        if (!cli_path.empty()) {
            std::string command = "'" + cli_path + "'";
            for (const auto& a : args) {
                command += " " + a;
            }
            const auto a = capture(command);
            const auto b = capture(command);
            require(a == b, "executable outputs differ");
            require(a == first.out, "executable output differs from in-process output");
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        std::string name;
        double time_limit; // seconds; 0 means none
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "Example-1 reproduction, n = 2..6", 1.0, example_one_reproduction},
        {2, "Example-2 reproduction, 2 <= n <= 5, n <= N <= 10", 1.0, example_two_reproduction},
        {3, "mld equals naive double loop on 12000 random germs, r <= 200, n <= 6", 30.0, mld_oracle_equivalence},
        {4, "mld range, smooth case, unit invariance, monotonicity", 0.0, mld_properties},
        {5, "bound formulas over n <= 6, eps grid, l <= 3, composition", 0.0, bound_formula_table},
        {6, "counterexample sweep: search --n 2 --budget 30 --structure cy", 60.0, counterexample_sweep},
        {7, "count_monomials equals enumeration, sum(w) <= 20, m <= 40", 10.0, count_monomials_equivalence},
        {8, "search output is byte-identical across runs", 0.0, [&] { determinism(cli_path); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit > 0 && secs >= c.time_limit) {
            ok = false;
            detail = "exceeded time limit of " + std::to_string(c.time_limit) + " s";
        }
        failed += ok ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
