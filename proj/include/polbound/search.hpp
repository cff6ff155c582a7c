#pragma once

// Deterministic enumeration of hypersurfaces X_d in P(1^n, a, b), a <= b, and
// ranking by how close vol(O_X(1)) comes to the theorem's lower bound.
//
// Requiring n weights equal to 1 keeps h^0(O_X(1)) >= n, so the image of
// phi_{O(1)} has dimension >= n-1 and the theorem applies.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polbound/error.hpp"
#include "polbound/rational.hpp"
#include "polbound/verify.hpp"
#include "polbound/wps.hpp"

namespace polbound {

struct SearchConfig {
    std::int64_t n = 2;
    std::int64_t max_weight_sum = 0;
    Structure structure = Structure::CalabiYau;
    std::int64_t max_degree = 0;                 // GeneralType only; 0 means 2 * max_weight_sum
    std::optional<Rational> eps_min;             // drop instances with eps below this
    std::optional<std::int64_t> require_fibration_dim; // defaults to n - 1
    std::int64_t l = 1;                          // polarisation H = O_X(l)

    void validate() const {
        if (n < 2) {
            throw InvalidInput("search dimension must be >= 2");
        }
        if (max_weight_sum < 1) {
            throw InvalidInput("weight-sum budget must be positive");
        }
        if (max_degree < 0) {
            throw InvalidInput("max degree must be positive");
        }
        if (l < 1) {
            throw InvalidInput("l must be >= 1");
        }
        if (eps_min) {
            require_eps(*eps_min);
        }
    }

    std::int64_t degree_cap() const { return max_degree > 0 ? max_degree : 2 * max_weight_sum; }
    std::int64_t fibration_floor() const { return require_fibration_dim.value_or(n - 1); }
};

struct SearchHit {
    Hypersurface instance;
    Rational eps;
    Rational volume;
    Rational bound;
    TheoremCase theorem_case;
    Rational tightness;
    std::vector<std::string> assumptions;
    bool certified;
};

struct SweepReport {
    std::size_t examined = 0;
    std::size_t certified = 0;
    std::vector<SearchHit> violations;
};

namespace detail {

// Degrees admitted for a weight system under the structure filter. Degree 1
// and linear cones (d equal to some weight) are skipped.
inline std::vector<std::int64_t> candidate_degrees(const SearchConfig& cfg, const WeightSystem& w) {
    const std::int64_t s = w.sum();
    std::int64_t lo = 2;
    std::int64_t hi = 1;
    switch (cfg.structure) {
    case Structure::CalabiYau: lo = hi = s; break;
    case Structure::GeneralType: lo = s + 1; hi = cfg.degree_cap(); break;
    case Structure::Fano: hi = s - 1; break;
    }
    std::vector<std::int64_t> out;
    for (std::int64_t d = std::max<std::int64_t>(lo, 2); d <= hi; ++d) {
        const auto ws = w.weights();
        if (std::find(ws.begin(), ws.end(), d) == ws.end()) {
            out.push_back(d);
        }
    }
    return out;
}

inline bool admissible(const SearchConfig& cfg, const Hypersurface& X) {
    if (!is_quasi_smooth_lite(X)) {
        return false;
    }
    if (fibration_dimension(X, cfg.l) < cfg.fibration_floor()) {
        return false;
    }
    return !cfg.eps_min || eps_of(X) >= *cfg.eps_min;
}

inline SearchHit to_hit(Hypersurface X, TightnessAssessment a) {
    return {std::move(X),       std::move(a.eps),       std::move(a.volume),      std::move(a.bound),
            a.theorem_case,     std::move(a.tightness), std::move(a.assumptions), a.certified};
}

} // namespace detail

/// Calls visit(const Hypersurface&) for every candidate in (sum, weights, degree) order.
template <typename Visitor>
void for_each_candidate(const SearchConfig& cfg, Visitor&& visit) {
    cfg.validate();
    const std::int64_t n = cfg.n;
    for (std::int64_t sum = n + 2; sum <= cfg.max_weight_sum; ++sum) {
        const std::int64_t pair_sum = sum - n;
        for (std::int64_t a = 1; 2 * a <= pair_sum; ++a) {
            std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 1);
            weights.push_back(a);
            weights.push_back(pair_sum - a);
            WeightSystem w(std::move(weights));
            if (!is_well_formed(w)) {
                continue;
            }
            for (std::int64_t d : detail::candidate_degrees(cfg, w)) {
                Hypersurface X(w, d);
                if (detail::admissible(cfg, X)) {
                    visit(X);
                }
            }
        }
    }
}

inline std::vector<Hypersurface> enumerate_candidates(const SearchConfig& cfg) {
    std::vector<Hypersurface> out;
    for_each_candidate(cfg, [&](const Hypersurface& X) { out.push_back(X); });
    return out;
}

/// Assesses every instance that meets the theorem's filters, in input order.
inline std::vector<SearchHit> assess_all(std::span<const Hypersurface> stream, std::int64_t l = 1) {
    std::vector<SearchHit> hits;
    for (const auto& X : stream) {
        try {
            hits.push_back(detail::to_hit(X, assess(X, l)));
        } catch (const HypothesisNotMet&) {
        }
    }
    return hits;
}

/// The top_k hits with smallest tightness >= 1; ties keep input order.
inline std::vector<SearchHit> rank_by_tightness(std::vector<SearchHit> hits, std::size_t top_k) {
    if (top_k < 1) {
        throw InvalidInput("top_k must be >= 1");
    }
    std::erase_if(hits, [](const SearchHit& h) { return h.tightness < 1; });
    std::stable_sort(hits.begin(), hits.end(),
                     [](const SearchHit& a, const SearchHit& b) { return a.tightness < b.tightness; });
    if (hits.size() > top_k) {
        hits.erase(hits.begin() + static_cast<std::ptrdiff_t>(top_k), hits.end());
    }
    return hits;
}

inline std::vector<SearchHit> rank_by_tightness(std::span<const Hypersurface> stream, std::size_t top_k,
                                                std::int64_t l = 1) {
    return rank_by_tightness(assess_all(stream, l), top_k);
}

/// Every certified hit must satisfy volume >= bound; anything else is listed
/// as a violation. The comparison uses the stored volume and bound, not the
/// stored tightness.
inline SweepReport check_no_counterexample(std::span<const SearchHit> hits) {
    SweepReport report;
    for (const auto& h : hits) {
        ++report.examined;
        if (!h.certified) {
            continue;
        }
        ++report.certified;
        if (h.volume < h.bound) {
            report.violations.push_back(h);
        }
    }
    return report;
}

inline SweepReport check_no_counterexample(std::span<const Hypersurface> stream, std::int64_t l = 1) {
    const auto hits = assess_all(stream, l);
    return check_no_counterexample(std::span<const SearchHit>(hits));
}

} // namespace polbound
