#pragma once

// Reproduction of the two extremal hypersurface families and the tightness
// ratio vol(O_X(1)) / (applicable volume bound) for arbitrary hypersurfaces.
//
//   family one: X_{2n+2} in P(1^{n+1}, n+1)   smooth, omega_X = O_X, vol = 2
//   family two: X_{6N}   in P(1^n, 2N, 3N)    1/N(1^n) points, eps = n/N, vol = 1/N

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polbound/bounds.hpp"
#include "polbound/error.hpp"
#include "polbound/quotient_sing.hpp"
#include "polbound/rational.hpp"
#include "polbound/wps.hpp"

namespace polbound {

inline constexpr const char* kNonBirationalUnverified =
    "phi_H is not birational (required for the image-dimension-n case; not computed)";

struct VerificationReport {
    Hypersurface instance;
    Rational eps;
    Rational mld;
    std::int64_t canonical_amplitude;
    std::int64_t fibration_dimension;
    std::vector<SingularityRecord> inventory;
    Rational volume;
    Rational vol_bound;
    std::int64_t threshold_paper;
    std::int64_t threshold_computed;
    Rational tightness;
    bool pass;
    std::vector<std::string> assumptions;
};

/// A single asserted equality, rendered for error messages.
struct FieldCheck {
    std::string field;
    bool ok;
    std::string detail;
};

/// Throws VerificationFailure naming the first failed check.
inline void require_all(const std::vector<FieldCheck>& checks) {
    for (const auto& c : checks) {
        if (!c.ok) {
            throw VerificationFailure(c.field, c.detail);
        }
    }
}

namespace detail {

template <typename T>
std::string show(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        return to_string(v);
    } else {
        return std::to_string(v);
    }
}

template <typename A, typename B>
FieldCheck expect_eq(std::string field, const A& actual, const B& expected) {
    const bool ok = actual == expected;
    return {std::move(field), ok, "got " + show(actual) + ", expected " + show(expected)};
}

inline Hypersurface family(std::int64_t ones, std::vector<std::int64_t> tail, std::int64_t degree) {
    std::vector<std::int64_t> weights(static_cast<std::size_t>(ones), 1);
    weights.insert(weights.end(), tail.begin(), tail.end());
    return Hypersurface(WeightSystem(std::move(weights)), degree);
}

} // namespace detail

/// X_{2n+2} in P(1^{n+1}, n+1) against the Calabi-Yau bounds with l = 1.
inline VerificationReport example_one(std::int64_t n) {
    if (n < 2) {
        throw InvalidInput("example one needs n >= 2, got " + std::to_string(n));
    }
    Hypersurface X = detail::family(n + 1, {n + 1}, 2 * n + 2);
    auto inventory = singularity_inventory(X);
    const Rational mld_value = mld_estimate(X);
    const Rational eps = std::min(mld_value, Rational(1));
    const Rational volume = volume_O1(X);
    const BoundReport bound = calabi_yau_bounds(n, eps, 1, TheoremCase::ImageDimN_NonBirational);
    const std::int64_t amplitude = canonical_amplitude(X);
    const std::int64_t fib = fibration_dimension_O1(X);
    const Rational tightness = volume / bound.vol_lower_bound;
    const std::int64_t threshold_paper = n + 1;

    require_all({
        {"well_formed", is_well_formed(X.weights()), "weights not well-formed"},
        {"quasi_smooth", is_quasi_smooth_lite(X), "quasi-smooth-lite test failed"},
        detail::expect_eq("canonical_amplitude", amplitude, std::int64_t{0}),
        detail::expect_eq("inventory_size", inventory.size(), std::size_t{0}),
        detail::expect_eq("mld", mld_value, Rational(n)),
        detail::expect_eq("volume", volume, Rational(2)),
        detail::expect_eq("fibration_dimension", fib, n),
        detail::expect_eq("vol_bound", bound.vol_lower_bound, Rational(2)),
        detail::expect_eq("threshold", bound.birational_threshold, threshold_paper),
        detail::expect_eq("tightness", tightness, Rational(1)),
    });
    return {std::move(X), eps,       mld_value,       amplitude,
            fib,          std::move(inventory),       volume,
            bound.vol_lower_bound,   threshold_paper, bound.birational_threshold,
            tightness,    true,      {kNonBirationalUnverified}};
}

/// X_{6N} in P(1^n, 2N, 3N) against the main theorem with eps = n/N.
inline VerificationReport example_two(std::int64_t n, std::int64_t big_n) {
    if (n < 2) {
        throw InvalidInput("example two needs n >= 2, got " + std::to_string(n));
    }
    if (big_n < n) {
        throw InvalidInput("example two needs N >= n (eps = n/N must not exceed 1)");
    }
    Hypersurface X = detail::family(n, {2 * big_n, 3 * big_n}, 6 * big_n);
    auto inventory = singularity_inventory(X);
    const Rational mld_value = mld_estimate(X);
    const Rational eps = std::min(mld_value, Rational(1));
    const Rational volume = volume_O1(X);
    const BoundReport bound = main_theorem_bounds(n, eps, TheoremCase::ImageDimNMinus1);
    const std::int64_t amplitude = canonical_amplitude(X);
    const std::int64_t fib = fibration_dimension_O1(X);
    const Rational tightness = volume / bound.vol_lower_bound;
    const std::int64_t threshold_paper = n + 2 * big_n;

    const auto expected_type =
        QuotientSingularity::normalize(big_n, std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
    const bool type_ok = inventory.size() == 1 && inventory.front().type == expected_type;

    require_all({
        {"well_formed", is_well_formed(X.weights()), "weights not well-formed"},
        {"quasi_smooth", is_quasi_smooth_lite(X), "quasi-smooth-lite test failed"},
        detail::expect_eq("inventory_size", inventory.size(), std::size_t{1}),
        {"singularity_type", type_ok, "expected a single " + expected_type.to_string() + " stratum"},
        detail::expect_eq("mld", mld_value, Rational(n, big_n)),
        detail::expect_eq("canonical_amplitude", amplitude, big_n - n),
        detail::expect_eq("volume", volume, Rational(1, big_n)),
        detail::expect_eq("fibration_dimension", fib, n - 1),
        detail::expect_eq("vol_bound", bound.vol_lower_bound, Rational(1, big_n)),
        detail::expect_eq("threshold", bound.birational_threshold, threshold_paper),
        detail::expect_eq("tightness", tightness, Rational(1)),
    });
    std::vector<std::string> assumptions{kStratumMeetsX};
    return {std::move(X), eps,       mld_value,       amplitude,
            fib,          std::move(inventory),       volume,
            bound.vol_lower_bound,   threshold_paper, bound.birational_threshold,
            tightness,    true,      std::move(assumptions)};
}

/// Outcome of applying the theorem to a hypersurface with H = O_X(l).
struct TightnessAssessment {
    Rational eps;
    Rational volume; // vol(O_X(1))
    Rational bound;  // lower bound for vol(O_X(1))
    TheoremCase theorem_case;
    std::int64_t threshold; // minimal m with |L + m O_X(l)| birational
    Rational tightness;
    std::vector<std::string> assumptions;
    bool certified; // every hypothesis of the applied case is established by the model
};

/// Checks the filters in order and throws HypothesisNotMet naming the first failure.
inline TightnessAssessment assess(const Hypersurface& X, std::int64_t l = 1) {
    if (l < 1) {
        throw InvalidInput("polarisation multiple l must be >= 1");
    }
    const auto n = static_cast<std::int64_t>(X.dimension());
    if (n < 2) {
        throw HypothesisNotMet("dimension >= 2");
    }
    if (!is_well_formed(X.weights())) {
        throw HypothesisNotMet("well_formed");
    }
    if (!is_quasi_smooth_lite(X)) {
        throw HypothesisNotMet("quasi_smooth_lite");
    }
    const std::int64_t fib = fibration_dimension(X, l);
    if (fib < n - 1) {
        throw HypothesisNotMet("fibration_dimension >= n-1");
    }

    const auto inventory = singularity_inventory(X);
    Rational mld_value(n);
    bool uses_strata = false;
    for (const auto& rec : inventory) {
        mld_value = std::min(mld_value, rec.mld);
        uses_strata = uses_strata || rec.locus.kind == Locus::Kind::Stratum;
    }
    const Rational eps = std::min(mld_value, Rational(1));

    const TheoremCase which = fib == n ? TheoremCase::ImageDimN_NonBirational : TheoremCase::ImageDimNMinus1;
    const BoundReport main = main_theorem_bounds(n, eps, which);
    const Rational scale(detail::power(l, n));
    const Rational bound = main.vol_lower_bound / scale;
    const Rational volume = volume_O1(X);

    std::vector<std::string> assumptions;
    if (uses_strata) {
        assumptions.emplace_back(kStratumMeetsX);
    }
    if (which == TheoremCase::ImageDimN_NonBirational) {
        assumptions.emplace_back(kNonBirationalUnverified);
    }
    return {eps,
            volume,
            bound,
            which,
            main.birational_threshold,
            volume / bound,
            std::move(assumptions),
            which == TheoremCase::ImageDimNMinus1};
}

inline Rational tightness_ratio(const Hypersurface& X) { return assess(X).tightness; }

} // namespace polbound
