#pragma once

// Volume lower bounds and birationality thresholds for epsilon-lc polarised
// varieties (X, H) whose map phi_H has image of dimension n or n-1.
//
//   image dim n, phi_H not birational:  vol(H) >= 2,      |L+mH| birational for m >= n+1
//   image dim n-1:                      vol(H) >= eps/n,  |L+mH| birational for m >= n+floor(2n/eps)
//
// Specialising H = lK_X, -lK_X or lH (K_X == 0) gives the general type, Fano
// and Calabi-Yau variants; the surface variant is n = 2 with h^0(H) >= 2.

#include <cstdint>
#include <string>

#include "polbound/error.hpp"
#include "polbound/quotient_sing.hpp"
#include "polbound/rational.hpp"

namespace polbound {

enum class TheoremCase {
    ImageDimN_NonBirational, // dim phi_H(X) = n and phi_H is not birational
    ImageDimNMinus1,         // dim phi_H(X) = n - 1
};

/// Which hypothesis the effective divisor L satisfies. The bounds do not
/// depend on it; callers state it to document what they certified.
enum class LCondition {
    EffectiveDifference, // |L - K_X| is nonempty
    NefDifference,       // L - K_X is nef
};

struct BoundReport {
    Rational vol_lower_bound;
    std::int64_t birational_threshold; // minimal m
    std::string system;                // the linear system that becomes birational
};

enum class CompositionVariant {
    PluricanonicalSum, // |K_X + H| nonempty
    NefMultiple,       // tH - K_X nef
};

struct ComposedThreshold {
    std::string system;
    std::int64_t coefficient;
    std::int64_t m;
};

inline const char* to_string(TheoremCase c) {
    return c == TheoremCase::ImageDimN_NonBirational ? "image_dim_n_non_birational" : "image_dim_n_minus_1";
}

inline const char* to_string(LCondition c) {
    return c == LCondition::EffectiveDifference ? "effective_difference" : "nef_difference";
}

namespace detail {

inline void require_dimension(std::int64_t n) {
    if (n < 2) {
        throw InvalidInput("dimension must be >= 2, got " + std::to_string(n));
    }
}

inline void require_positive(std::int64_t v, const char* what) {
    if (v < 1) {
        throw InvalidInput(std::string(what) + " must be >= 1, got " + std::to_string(v));
    }
}

// n + floor(2n / eps), exact.
inline std::int64_t eps_threshold(std::int64_t n, const Rational& eps) {
    return to_int64(Integer(n) + floor_of(Rational(2 * n) / eps), "birational threshold");
}

inline Integer power(std::int64_t base, std::int64_t exp) {
    Integer out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    return to_int64(Integer(a) + b, "threshold");
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    return to_int64(Integer(a) * b, "coefficient");
}

// Shared shape of the three corollaries with H replaced by a multiple.
inline BoundReport scaled_bounds(std::int64_t n, const Rational& eps, std::int64_t l, TheoremCase which,
                                 std::int64_t extra, std::string system) {
    require_dimension(n);
    require_eps(eps);
    require_positive(l, "l");
    const Integer ln = power(l, n);
    if (which == TheoremCase::ImageDimN_NonBirational) {
        return {Rational(Integer(2), ln), checked_add(n + 1, extra), std::move(system)};
    }
    return {eps / Rational(n * ln), checked_add(eps_threshold(n, eps), extra), std::move(system)};
}

} // namespace detail

inline BoundReport main_theorem_bounds(std::int64_t n, const Rational& eps, TheoremCase which,
                                       LCondition /*cond*/ = LCondition::EffectiveDifference) {
    detail::require_dimension(n);
    require_eps(eps);
    if (which == TheoremCase::ImageDimN_NonBirational) {
        return {Rational(2), n + 1, "|L+mH|"};
    }
    return {eps / n, detail::eps_threshold(n, eps), "|L+mH|"};
}

/// K_X nef and big, H = lK_X; the threshold is the minimal m with |mlK_X| birational.
inline BoundReport general_type_bounds(std::int64_t n, const Rational& eps, std::int64_t l, TheoremCase which) {
    return detail::scaled_bounds(n, eps, l, which, 1, "|m*" + std::to_string(l) + "*K_X|");
}

/// -K_X nef and big, H = -lK_X.
inline BoundReport fano_bounds(std::int64_t n, const Rational& eps, std::int64_t l, TheoremCase which) {
    return detail::scaled_bounds(n, eps, l, which, 0, "|-m*" + std::to_string(l) + "*K_X|");
}

/// K_X == 0; the volume bound is on vol(H) when the map is induced by |lH|.
inline BoundReport calabi_yau_bounds(std::int64_t n, const Rational& eps, std::int64_t l, TheoremCase which) {
    return detail::scaled_bounds(n, eps, l, which, 0, "|m*" + std::to_string(l) + "*H|");
}

/// Surfaces with h^0(H) >= 2.
inline BoundReport surface_bounds(const Rational& eps) {
    require_eps(eps);
    return {eps / 2, detail::checked_add(2, to_int64(floor_of(Rational(4) / eps), "threshold")), "|L+mH|"};
}

/// |tH| already maps onto an image of dimension >= n-1; returns the
/// birational system obtained by raising the multiple.
inline ComposedThreshold composed_threshold(std::int64_t n, const Rational& eps, std::int64_t t,
                                            CompositionVariant variant) {
    detail::require_dimension(n);
    require_eps(eps);
    detail::require_positive(t, "t");
    const std::int64_t base = detail::eps_threshold(n, eps);
    if (variant == CompositionVariant::PluricanonicalSum) {
        const std::int64_t coefficient = detail::checked_add(1, detail::checked_mul(base, t));
        return {"K_X + " + std::to_string(coefficient) + "H", coefficient, base};
    }
    const std::int64_t m = detail::checked_add(base, 1);
    const std::int64_t coefficient = detail::checked_mul(m, t);
    return {std::to_string(coefficient) + "H", coefficient, m};
}

} // namespace polbound
