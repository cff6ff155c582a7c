#pragma once

// Cyclic quotient singularities 1/r(a_1,...,a_n) and their minimal log
// discrepancies, via the toric formula
//
//     mld = min_{1 <= j <= r} sum_i (1 + j a_i / r - ceil(j a_i / r)).
//
// Each summand is the fractional part {j a_i / r} when r does not divide
// j a_i, and 1 when it does. All sums for a fixed j share the denominator r,
// so the evaluation below works with integer numerators and only forms a
// Rational at the end.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "polbound/error.hpp"
#include "polbound/rational.hpp"

namespace polbound {

/// The germ of A^n / mu_r acting with weights (a_1, ..., a_n). Weights are
/// stored reduced to [0, r). Residue 0 is allowed and contributes a smooth
/// factor.
class QuotientSingularity {
public:
    static constexpr std::int64_t max_order = std::numeric_limits<std::int32_t>::max();

    /// Reduces raw weights modulo `order`. Throws InvalidInput for order < 1,
    /// order above max_order, or an empty weight list.
    static QuotientSingularity normalize(std::int64_t order, std::span<const std::int64_t> raw_weights) {
        if (order < 1) {
            throw InvalidInput("quotient order must be >= 1, got " + std::to_string(order));
        }
        if (order > max_order) {
            throw InvalidInput("quotient order " + std::to_string(order) + " exceeds supported maximum");
        }
        if (raw_weights.empty()) {
            throw InvalidInput("quotient singularity needs at least one weight");
        }
        std::vector<std::int64_t> residues;
        residues.reserve(raw_weights.size());
        for (std::int64_t a : raw_weights) {
            std::int64_t res = a % order;
            if (res < 0) {
                res += order;
            }
            residues.push_back(res);
        }
        return QuotientSingularity(order, std::move(residues));
    }

    static QuotientSingularity normalize(std::int64_t order, std::initializer_list<std::int64_t> raw_weights) {
        return normalize(order, std::span<const std::int64_t>(raw_weights.begin(), raw_weights.size()));
    }

    std::int64_t order() const noexcept { return order_; }
    std::span<const std::int64_t> weights() const noexcept { return weights_; }
    std::size_t dimension() const noexcept { return weights_.size(); }

    /// Renders as "1/r(a_1,...,a_n)".
    std::string to_string() const {
        std::string out = "1/" + std::to_string(order_) + "(";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += std::to_string(weights_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;

private:
    QuotientSingularity(std::int64_t order, std::vector<std::int64_t> weights)
        : order_(order), weights_(std::move(weights)) {}

    std::int64_t order_;
    std::vector<std::int64_t> weights_;
};

namespace detail {

// Numerator (over r) of the j-th discrepancy sum.
inline std::int64_t discrepancy_numerator(const QuotientSingularity& s, std::int64_t j) {
    const std::int64_t r = s.order();
    std::int64_t total = 0;
    for (std::int64_t a : s.weights()) {
        const std::int64_t rem = (j * a) % r;
        total += rem == 0 ? r : rem;
    }
    return total;
}

} // namespace detail

/// The r sums indexed j = 1..r. The last entry is always n.
inline std::vector<Rational> discrepancy_profile(const QuotientSingularity& s) {
    std::vector<Rational> profile;
    profile.reserve(static_cast<std::size_t>(s.order()));
    for (std::int64_t j = 1; j <= s.order(); ++j) {
        profile.emplace_back(detail::discrepancy_numerator(s, j), s.order());
    }
    return profile;
}

/// Minimal log discrepancy of the germ; lies in (0, n].
inline Rational mld(const QuotientSingularity& s) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t j = 1; j <= s.order(); ++j) {
        best = std::min(best, detail::discrepancy_numerator(s, j));
    }
    return Rational(best, s.order());
}

inline void require_eps(const Rational& eps) {
    if (eps <= 0 || eps > 1) {
        throw InvalidInput("eps must lie in (0, 1], got " + to_string(eps));
    }
}

/// True iff mld(s) >= eps. eps outside (0, 1] is rejected.
inline bool is_eps_lc(const QuotientSingularity& s, const Rational& eps) {
    require_eps(eps);
    return mld(s) >= eps;
}

} // namespace polbound
