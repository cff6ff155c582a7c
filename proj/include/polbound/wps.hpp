#pragma once

// General hypersurfaces X_d in weighted projective space P(w_0, ..., w_{n+1}).
//
// The singularity model inspects only coordinate vertices P_i and the open
// coordinate strata on which the ambient space has a nontrivial isotropy
// group. Quasi-smoothness is replaced by a "lite" test: for every i, either
// w_i | d (P_i is not on X) or some monomial x_i^a x_j of degree d exists.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polbound/error.hpp"
#include "polbound/quotient_sing.hpp"
#include "polbound/rational.hpp"

namespace polbound {

class WeightSystem {
public:
    explicit WeightSystem(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
        if (weights_.size() < 2) {
            throw InvalidInput("a weight system needs at least two weights");
        }
        for (std::int64_t w : weights_) {
            if (w < 1) {
                throw InvalidInput("weights must be positive, got " + std::to_string(w));
            }
        }
    }
    WeightSystem(std::initializer_list<std::int64_t> weights)
        : WeightSystem(std::vector<std::int64_t>(weights)) {}

    std::span<const std::int64_t> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    std::int64_t operator[](std::size_t i) const { return weights_.at(i); }

    std::int64_t sum() const { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }

    std::size_t count_ones() const {
        return static_cast<std::size_t>(std::count(weights_.begin(), weights_.end(), 1));
    }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
    friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<std::int64_t> weights_;
};

/// X_d in P(w_0, ..., w_{n+1}); dimension n = (number of weights) - 2.
class Hypersurface {
public:
    Hypersurface(WeightSystem weights, std::int64_t degree) : weights_(std::move(weights)), degree_(degree) {
        if (degree_ < 1) {
            throw InvalidInput("degree must be >= 1, got " + std::to_string(degree_));
        }
        if (weights_.size() < 3) {
            throw InvalidInput("a hypersurface needs at least three ambient weights");
        }
    }

    const WeightSystem& weights() const noexcept { return weights_; }
    std::int64_t degree() const noexcept { return degree_; }
    std::size_t dimension() const noexcept { return weights_.size() - 2; }

    /// e.g. "X_6 in P(1,1,2,3)"
    std::string to_string() const {
        std::string out = "X_" + std::to_string(degree_) + " in P(";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            out += (i == 0 ? "" : ",") + std::to_string(weights_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Hypersurface&, const Hypersurface&) = default;

private:
    WeightSystem weights_;
    std::int64_t degree_;
};

enum class Structure { Fano, CalabiYau, GeneralType };

inline const char* to_string(Structure s) {
    switch (s) {
    case Structure::Fano: return "fano";
    case Structure::CalabiYau: return "calabi_yau";
    case Structure::GeneralType: return "general_type";
    }
    return "?";
}

struct Locus {
    enum class Kind { Vertex, Stratum };

    Kind kind;
    std::vector<std::size_t> indices; // one index for a vertex, |S| >= 2 for a stratum

    friend bool operator==(const Locus&, const Locus&) = default;
    friend auto operator<=>(const Locus&, const Locus&) = default;
};

struct SingularityRecord {
    Locus locus;
    QuotientSingularity type;
    Rational mld;
    std::vector<std::string> assumptions;
};

inline constexpr const char* kStratumMeetsX = "general member meets the open coordinate stratum";

/// Every index i has gcd of the remaining weights equal to 1.
inline bool is_well_formed(const WeightSystem& w) {
    const auto ws = w.weights();
    for (std::size_t skip = 0; skip < ws.size(); ++skip) {
        std::int64_t g = 0;
        for (std::size_t k = 0; k < ws.size(); ++k) {
            if (k != skip) {
                g = std::gcd(g, ws[k]);
            }
        }
        if (g != 1) {
            return false;
        }
    }
    return true;
}

/// Number of exponent vectors k with sum k_i w_i = m (0 for negative m).
inline Integer count_monomials(const WeightSystem& w, std::int64_t m) {
    constexpr std::int64_t max_degree = 10'000'000;
    if (m < 0) {
        return 0;
    }
    if (m > max_degree) {
        throw InvalidInput("monomial count degree " + std::to_string(m) + " is too large");
    }
    const auto size = static_cast<std::size_t>(m) + 1;
    std::vector<Integer> ways(size, 0);
    ways[0] = 1;
    for (std::int64_t weight : w.weights()) {
        const auto step = static_cast<std::size_t>(weight);
        for (std::size_t k = step; k < size; ++k) {
            ways[k] += ways[k - step];
        }
    }
    return ways.back();
}

/// h^0(X, O_X(m)) for a quasi-smooth general member.
inline Integer h0(const Hypersurface& X, std::int64_t m) {
    return count_monomials(X.weights(), m) - count_monomials(X.weights(), m - X.degree());
}

/// d - sum(w_i); omega_X = O_X(canonical_amplitude).
inline std::int64_t canonical_amplitude(const Hypersurface& X) { return X.degree() - X.weights().sum(); }

inline Structure structure_of(const Hypersurface& X) {
    const std::int64_t amp = canonical_amplitude(X);
    return amp < 0 ? Structure::Fano : (amp == 0 ? Structure::CalabiYau : Structure::GeneralType);
}

/// O_X(1)^n = d / prod(w_i).
inline Rational volume_O1(const Hypersurface& X) {
    Integer prod = 1;
    for (std::int64_t w : X.weights().weights()) {
        prod *= w;
    }
    return Rational(Integer(X.degree()), prod);
}

inline void check_index(const Hypersurface& X, std::size_t i) {
    if (i >= X.weights().size()) {
        throw InvalidInput("vertex index " + std::to_string(i) + " out of range");
    }
}

/// P_i lies on the general member iff no pure power x_i^{d/w_i} exists.
inline bool vertex_on_X(const Hypersurface& X, std::size_t i) {
    check_index(X, i);
    return X.degree() % X.weights()[i] != 0;
}

namespace detail {

// Smallest j != i with a*w_i + w_j = d for some a >= 1.
inline std::optional<std::size_t> tangent_variable(const Hypersurface& X, std::size_t i) {
    const std::int64_t wi = X.weights()[i];
    for (std::size_t j = 0; j < X.weights().size(); ++j) {
        if (j == i) {
            continue;
        }
        const std::int64_t rest = X.degree() - X.weights()[j];
        if (rest >= wi && rest % wi == 0) {
            return j;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Local type 1/w_i(w_k : k != i, j) at the vertex P_i, where x_j is the
/// smallest-index variable eliminated by a monomial x_i^a x_j. std::nullopt
/// when P_i is not on X.
inline std::optional<QuotientSingularity> vertex_quotient_type(const Hypersurface& X, std::size_t i) {
    if (!vertex_on_X(X, i)) {
        return std::nullopt;
    }
    const auto j = detail::tangent_variable(X, i);
    if (!j) {
        throw NotQuasiSmoothAtVertex(i);
    }
    std::vector<std::int64_t> rest;
    for (std::size_t k = 0; k < X.weights().size(); ++k) {
        if (k != i && k != *j) {
            rest.push_back(X.weights()[k]);
        }
    }
    return QuotientSingularity::normalize(X.weights()[i], rest);
}

/// Transverse type 1/c(w_k : k not in S) along the open stratum where exactly
/// the coordinates indexed by S are nonzero, with c = gcd(w_j : j in S).
/// std::nullopt when c = 1.
inline std::optional<QuotientSingularity> stratum_quotient_type(const Hypersurface& X,
                                                                std::span<const std::size_t> stratum) {
    if (stratum.size() < 2) {
        throw InvalidInput("a stratum needs at least two coordinate indices");
    }
    std::vector<bool> in_stratum(X.weights().size(), false);
    std::int64_t c = 0;
    for (std::size_t idx : stratum) {
        check_index(X, idx);
        if (in_stratum[idx]) {
            throw InvalidInput("repeated index in stratum");
        }
        in_stratum[idx] = true;
        c = std::gcd(c, X.weights()[idx]);
    }
    if (c == 1) {
        return std::nullopt;
    }
    std::vector<std::int64_t> rest;
    for (std::size_t k = 0; k < X.weights().size(); ++k) {
        if (!in_stratum[k]) {
            rest.push_back(X.weights()[k]);
        }
    }
    if (rest.empty()) {
        throw InvalidInput("stratum covers every coordinate");
    }
    return QuotientSingularity::normalize(c, rest);
}

/// For each i, either w_i | d or a monomial x_i^a x_j of degree d exists.
inline bool is_quasi_smooth_lite(const Hypersurface& X) {
    for (std::size_t i = 0; i < X.weights().size(); ++i) {
        if (vertex_on_X(X, i) && !detail::tangent_variable(X, i)) {
            return false;
        }
    }
    return true;
}

/// Vertices on X with nontrivial type, then strata with c > 1, each sorted by
/// index. Requires a well-formed weight system.
inline std::vector<SingularityRecord> singularity_inventory(const Hypersurface& X) {
    constexpr std::size_t max_heavy = 20;
    if (!is_well_formed(X.weights())) {
        throw InvalidInput("singularity inventory requires well-formed weights");
    }
    std::vector<SingularityRecord> records;
    const auto ws = X.weights().weights();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        auto type = vertex_quotient_type(X, i);
        if (type && type->order() > 1) {
            Rational value = mld(*type);
            records.push_back({Locus{Locus::Kind::Vertex, {i}}, std::move(*type), std::move(value), {}});
        }
    }

    // Only weights > 1 can share a nontrivial gcd.
    std::vector<std::size_t> heavy;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] > 1) {
            heavy.push_back(i);
        }
    }
    if (heavy.size() > max_heavy) {
        throw InvalidInput("too many weights above 1 for stratum enumeration");
    }
    std::vector<SingularityRecord> strata;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << heavy.size()); ++mask) {
        if (std::popcount(mask) < 2) {
            continue;
        }
        std::vector<std::size_t> subset;
        for (std::size_t b = 0; b < heavy.size(); ++b) {
            if (mask & (std::uint64_t{1} << b)) {
                subset.push_back(heavy[b]);
            }
        }
        auto type = stratum_quotient_type(X, subset);
        if (type && type->order() > 1) {
            Rational value = mld(*type);
            strata.push_back({Locus{Locus::Kind::Stratum, std::move(subset)}, std::move(*type), std::move(value),
                              {kStratumMeetsX}});
        }
    }
    std::sort(strata.begin(), strata.end(),
              [](const SingularityRecord& a, const SingularityRecord& b) { return a.locus < b.locus; });
    records.insert(records.end(), std::make_move_iterator(strata.begin()), std::make_move_iterator(strata.end()));
    return records;
}

/// min(n, smallest mld over the inventory).
inline Rational mld_estimate(const Hypersurface& X) {
    Rational best(static_cast<std::int64_t>(X.dimension()));
    for (const auto& rec : singularity_inventory(X)) {
        best = std::min(best, rec.mld);
    }
    return best;
}

/// The epsilon used in bound formulas: mld_estimate capped at 1.
inline Rational eps_of(const Hypersurface& X) { return std::min(mld_estimate(X), Rational(1)); }

/// Expected image dimension of the map given by |O_X(l)|; -1 when it has no sections.
inline std::int64_t fibration_dimension(const Hypersurface& X, std::int64_t l) {
    const Integer sections = h0(X, l);
    const auto n = static_cast<std::int64_t>(X.dimension());
    if (sections > n + 1) {
        return n;
    }
    return std::max<std::int64_t>(sections.convert_to<std::int64_t>(), 0) - 1;
}

inline std::int64_t fibration_dimension_O1(const Hypersurface& X) { return fibration_dimension(X, 1); }

} // namespace polbound
