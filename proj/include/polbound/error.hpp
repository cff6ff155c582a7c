#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polbound {

/// Raised when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The general member has no tangent monomial x_i^a x_j at the vertex P_i.
class NotQuasiSmoothAtVertex : public std::runtime_error {
public:
    explicit NotQuasiSmoothAtVertex(std::size_t vertex)
        : std::runtime_error("no monomial x_" + std::to_string(vertex) +
                             "^a x_j of the hypersurface degree; not quasi-smooth at vertex " +
                             std::to_string(vertex)),
          vertex_(vertex) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

/// A reproduced quantity disagreed with its expected value.
class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(std::string field, const std::string& detail)
        : std::runtime_error("verification failed at '" + field + "': " + detail),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class HypothesisNotMet : public std::runtime_error {
public:
    explicit HypothesisNotMet(std::string filter)
        : std::runtime_error("hypothesis not met: " + filter), filter_(std::move(filter)) {}

    const std::string& filter() const noexcept { return filter_; }

private:
    std::string filter_;
};

} // namespace polbound
