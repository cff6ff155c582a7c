#pragma once

// JSON encodings. Rationals are strings "p/q" in lowest terms, integers are
// bare numbers, and object keys keep insertion order so output is canonical.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "polbound/bounds.hpp"
#include "polbound/error.hpp"
#include "polbound/rational.hpp"
#include "polbound/search.hpp"
#include "polbound/verify.hpp"
#include "polbound/wps.hpp"

namespace polbound::json {

using Json = nlohmann::ordered_json;

inline Json rational(const Rational& q) { return to_string(q); }

inline Rational parse_rational_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw InvalidInput(std::string("expected rational string field '") + key + "'");
    }
    return parse_rational(j.at(key).get<std::string>());
}

inline Json weights(std::span<const std::int64_t> ws) { return Json(std::vector<std::int64_t>(ws.begin(), ws.end())); }

inline Json hypersurface(const Hypersurface& X) {
    return Json{{"weights", weights(X.weights().weights())}, {"degree", X.degree()}};
}

inline Hypersurface parse_hypersurface(const Json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("degree")) {
        throw InvalidInput("hypersurface JSON needs \"weights\" and \"degree\"");
    }
    const Json& w = j.at("weights");
    const Json& d = j.at("degree");
    if (!w.is_array() || !d.is_number_integer()) {
        throw InvalidInput("hypersurface weights must be an array and degree an integer");
    }
    std::vector<std::int64_t> ws;
    for (const auto& item : w) {
        if (!item.is_number_integer()) {
            throw InvalidInput("hypersurface weights must be integers");
        }
        ws.push_back(item.get<std::int64_t>());
    }
    return Hypersurface(WeightSystem(std::move(ws)), d.get<std::int64_t>());
}

inline Json quotient(const QuotientSingularity& s) {
    return Json{{"notation", s.to_string()}, {"order", s.order()}, {"weights", weights(s.weights())}};
}

inline Json record(const SingularityRecord& r) {
    return Json{{"locus",
                 {{"kind", r.locus.kind == Locus::Kind::Vertex ? "vertex" : "stratum"},
                  {"indices", r.locus.indices}}},
                {"type", quotient(r.type)},
                {"mld", rational(r.mld)},
                {"assumptions", r.assumptions}};
}

inline Json records(const std::vector<SingularityRecord>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) {
        out.push_back(record(r));
    }
    return out;
}

inline Json bound_report(const BoundReport& b) {
    return Json{{"vol_lower_bound", rational(b.vol_lower_bound)},
                {"birational_threshold", b.birational_threshold},
                {"system", b.system}};
}

inline Json composed(const ComposedThreshold& c) {
    return Json{{"system", c.system}, {"coefficient", c.coefficient}, {"m", c.m}};
}

inline Json verification(const VerificationReport& r) {
    return Json{{"instance", hypersurface(r.instance)},
                {"eps", rational(r.eps)},
                {"mld", rational(r.mld)},
                {"canonical_amplitude", r.canonical_amplitude},
                {"fibration_dimension", r.fibration_dimension},
                {"inventory", records(r.inventory)},
                {"volume", rational(r.volume)},
                {"vol_bound", rational(r.vol_bound)},
                {"threshold_paper", r.threshold_paper},
                {"threshold_computed", r.threshold_computed},
                {"tightness", rational(r.tightness)},
                {"pass", r.pass},
                {"assumptions", r.assumptions}};
}

inline Json hit(const SearchHit& h) {
    return Json{{"instance", hypersurface(h.instance)},
                {"eps", rational(h.eps)},
                {"volume", rational(h.volume)},
                {"bound", rational(h.bound)},
                {"case", to_string(h.theorem_case)},
                {"tightness", rational(h.tightness)},
                {"certified", h.certified},
                {"assumptions", h.assumptions}};
}

inline Json hits(const std::vector<SearchHit>& hs) {
    Json out = Json::array();
    for (const auto& h : hs) {
        out.push_back(hit(h));
    }
    return out;
}

inline Json sweep(const SweepReport& r) {
    return Json{{"examined", r.examined}, {"certified", r.certified}, {"violations", hits(r.violations)}};
}

} // namespace polbound::json
