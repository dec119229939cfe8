#pragma once

// Catalog records: one JSON object per line describing a generated sequence
// with its exact phases and correlation verdict.

#include "ppzc/corr.hpp"
#include "ppzc/errors.hpp"
#include "ppzc/zcseq.hpp"

#include <json.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace ppzc {

struct CatalogRecord {
    i64 n = 0;
    i64 u = 1;
    i64 q = 0;
    InterleaverKind kind = InterleaverKind::none;
    std::vector<i64> coeffs;       // lowest degree first; permutation table for explicit
    std::vector<i64> phases;       // integers mod 2N
    bool cazac = false;
    double max_sidelobe = 0.0;
    std::optional<bool> unique;    // unreachable by basic operations, when evaluated
    std::optional<i64> orthoset_id;
};

inline CatalogRecord make_record(const PhaseSeq& y, i64 u, i64 q, double tol = kDefaultTol) {
    CatalogRecord r;
    r.n = y.size();
    r.u = u;
    r.q = q;
    r.kind = y.meta().kind;
    r.coeffs = y.meta().coeffs;
    r.phases = y.phases();
    const auto rep = pacf(y, tol).report;
    r.cazac = rep.is_cazac;
    r.max_sidelobe = rep.max_sidelobe;
    return r;
}

inline nlohmann::ordered_json to_json(const CatalogRecord& r) {
    nlohmann::ordered_json j;
    j["N"] = r.n;
    j["u"] = r.u;
    j["q"] = r.q;
    j["interleaver"] = to_string(r.kind);
    j["coeffs"] = r.coeffs;
    j["phases"] = r.phases;
    j["cazac"] = r.cazac;
    j["max_sidelobe"] = r.max_sidelobe;
    j["unique"] = r.unique ? nlohmann::ordered_json(*r.unique) : nlohmann::ordered_json(nullptr);
    j["orthoset_id"] = r.orthoset_id ? nlohmann::ordered_json(*r.orthoset_id) : nlohmann::ordered_json(nullptr);
    return j;
}

inline CatalogRecord record_from_json(const nlohmann::json& j) {
    try {
        CatalogRecord r;
        r.n = j.at("N").get<i64>();
        r.u = j.at("u").get<i64>();
        r.q = j.at("q").get<i64>();
        const auto kind = interleaver_kind_from_string(j.at("interleaver").get<std::string>());
        if (!kind) throw PreconditionError("unknown interleaver kind");
        r.kind = *kind;
        r.coeffs = j.at("coeffs").get<std::vector<i64>>();
        r.phases = j.at("phases").get<std::vector<i64>>();
        r.cazac = j.at("cazac").get<bool>();
        r.max_sidelobe = j.at("max_sidelobe").get<double>();
        if (j.contains("unique") && !j["unique"].is_null()) r.unique = j["unique"].get<bool>();
        if (j.contains("orthoset_id") && !j["orthoset_id"].is_null()) r.orthoset_id = j["orthoset_id"].get<i64>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("catalog record: ") + e.what());
    }
}

inline std::string to_line(const CatalogRecord& r) { return to_json(r).dump() + '\n'; }

inline CatalogRecord parse_line(const std::string& line) {
    try {
        return record_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("catalog record: ") + e.what());
    }
}

/// Re-derives cazac and max_sidelobe from the stored phases. Returns an empty
/// string when the record is consistent, otherwise the first problem found.
inline std::string verify_record(const CatalogRecord& r, double tol = kDefaultTol) {
    if (r.n < 1) return "N must be positive";
    if (static_cast<i64>(r.phases.size()) != r.n) return "phase vector length differs from N";
    for (i64 e : r.phases) {
        if (e < 0 || e >= 2 * r.n) return "phase outside [0, 2N)";
    }
    const auto rep = pacf(PhaseSeq(r.n, r.phases), tol).report;
    if (rep.is_cazac != r.cazac) return "cazac flag does not match the phases";
    if (std::abs(rep.max_sidelobe - r.max_sidelobe) > 1e-12) return "max_sidelobe does not match the phases";
    return {};
}

} // namespace ppzc
