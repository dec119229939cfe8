#pragma once

// Deterministic CSV tables for the figure and table data. Rows follow the
// order of the requested N list; numbers use fixed precision so the bytes
// depend only on the inputs.

#include "ppzc/census.hpp"
#include "ppzc/equiv.hpp"
#include "ppzc/orthoset.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace ppzc {

namespace detail {

inline std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

} // namespace detail

/// N,fraction,fraction_dedup. N without any valid QPP has no fraction and is skipped.
inline std::string fig1_csv(const std::vector<i64>& ns, i64 u = 1, unsigned workers = 1) {
    std::string out = "N,fraction,fraction_dedup\n";
    for (i64 n : ns) {
        if (gcd(u, n) != 1) continue;
        const auto s = uniqueness_fraction(n, u, workers);
        if (s.qpp_total == 0) continue;
        out += std::to_string(n) + ',' + detail::fixed(s.fraction(), 6) + ',' + detail::fixed(s.fraction_dedup(), 6) + '\n';
    }
    return out;
}

/// N,by_qpp,by_root,totient.
inline std::string fig2_csv(const std::vector<i64>& ns, i64 u = 1) {
    std::string out = "N,by_qpp,by_root,totient\n";
    for (i64 n : ns) {
        if (gcd(u, n) != 1) continue;
        const auto c = max_unique_counts(n, u);
        out += std::to_string(n) + ',' + std::to_string(c.by_qpp) + ',' + std::to_string(c.by_root) + ',' +
               std::to_string(c.totient) + '\n';
    }
    return out;
}

/// N,min,values: distinct |theta(0)|/N below 1 over pairs of distinct QPP
/// interleaves, ';'-joined. N without any such pair is skipped.
inline std::string fig3_csv(const std::vector<i64>& ns, i64 u = 1, unsigned workers = 1) {
    std::string out = "N,min,values\n";
    for (i64 n : ns) {
        if (gcd(u, n) != 1) continue;
        const auto s = min_nonzero_crosscorr(n, u, workers);
        if (s.values.empty()) continue;
        std::string joined;
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i) joined += ';';
            joined += detail::fixed(s.values[i], 9);
        }
        out += std::to_string(n) + ',' + detail::fixed(s.min, 9) + ',' + joined + '\n';
    }
    return out;
}

struct Table1Report {
    std::string csv;
    std::vector<CensusRow> rows;
    bool budget_exceeded = false; // some requested N! column did not finish
};

/// N,total_cpps,unique_cpp_perms,cpp_cazac_perms,all_cazac_perms. The last
/// column is computed for N <= all_max and left empty otherwise or when the
/// budget stopped it.
inline Table1Report table1_report(const std::vector<i64>& ns, i64 u, const CensusOptions& opt, i64 all_max) {
    Table1Report rep;
    rep.csv = "N,total_cpps,unique_cpp_perms,cpp_cazac_perms,all_cazac_perms\n";
    for (i64 n : ns) {
        if (gcd(u, n) != 1) continue;
        const bool want_all = n <= all_max && n <= opt.cap;
        auto row = table1_row(n, u, opt, want_all);
        if (want_all && !row.all_cazac_perms) rep.budget_exceeded = true;
        rep.csv += std::to_string(n) + ',' + std::to_string(row.total_cpps) + ',' + std::to_string(row.unique_cpp_perms) +
                   ',' + std::to_string(row.cpp_cazac_perms) + ',' +
                   (row.all_cazac_perms ? std::to_string(*row.all_cazac_perms) : std::string()) + '\n';
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace ppzc
