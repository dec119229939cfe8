#pragma once

// Uniqueness of QPP-interleaved Zadoff-Chu sequences: exact equality, and
// reachability from a plain Zadoff-Chu sequence through the basic operations
//
//   W_{2N}^{target[k]} = W_N^{vk} * W_N^{s*u2*(k+d+(N mod 2))(k+d)/2 + a/2}.

#include "ppzc/corr.hpp"
#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/parallel.hpp"
#include "ppzc/permpoly.hpp"
#include "ppzc/zcseq.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ppzc {

inline constexpr i64 kDefaultUniquenessCap = 128;

inline bool sequences_equal(const PhaseSeq& x, const PhaseSeq& y) {
    require_same_length(x, y, "sequences_equal");
    return x.phases() == y.phases();
}

/// p0[k]^2 == p1[k]^2 (mod N) for every k.
inline bool squares_congruent(const PermArray& p0, const PermArray& p1) {
    if (p0.modulus() != p1.modulus()) throw LengthMismatch("squares_congruent: moduli differ");
    const i64 n = p0.modulus();
    for (i64 k = 0; k < n; ++k) {
        if (mod(p0[k] * p0[k], n) != mod(p1[k] * p1[k], n)) return false;
    }
    return true;
}

struct EquivWitness {
    i64 u2 = 1; // root index of the plain sequence
    i64 d = 0;  // translation
    i64 a = 0;  // rotation, in units of W_{2N}
    i64 v = 0;  // linear FM index
    int s = 1;  // +1, or -1 for conjugation

    friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

/// Rebuilds the sequence a witness describes by chaining basic operations on
/// zc(N, u2, 0): translation, optional conjugation, linear FM, rotation.
inline PhaseSeq replay(const EquivWitness& w, i64 n) {
    auto y = apply_basic_op(zc_phases(n, w.u2, 0), op::Translation{w.d});
    if (w.s < 0) y = apply_basic_op(y, op::Conjugation{});
    y = apply_basic_op(y, op::LinearFm{w.v});
    return apply_basic_op(y, op::Rotation{w.a});
}

/// First witness in scan order s in {+1,-1}, u2 ascending, d ascending,
/// v ascending. For each candidate the rotation a is forced by k = 0.
///
/// For N >= 3 the second difference of the right-hand side is 2*s*u2, so
/// (s, u2) pairs that disagree with the target's second difference at k = 0
/// are skipped; every such candidate would fail by k = 2 anyway.
inline std::optional<EquivWitness> find_witness(const PhaseSeq& target) {
    const i64 n = target.size();
    const i64 m = target.modulus();
    const i64 c = n % 2;
    const auto& t = target.phases();
    const auto us = units(n);
    const i64 second_diff = n >= 3 ? mod(t[2] - 2 * t[1] + t[0], m) : -1;

    // Translated root-sequence exponents, recomputed per (s, u2).
    std::vector<i64> base(static_cast<std::size_t>(n));
    for (int s : {1, -1}) {
        for (i64 u2 : us.empty() ? std::vector<i64>{1} : us) {
            const i64 su = mod(s * u2, m);
            if (second_diff >= 0 && mod(2 * su, m) != second_diff) continue;
            for (i64 k = 0; k < n; ++k) base[static_cast<std::size_t>(k)] = mod(su * mod(k * (k + c), m), m);
            for (i64 d = 0; d < n; ++d) {
                for (i64 v = 0; v < n; ++v) {
                    const i64 a = mod(t[0] - base[static_cast<std::size_t>(d)], m);
                    bool ok = true;
                    for (i64 k = 1; k < n && ok; ++k) {
                        const i64 rhs = base[static_cast<std::size_t>((k + d) % n)] + 2 * v * k + a;
                        ok = mod(rhs, m) == t[static_cast<std::size_t>(k)];
                    }
                    if (ok) return EquivWitness{u2, d, a, v, s};
                }
            }
        }
    }
    return std::nullopt;
}

/// Whether zc(N, u1, 0) interleaved by `qpp` (f0 = 0) can be obtained from a
/// plain Zadoff-Chu sequence by basic operations.
inline std::optional<EquivWitness> reachable_by_basic_ops(i64 n, i64 u1, const PermPoly& qpp) {
    if (qpp.modulus() != n) throw LengthMismatch("reachable_by_basic_ops: polynomial modulus differs from N");
    if (qpp.coeff(0) != 0) throw PreconditionError("reachable_by_basic_ops: f0 must be 0");
    if (qpp.degree() > 2) throw PreconditionError("reachable_by_basic_ops: interleaver must have degree <= 2");
    return find_witness(interleave(zc_phases(n, u1, 0), qpp));
}

struct QppVerdict {
    PermPoly qpp;
    bool reachable = false;
    std::optional<EquivWitness> witness;
    std::size_t sequence_id = 0; // index into the distinct interleaved sequences
};

struct UniquenessSummary {
    i64 n = 0;
    i64 u1 = 1;
    std::size_t qpp_total = 0;
    std::size_t unique_count = 0;      // QPPs whose sequence is unreachable
    std::size_t distinct_total = 0;    // distinct interleaved sequences
    std::size_t distinct_unique = 0;   // distinct sequences that are unreachable
    std::vector<QppVerdict> per_qpp;   // canonical QPP order

    /// unique_count / qpp_total, 0 when there are no QPPs.
    double fraction() const {
        return qpp_total == 0 ? 0.0 : static_cast<double>(unique_count) / static_cast<double>(qpp_total);
    }
    double fraction_dedup() const {
        return distinct_total == 0 ? 0.0 : static_cast<double>(distinct_unique) / static_cast<double>(distinct_total);
    }
};

/// Interleaves of zc(N, u, 0) by every QPP with f0 = 0, collapsed to
/// distinct sequences. ids[i] gives the distinct index of QPP i; distinct
/// sequences are numbered by first appearance in canonical QPP order.
struct DistinctInterleaves {
    std::vector<PermPoly> qpps;
    std::vector<std::size_t> ids;
    std::vector<PhaseSeq> sequences;
    std::vector<std::size_t> first_qpp; // canonical QPP index of each distinct sequence
};

inline DistinctInterleaves distinct_qpp_interleaves(i64 n, i64 u) {
    DistinctInterleaves out;
    if (n < 2) return out;
    const auto x = zc_phases(n, u, 0);
    out.qpps = enumerate_qpps(n, false);
    std::map<std::vector<i64>, std::size_t> index;
    for (std::size_t i = 0; i < out.qpps.size(); ++i) {
        auto y = interleave(x, out.qpps[i]);
        auto [it, fresh] = index.emplace(y.phases(), out.sequences.size());
        if (fresh) {
            out.sequences.push_back(std::move(y));
            out.first_qpp.push_back(i);
        }
        out.ids.push_back(it->second);
    }
    return out;
}

inline UniquenessSummary uniqueness_fraction(i64 n, i64 u1 = 1, unsigned workers = 1,
                                             i64 cap = kDefaultUniquenessCap) {
    if (n > cap) throw CapExceeded("uniqueness_fraction: N=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (gcd(u1, n) != 1) throw BadRoot("uniqueness_fraction: u1 not relatively prime to N");

    UniquenessSummary out;
    out.n = n;
    out.u1 = u1;
    const auto distinct = distinct_qpp_interleaves(n, u1);

    std::vector<std::optional<EquivWitness>> witnesses(distinct.sequences.size());
    parallel_for(distinct.sequences.size(), workers,
                 [&](std::size_t i) { witnesses[i] = find_witness(distinct.sequences[i]); });

    out.qpp_total = distinct.qpps.size();
    out.distinct_total = distinct.sequences.size();
    for (const auto& w : witnesses) out.distinct_unique += w ? 0 : 1;
    for (std::size_t i = 0; i < distinct.qpps.size(); ++i) {
        const auto id = distinct.ids[i];
        QppVerdict v{distinct.qpps[i], witnesses[id].has_value(), witnesses[id], id};
        if (!v.reachable) ++out.unique_count;
        out.per_qpp.push_back(std::move(v));
    }
    return out;
}

struct UniqueCounts {
    std::size_t by_qpp = 0;  // distinct QPP interleaves of one root sequence
    std::size_t by_root = 0; // distinct plain sequences over all roots
    i64 totient = 0;
};

inline UniqueCounts max_unique_counts(i64 n, i64 u1 = 1, i64 cap = kDefaultUniquenessCap) {
    if (n > cap) throw CapExceeded("max_unique_counts: N=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (gcd(u1, n) != 1) throw BadRoot("max_unique_counts: u1 not relatively prime to N");
    UniqueCounts out;
    out.by_qpp = distinct_qpp_interleaves(n, u1).sequences.size();
    std::map<std::vector<i64>, int> roots;
    for (i64 u : units(n)) roots.emplace(zc_phases(n, u, 0).phases(), 0);
    out.by_root = roots.size();
    out.totient = totient(factorize(n));
    return out;
}

} // namespace ppzc
