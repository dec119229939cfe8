#pragma once

// Executable congruence checks behind the QPP CAZAC theorem. All arithmetic
// is exact; the proof quantities
//
//   g3 = 2 f2^2 d
//   g2 = 3 f2 d (f2 d + f1)
//   g1 = d (2 f2 d + f1)(f2 d + f1) + d f2 (N mod 2)
//
// are formed in 128-bit integers and reduced modulo N where congruences only
// depend on residues.

#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/parallel.hpp"
#include "ppzc/permpoly.hpp"

#include <string>
#include <vector>

namespace ppzc {

inline constexpr i64 kTheoryMaxN = 2048;

__extension__ typedef __int128 i128;

struct GValues {
    i128 g3 = 0;
    i128 g2 = 0;
    i128 g1 = 0;
};

inline GValues g_values(i64 n, i64 f2, i64 f1, i64 d) {
    const i128 F2 = f2, F1 = f1, D = d;
    GValues g;
    g.g3 = 2 * F2 * F2 * D;
    g.g2 = 3 * F2 * D * (F2 * D + F1);
    g.g1 = D * (2 * F2 * D + F1) * (F2 * D + F1) + D * F2 * (n % 2);
    return g;
}

namespace detail {

inline i64 red(i128 x, i64 n) {
    i128 r = x % n;
    if (r < 0) r += n;
    return static_cast<i64>(r);
}

inline void require_theory_qpp(i64 n, i64 f2, i64 f1, const char* who) {
    if (n < 2 || n > kTheoryMaxN) throw PreconditionError(std::string(who) + ": N out of range");
    if (f2 <= 0 || f2 >= n || f1 < 0 || f1 >= n || !is_qpp_valid(n, f2, f1)) {
        throw InvalidQpp(std::string(who) + ": (f2=" + std::to_string(f2) + ", f1=" + std::to_string(f1) +
                         ") is not a valid QPP for N=" + std::to_string(n));
    }
}

/// N = 2 mod 4 with f2 odd: the N-divisible-by-2-once branch.
inline bool single_two_odd_f2(i64 n, i64 f2) {
    return n % 4 == 2 && f2 % 2 == 1;
}

/// Every prime factor of N divides f2.
inline bool all_primes_divide(i64 n, i64 f2) {
    for (const auto& pp : factorize(n).factors) {
        if (f2 % pp.prime != 0) return false;
    }
    return true;
}

} // namespace detail

struct TheoremQuantities {
    i64 n = 0;
    i64 u = 1;
    i64 f2 = 0;
    i64 f1 = 0;
    i64 d = 0;
    i64 g3 = 0; // raw values; fit in 64 bits for N <= kTheoryMaxN
    i64 g2 = 0;
    i64 g1 = 0;
    i64 tc = 0;
    bool special_case = false;    // t_c = N / gcd(2 g2, N)
    i64 exponent_sum_mod_n = 0;   // g3 tc^3 + g2 tc^2 + g1 tc mod N
    i64 c1_exponent = 0;          // u * exponent_sum mod N; C1 = W_N^{-c1_exponent}
    bool z_constant_one = false;  // z[k] = 1 for every k

    bool c1_nontrivial() const noexcept { return c1_exponent != 0; }
    bool holds() const noexcept { return c1_nontrivial() && z_constant_one; }
    /// C1 as a (2N)-th root of unity.
    Phase c1_phase() const { return Phase(-2 * c1_exponent, 2 * n); }
};

/// The shift t_c used by the CAZAC argument and the constant it produces.
inline TheoremQuantities theorem1_tc(i64 n, i64 u, i64 f2, i64 f1, i64 d) {
    detail::require_theory_qpp(n, f2, f1, "theorem1_tc");
    if (mod(d, n) == 0) throw DZero("theorem1_tc: delay d must be nonzero mod N");
    if (d < 1 || d >= n) throw PreconditionError("theorem1_tc: d must lie in [1, N)");
    if (gcd(u, n) != 1) throw BadRoot("theorem1_tc: u not relatively prime to N");

    const auto g = g_values(n, f2, f1, d);
    TheoremQuantities q;
    q.n = n;
    q.u = u;
    q.f2 = f2;
    q.f1 = f1;
    q.d = d;
    q.g3 = static_cast<i64>(g.g3);
    q.g2 = static_cast<i64>(g.g2);
    q.g1 = static_cast<i64>(g.g1);

    const i64 g3 = detail::red(g.g3, n);
    const i64 g2 = detail::red(g.g2, n);
    const i64 g1 = detail::red(g.g1, n);
    q.special_case = detail::single_two_odd_f2(n, f2) && d % 2 == 1;
    q.tc = q.special_case ? n / gcd(2 * g2, n) : n / gcd(g2, n);

    const i128 t = q.tc;
    q.exponent_sum_mod_n = detail::red(g3 * t * t * t + g2 * t * t + g1 * t, n);
    q.c1_exponent = mod(mod(u, n) * q.exponent_sum_mod_n, n);

    // z[k] = W_N^{-u (g3 (3 k tc^2 + 3 k^2 tc) + 2 g2 k tc)}
    q.z_constant_one = true;
    for (i64 k = 0; k < n && q.z_constant_one; ++k) {
        const i128 K = k;
        const i128 e = static_cast<i128>(u) * (g3 * (3 * K * t * t + 3 * K * K * t) + 2 * g2 * K * t);
        q.z_constant_one = detail::red(e, n) == 0;
    }
    return q;
}

/// gcd(alpha f2 d + f1, N) against its case value: 2 when N = 2 mod 4, f2 odd
/// and d even; 1 when every prime factor of N divides f2. Throws
/// CaseNotCovered outside both hypotheses.
inline bool check_lemma1(i64 n, i64 f2, i64 f1, i64 d, i64 alpha) {
    detail::require_theory_qpp(n, f2, f1, "check_lemma1");
    if (alpha < 1) throw PreconditionError("check_lemma1: alpha must be positive");
    if (d < 1) throw PreconditionError("check_lemma1: d must be positive");
    i64 expected = 0;
    if (detail::single_two_odd_f2(n, f2) && d % 2 == 0) {
        expected = 2;
    } else if (detail::all_primes_divide(n, f2)) {
        expected = 1;
    } else {
        throw CaseNotCovered("check_lemma1: inputs match neither case");
    }
    const i64 value = mod(mod(alpha * f2, n) * mod(d, n) + f1, n);
    return gcd(value, n) == expected;
}

/// With t = N / gcd(g2, N): g3 t = 0, g2 t = 0 and g1 t != 0 (mod N).
inline bool check_lemma2(i64 n, i64 f2, i64 f1, i64 d) {
    detail::require_theory_qpp(n, f2, f1, "check_lemma2");
    if (!detail::all_primes_divide(n, f2)) throw HypothesisNotMet("check_lemma2: some prime factor of N does not divide f2");
    if (d < 1 || d >= n) throw PreconditionError("check_lemma2: d must lie in [1, N)");
    const auto g = g_values(n, f2, f1, d);
    const i64 g2 = detail::red(g.g2, n);
    const i128 t = n / gcd(g2, n);
    return detail::red(g.g3 * t, n) == 0 && detail::red(g.g2 * t, n) == 0 && detail::red(g.g1 * t, n) != 0;
}

/// N = 2 mod 4, f2 odd. t = N/gcd(g2, N) for even d, N/gcd(2 g2, N) for odd d;
/// then g3 t = 0, 2 g2 t = 0 and g2 t^2 + g1 t != 0 (mod N).
inline bool check_lemma3(i64 n, i64 f2, i64 f1, i64 d) {
    detail::require_theory_qpp(n, f2, f1, "check_lemma3");
    if (!detail::single_two_odd_f2(n, f2)) throw HypothesisNotMet("check_lemma3: requires N = 2 mod 4 and odd f2");
    if (d < 1 || d >= n) throw PreconditionError("check_lemma3: d must lie in [1, N)");
    const auto g = g_values(n, f2, f1, d);
    const i64 g2 = detail::red(g.g2, n);
    const i128 t = d % 2 == 0 ? n / gcd(g2, n) : n / gcd(2 * g2, n);
    return detail::red(g.g3 * t, n) == 0 && detail::red(2 * g.g2 * t, n) == 0 &&
           detail::red(g.g2 * t * t + g.g1 * t, n) != 0;
}

/// u + 2 k h2 != 0 (mod N) for every k in [0, N).
inline bool check_lemma4(i64 n, i64 u, i64 h2) {
    if (n < 1) throw PreconditionError("check_lemma4: N must be positive");
    if (gcd(u, n) != 1) throw BadRoot("check_lemma4: u not relatively prime to N");
    for (i64 k = 0; k < n; ++k) {
        if (mod(u + 2 * mod(k * h2, n), n) == 0) return false;
    }
    return true;
}

struct SweepStats {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::uint64_t not_covered = 0; // lemma 1 inputs outside both cases
    std::string first_failure;

    bool passed() const noexcept { return failures == 0 && cases > 0; }
};

namespace detail {

inline std::vector<SweepStats> sweep_slots() {
    std::vector<SweepStats> s(5);
    const char* names[] = {"theorem1_tc", "lemma1", "lemma2", "lemma3", "lemma4"};
    for (std::size_t i = 0; i < s.size(); ++i) s[i].name = names[i];
    return s;
}

} // namespace detail

/// Runs every checker over its hypothesis-satisfying domain for 2 <= N <= n_max:
/// all valid QPPs (f0 = 0), d in [1, N), alpha in [1, 6], u over the units.
inline std::vector<SweepStats> sweep_theory(i64 n_max, unsigned workers = 1) {
    const std::size_t count = n_max >= 2 ? static_cast<std::size_t>(n_max - 1) : 0;
    std::vector<std::vector<SweepStats>> per_n(count);

    parallel_for(count, workers, [&](std::size_t slot) {
        const i64 n = static_cast<i64>(slot) + 2;
        auto s = detail::sweep_slots();
        const auto note = [&](SweepStats& st, bool ok, auto&& where) {
            ++st.cases;
            if (!ok) {
                ++st.failures;
                if (st.first_failure.empty()) st.first_failure = where();
            }
        };
        const auto us = units(n);
        for (const auto& qpp : enumerate_qpps(n, false)) {
            const i64 f2 = qpp.coeff(2), f1 = qpp.coeff(1);
            const auto tag = [=] {
                return "N=" + std::to_string(n) + " f2=" + std::to_string(f2) + " f1=" + std::to_string(f1);
            };
            const bool lemma2_domain = detail::all_primes_divide(n, f2);
            const bool lemma3_domain = detail::single_two_odd_f2(n, f2);
            for (i64 d = 1; d < n; ++d) {
                const auto where = [&] { return tag() + " d=" + std::to_string(d); };
                for (i64 u : us) {
                    note(s[0], theorem1_tc(n, u, f2, f1, d).holds(), [&] { return where() + " u=" + std::to_string(u); });
                }
                for (i64 alpha = 1; alpha <= 6; ++alpha) {
                    try {
                        note(s[1], check_lemma1(n, f2, f1, d, alpha),
                             [&] { return where() + " alpha=" + std::to_string(alpha); });
                    } catch (const CaseNotCovered&) {
                        ++s[1].not_covered;
                    }
                }
                if (lemma2_domain) note(s[2], check_lemma2(n, f2, f1, d), where);
                if (lemma3_domain) note(s[3], check_lemma3(n, f2, f1, d), where);
            }
            for (i64 u : us) note(s[4], check_lemma4(n, u, f2), [&] { return tag() + " u=" + std::to_string(u); });
        }
        per_n[slot] = std::move(s);
    });

    auto total = detail::sweep_slots();
    for (const auto& s : per_n) {
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i].cases += s[i].cases;
            total[i].failures += s[i].failures;
            total[i].not_covered += s[i].not_covered;
            if (total[i].first_failure.empty()) total[i].first_failure = s[i].first_failure;
        }
    }
    return total;
}

} // namespace ppzc
