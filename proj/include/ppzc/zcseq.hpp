#pragma once

// Zadoff-Chu, interleaved Zadoff-Chu and Frank sequences in exact phase form.

#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/permpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppzc {

enum class InterleaverKind { none, lpp, qpp, cpp, inverse_of_qpp, explicit_table };

inline std::string to_string(InterleaverKind k) {
    switch (k) {
    case InterleaverKind::none: return "none";
    case InterleaverKind::lpp: return "lpp";
    case InterleaverKind::qpp: return "qpp";
    case InterleaverKind::cpp: return "cpp";
    case InterleaverKind::inverse_of_qpp: return "inverse-of-qpp";
    case InterleaverKind::explicit_table: return "explicit";
    }
    return "none";
}

inline std::optional<InterleaverKind> interleaver_kind_from_string(const std::string& s) {
    for (auto k : {InterleaverKind::none, InterleaverKind::lpp, InterleaverKind::qpp, InterleaverKind::cpp,
                   InterleaverKind::inverse_of_qpp, InterleaverKind::explicit_table}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

/// Where a sequence came from. Purely informational.
struct SeqMeta {
    std::optional<i64> u;
    std::optional<i64> q;
    InterleaverKind kind = InterleaverKind::none;
    std::vector<i64> coeffs; // lowest degree first
};

/// Unimodular length-N sequence; element k is W_{2N}^{phases[k]} = exp(-j*pi*phases[k]/N).
class PhaseSeq {
public:
    PhaseSeq(i64 n, std::vector<i64> phases, SeqMeta meta = {}) : n_(n), phases_(std::move(phases)), meta_(std::move(meta)) {
        if (n < 1) throw PreconditionError("PhaseSeq: N must be >= 1");
        if (static_cast<i64>(phases_.size()) != n) throw LengthMismatch("PhaseSeq: phase vector length differs from N");
        for (auto& e : phases_) e = mod(e, 2 * n);
    }

    i64 size() const noexcept { return n_; }
    i64 modulus() const noexcept { return 2 * n_; }
    const std::vector<i64>& phases() const noexcept { return phases_; }
    i64 operator[](i64 k) const { return phases_[static_cast<std::size_t>(k)]; }
    const SeqMeta& meta() const noexcept { return meta_; }
    SeqMeta& meta() noexcept { return meta_; }

    Phase phase(i64 k) const { return Phase(phases_[static_cast<std::size_t>(k)], modulus()); }
    cplx value(i64 k) const { return unit_root(phases_[static_cast<std::size_t>(k)], modulus()); }

    std::vector<cplx> values() const {
        const RootTable roots(modulus());
        std::vector<cplx> out;
        out.reserve(phases_.size());
        for (i64 e : phases_) out.push_back(roots.at_reduced(e));
        return out;
    }

private:
    i64 n_;
    std::vector<i64> phases_;
    SeqMeta meta_;
};

inline void require_same_length(const PhaseSeq& x, const PhaseSeq& y, const char* what) {
    if (x.size() != y.size()) throw LengthMismatch(std::string(what) + ": sequence lengths differ");
}

/// Exponent of the Zadoff-Chu element at index k: u*k*(k + (N mod 2) + 2q) mod 2N.
inline i64 zc_exponent(i64 n, i64 u, i64 q, i64 k) {
    const i64 m = 2 * n;
    return mod(mod(u * k, m) * mod(k + (n % 2) + 2 * q, m), m);
}

inline PhaseSeq zc_phases(i64 n, i64 u = 1, i64 q = 0) {
    if (n < 1) throw PreconditionError("zc_phases: N must be >= 1");
    if (gcd(u, n) != 1) {
        throw BadRoot("root index u=" + std::to_string(u) + " is not relatively prime to N=" + std::to_string(n));
    }
    std::vector<i64> e(static_cast<std::size_t>(n));
    for (i64 k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = zc_exponent(n, u, q, k);
    return PhaseSeq(n, std::move(e), SeqMeta{u, q, InterleaverKind::none, {}});
}

/// y[k] = x[pi[k]].
inline PhaseSeq interleave(const PhaseSeq& x, const PermArray& p) {
    if (x.size() != p.modulus()) throw LengthMismatch("interleave: permutation length differs from sequence length");
    std::vector<i64> e(static_cast<std::size_t>(x.size()));
    for (i64 k = 0; k < x.size(); ++k) e[static_cast<std::size_t>(k)] = x[p[k]];
    SeqMeta meta = x.meta();
    meta.kind = InterleaverKind::explicit_table;
    meta.coeffs.clear();
    return PhaseSeq(x.size(), std::move(e), std::move(meta));
}

inline PhaseSeq interleave(const PhaseSeq& x, const PermPoly& p) {
    auto y = interleave(x, p.table());
    switch (p.degree()) {
    case 0:
    case 1: y.meta().kind = p.coeff(1) == 1 && p.coeff(0) == 0 ? InterleaverKind::none : InterleaverKind::lpp; break;
    case 2: y.meta().kind = InterleaverKind::qpp; break;
    case 3: y.meta().kind = InterleaverKind::cpp; break;
    default: y.meta().kind = InterleaverKind::explicit_table; break;
    }
    y.meta().coeffs = p.coeffs();
    return y;
}

/// GCL modulation w[k] = x[pi[k]] x*[k] of the interleaved Zadoff-Chu sequence.
inline PhaseSeq gcl_modulation(i64 n, i64 u, i64 q, const PermArray& p) {
    const auto x = zc_phases(n, u, q);
    if (p.modulus() != n) throw LengthMismatch("gcl_modulation: permutation length differs from N");
    std::vector<i64> e(static_cast<std::size_t>(n));
    for (i64 k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = x[p[k]] - x[k];
    return PhaseSeq(n, std::move(e), SeqMeta{u, q, InterleaverKind::explicit_table, {}});
}

struct SquareDecomposition {
    i64 s;
    i64 m;

    friend bool operator==(const SquareDecomposition&, const SquareDecomposition&) = default;
};

struct PeriodReport {
    i64 period = 1;
    bool is_full_period_n = false;
    std::vector<SquareDecomposition> square_decompositions; // N = s*m^2, m > 1, ascending m
};

/// Smallest cyclic shift T >= 1 that leaves w unchanged, found by direct scan.
inline PeriodReport modulation_period(const PhaseSeq& w) {
    const i64 n = w.size();
    PeriodReport r;
    for (i64 t = 1; t <= n; ++t) {
        bool ok = true;
        for (i64 k = 0; k < n && ok; ++k) ok = w[(k + t) % n] == w[k];
        if (ok) {
            r.period = t;
            break;
        }
    }
    r.is_full_period_n = r.period == n;
    for (i64 m = 2; m * m <= n; ++m) {
        if (n % (m * m) == 0) r.square_decompositions.push_back({n / (m * m), m});
    }
    return r;
}

/// x[k] == x[N-k] for even N, x[k] == x[N-1-k] for odd N, exact.
inline bool central_symmetry_check(const PhaseSeq& x) {
    const i64 n = x.size();
    for (i64 k = 0; k < n; ++k) {
        const i64 mirror = n % 2 == 0 ? mod(n - k, n) : n - 1 - k;
        if (x[k] != x[mirror]) return false;
    }
    return true;
}

/// Frank sequence of length m^2 with x[a*m + b] = W_m^{a*b}, a, b in [0, m).
inline PhaseSeq frank_phases(i64 m) {
    if (m < 2) throw PreconditionError("frank_phases: m must be >= 2");
    const i64 n = m * m;
    std::vector<i64> e(static_cast<std::size_t>(n));
    for (i64 a = 0; a < m; ++a) {
        for (i64 b = 0; b < m; ++b) e[static_cast<std::size_t>(a * m + b)] = mod(2 * m * a * b, 2 * n);
    }
    return PhaseSeq(n, std::move(e));
}

} // namespace ppzc
