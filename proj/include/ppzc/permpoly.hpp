#pragma once

// Permutation polynomials over Z_N: validation, enumeration, deduplication
// and inversion.
//
// Coefficients are stored lowest degree first, coeffs[i] = f_i. Enumeration
// order and "smallest" tuples compare from the highest degree down, matching
// how the polynomials are usually written (f_v, ..., f_1, f_0).

#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/parallel.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ppzc {

inline constexpr i64 kDefaultPolyCap = 64;

/// Explicit permutation of {0, ..., N-1}; table[k] = pi[k].
class PermArray {
public:
    explicit PermArray(std::vector<i64> table) : table_(std::move(table)) {
        const auto n = table_.size();
        if (n == 0) throw PreconditionError("PermArray: empty table");
        std::vector<char> seen(n, 0);
        for (i64 v : table_) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
                throw PreconditionError("PermArray: table is not a permutation of 0..N-1");
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static PermArray identity(i64 n) {
        std::vector<i64> t(static_cast<std::size_t>(n));
        for (i64 k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = k;
        return PermArray(std::move(t));
    }

    i64 modulus() const noexcept { return static_cast<i64>(table_.size()); }
    const std::vector<i64>& table() const noexcept { return table_; }
    i64 operator[](i64 k) const { return table_[static_cast<std::size_t>(mod(k, modulus()))]; }

    friend bool operator==(const PermArray&, const PermArray&) = default;
    friend auto operator<=>(const PermArray& a, const PermArray& b) { return a.table_ <=> b.table_; }

private:
    std::vector<i64> table_;
};

/// sum_i coeffs[i] * k^i mod N, Horner form in exact integers.
inline i64 eval_poly(i64 modulus, const std::vector<i64>& coeffs, i64 k) {
    const i64 x = mod(k, modulus);
    i64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mod(acc * x + *it, modulus);
    return acc;
}

namespace detail {

/// Table of the polynomial, or empty if two inputs collide. On collision the
/// first offending pair is written to `clash` as (earlier k, later k, value).
inline std::vector<i64> try_table(i64 modulus, const std::vector<i64>& coeffs, i64 (*clash)[3] = nullptr) {
    std::vector<i64> table(static_cast<std::size_t>(modulus));
    std::vector<i64> preimage(static_cast<std::size_t>(modulus), -1);
    for (i64 k = 0; k < modulus; ++k) {
        const i64 v = eval_poly(modulus, coeffs, k);
        auto& slot = preimage[static_cast<std::size_t>(v)];
        if (slot >= 0) {
            if (clash) {
                (*clash)[0] = slot;
                (*clash)[1] = k;
                (*clash)[2] = v;
            }
            return {};
        }
        slot = k;
        table[static_cast<std::size_t>(k)] = v;
    }
    return table;
}

/// Compares coefficient tuples from the highest degree down, padding with zeros.
inline bool coeffs_less(const std::vector<i64>& a, const std::vector<i64>& b) {
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = len; i-- > 0;) {
        const i64 x = i < a.size() ? a[i] : 0;
        const i64 y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

inline std::vector<i64> trim(std::vector<i64> c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(0);
    return c;
}

} // namespace detail

/// Permutation polynomial over Z_N. Bijectivity is checked at construction.
class PermPoly {
public:
    PermPoly(i64 modulus, std::vector<i64> coeffs) : modulus_(modulus) {
        if (modulus < 1) throw PreconditionError("PermPoly: modulus must be >= 1");
        for (auto& c : coeffs) c = mod(c, modulus);
        coeffs_ = detail::trim(std::move(coeffs));
        i64 clash[3] = {0, 0, 0};
        if (detail::try_table(modulus_, coeffs_, &clash).empty()) throw NotBijective(clash[0], clash[1], clash[2]);
    }

    /// Skips the bijectivity check; for enumerators that have already run it.
    static PermPoly trusted(i64 modulus, std::vector<i64> coeffs) {
        PermPoly p;
        p.modulus_ = modulus;
        p.coeffs_ = detail::trim(std::move(coeffs));
        return p;
    }

    i64 modulus() const noexcept { return modulus_; }
    const std::vector<i64>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    i64 coeff(int i) const noexcept {
        return i >= 0 && static_cast<std::size_t>(i) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(i)] : 0;
    }

    i64 operator()(i64 k) const { return eval_poly(modulus_, coeffs_, k); }

    PermArray table() const { return PermArray(detail::try_table(modulus_, coeffs_)); }

    /// Written highest degree first, e.g. "8k^3+2k^2+k".
    std::string to_string() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const i64 c = coeff(i);
            if (c == 0) continue;
            if (!out.empty()) out += '+';
            if (i == 0 || c != 1) out += std::to_string(c);
            if (i >= 1) out += 'k';
            if (i >= 2) out += '^' + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const PermPoly&, const PermPoly&) = default;

private:
    PermPoly() = default;

    i64 modulus_ = 1;
    std::vector<i64> coeffs_{0};
};

inline i64 eval(const PermPoly& p, i64 k) {
    return p(k);
}

/// Explicit table of the polynomial; throws NotBijective on the first collision.
inline PermArray permutation_of(i64 modulus, const std::vector<i64>& coeffs) {
    return PermPoly(modulus, coeffs).table();
}

/// Coefficient conditions for f_2 k^2 + f_1 k to permute Z_N, checked per
/// prime-power factor of N.
inline bool is_qpp_valid(i64 n, i64 f2, i64 f1) {
    const auto fact = factorize(n);
    for (const auto& [p, e] : fact.factors) {
        if (p == 2 && e == 1) {
            if (mod(f1 + f2, 2) == 0) return false;
        } else if (p == 2) {
            if (mod(f1, 2) == 0 || mod(f2, 2) != 0) return false;
        } else {
            if (mod(f1, p) == 0 || mod(f2, p) != 0) return false;
        }
    }
    return true;
}

inline bool is_irreducible_qpp(i64 n, i64 f2) {
    return gcd(n, 2 * f2) < n;
}

/// Every valid QPP with f2 != 0, ordered by (f2, f1, f0). f0 is 0 unless
/// include_f0, in which case it ranges over Z_N.
inline std::vector<PermPoly> enumerate_qpps(i64 n, bool include_f0 = false) {
    if (n < 2) throw PreconditionError("enumerate_qpps: N must be >= 2");
    std::vector<PermPoly> out;
    const i64 f0_end = include_f0 ? n : 1;
    for (i64 f2 = 1; f2 < n; ++f2) {
        for (i64 f1 = 0; f1 < n; ++f1) {
            if (!is_qpp_valid(n, f2, f1)) continue;
            for (i64 f0 = 0; f0 < f0_end; ++f0) out.push_back(PermPoly::trusted(n, {f0, f1, f2}));
        }
    }
    return out;
}

/// Every (f3 != 0, f2, f1[, f0]) whose evaluation map is bijective, found by
/// brute force and ordered by (f3, f2, f1, f0).
inline std::vector<PermPoly> enumerate_cpps(i64 n, bool include_f0 = true, i64 cap = kDefaultPolyCap,
                                            unsigned workers = 1) {
    if (n < 2) throw PreconditionError("enumerate_cpps: N must be >= 2");
    if (n > cap) throw CapExceeded("enumerate_cpps: N=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));

    // A constant offset never affects bijectivity, so test with f0 = 0 only.
    std::vector<std::vector<std::vector<i64>>> by_f3(static_cast<std::size_t>(n - 1));
    parallel_for(static_cast<std::size_t>(n - 1), workers, [&](std::size_t slot) {
        const i64 f3 = static_cast<i64>(slot) + 1;
        for (i64 f2 = 0; f2 < n; ++f2) {
            for (i64 f1 = 0; f1 < n; ++f1) {
                std::vector<i64> c{0, f1, f2, f3};
                if (!detail::try_table(n, c).empty()) by_f3[slot].push_back(std::move(c));
            }
        }
    });

    std::vector<PermPoly> out;
    const i64 f0_end = include_f0 ? n : 1;
    for (const auto& group : by_f3) {
        for (const auto& c : group) {
            for (i64 f0 = 0; f0 < f0_end; ++f0) out.push_back(PermPoly::trusted(n, {f0, c[1], c[2], c[3]}));
        }
    }
    return out;
}

struct UniquePermutation {
    PermArray perm;
    /// Smallest generating coefficient tuple (highest degree compared first).
    PermPoly generator;
};

/// Distinct permutation tables generated by `polys`, sorted by table.
inline std::vector<UniquePermutation> dedup_permutations(const std::vector<PermPoly>& polys) {
    std::map<std::vector<i64>, PermPoly> seen;
    i64 modulus = -1;
    for (const auto& p : polys) {
        if (modulus >= 0 && p.modulus() != modulus) throw LengthMismatch("dedup_permutations: mixed moduli");
        modulus = p.modulus();
        auto table = p.table().table();
        auto it = seen.find(table);
        if (it == seen.end()) {
            seen.emplace(std::move(table), p);
        } else if (detail::coeffs_less(p.coeffs(), it->second.coeffs())) {
            it->second = p;
        }
    }
    std::vector<UniquePermutation> out;
    out.reserve(seen.size());
    for (auto& [table, gen] : seen) out.push_back({PermArray(table), gen});
    return out;
}

inline PermArray invert_permutation(const PermArray& p) {
    std::vector<i64> inv(p.table().size());
    for (std::size_t k = 0; k < inv.size(); ++k) inv[static_cast<std::size_t>(p.table()[k])] = static_cast<i64>(k);
    return PermArray(std::move(inv));
}

/// Composition (a after b): k -> a[b[k]].
inline PermArray compose(const PermArray& a, const PermArray& b) {
    if (a.modulus() != b.modulus()) throw LengthMismatch("compose: moduli differ");
    std::vector<i64> t(b.table().size());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = a[b.table()[k]];
    return PermArray(std::move(t));
}

/// All polynomials of degree <= max_degree whose map equals the inverse of
/// `p`. h0 is pinned to the inverse at 0; the remaining coefficients are
/// scanned in (h_D, ..., h_1) order with early exit on the first mismatch.
/// Interpolation is not used because Z_N is not a field for composite N.
inline std::vector<PermPoly> polynomial_inverses(const PermArray& p, int max_degree, i64 cap = kDefaultPolyCap) {
    if (max_degree < 1 || max_degree > 4) throw PreconditionError("polynomial_inverses: max_degree must be in 1..4");
    const i64 n = p.modulus();
    if (max_degree == 4 && n > cap) {
        throw CapExceeded("polynomial_inverses: N=" + std::to_string(n) + " exceeds cap for degree 4");
    }
    const auto target = invert_permutation(p).table();
    const i64 h0 = target[0];

    // powers[i][k] = k^(i+1) mod N
    std::vector<std::vector<i64>> powers(static_cast<std::size_t>(max_degree), std::vector<i64>(static_cast<std::size_t>(n)));
    for (i64 k = 0; k < n; ++k) {
        i64 acc = 1;
        for (int i = 0; i < max_degree; ++i) {
            acc = mod(acc * k, n);
            powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = acc;
        }
    }

    std::vector<PermPoly> out;
    std::vector<i64> h(static_cast<std::size_t>(max_degree), 0); // h[i] multiplies k^(i+1)
    const auto matches = [&] {
        for (i64 k = 1; k < n; ++k) {
            i64 v = h0;
            for (int i = 0; i < max_degree; ++i) v += h[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (mod(v, n) != target[static_cast<std::size_t>(k)]) return false;
        }
        return true;
    };

    // Odometer over h with the highest degree as the most significant digit.
    while (true) {
        if (matches()) {
            std::vector<i64> c{h0};
            c.insert(c.end(), h.begin(), h.end());
            out.push_back(PermPoly::trusted(n, std::move(c)));
        }
        int i = 0;
        while (i < max_degree && ++h[static_cast<std::size_t>(i)] == n) h[static_cast<std::size_t>(i++)] = 0;
        if (i == max_degree) break;
    }
    std::sort(out.begin(), out.end(), [](const PermPoly& a, const PermPoly& b) {
        return detail::coeffs_less(a.coeffs(), b.coeffs());
    });
    return out;
}

inline std::vector<PermPoly> polynomial_inverses(const PermPoly& p, int max_degree, i64 cap = kDefaultPolyCap) {
    return polynomial_inverses(p.table(), max_degree, cap);
}

} // namespace ppzc
