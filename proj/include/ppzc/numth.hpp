#pragma once

// Exact integer number theory and root-of-unity phase arithmetic.
//
// A unimodular value is carried as an integer exponent e modulo 2N and denotes
// exp(-j*pi*e/N), i.e. the (2N)-th root of unity W_{2N}^e. Half-integer powers
// of W_N therefore stay exact integers.

#include "ppzc/errors.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

namespace ppzc {

using i64 = std::int64_t;
using cplx = std::complex<double>;

/// Least non-negative residue of a modulo m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 gcd(i64 a, i64 b) {
    return std::gcd(a, b);
}

struct PrimePower {
    i64 prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{n_i} with p_i strictly increasing.
struct Factorization {
    i64 n = 1;
    std::vector<PrimePower> factors;

    bool has_prime(i64 p) const {
        for (const auto& f : factors) {
            if (f.prime == p) return true;
        }
        return false;
    }

    int exponent_of(i64 p) const {
        for (const auto& f : factors) {
            if (f.prime == p) return f.exponent;
        }
        return 0;
    }
};

/// Trial division; n must be positive.
inline Factorization factorize(i64 n) {
    if (n < 1) throw PreconditionError("factorize: n must be >= 1, got " + std::to_string(n));
    Factorization out;
    out.n = n;
    i64 rest = n;
    for (i64 p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

inline i64 totient(const Factorization& f) {
    i64 phi = f.n;
    for (const auto& pp : f.factors) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

/// Ascending u in [1, n) with gcd(u, n) = 1. For n = 1 this is empty.
inline std::vector<i64> units(i64 n) {
    if (n < 1) throw PreconditionError("units: n must be >= 1, got " + std::to_string(n));
    std::vector<i64> out;
    for (i64 u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1) out.push_back(u);
    }
    return out;
}

/// Modular inverse of a modulo m; a must be a unit.
inline i64 inverse_mod(i64 a, i64 m) {
    i64 old_r = mod(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw PreconditionError("inverse_mod: not a unit");
    return mod(old_s, m);
}

/// Exponent of a (2N)-th root of unity: value exp(-j*pi*numerator/N).
class Phase {
public:
    Phase(i64 numerator, i64 modulus) : modulus_(modulus) {
        if (modulus <= 0 || modulus % 2 != 0) {
            throw PreconditionError("Phase: modulus must be a positive even integer");
        }
        numerator_ = mod(numerator, modulus);
    }

    i64 numerator() const noexcept { return numerator_; }
    i64 modulus() const noexcept { return modulus_; }

    Phase operator+(const Phase& o) const {
        check_same(o);
        return Phase(numerator_ + o.numerator_, modulus_);
    }
    Phase operator-(const Phase& o) const {
        check_same(o);
        return Phase(numerator_ - o.numerator_, modulus_);
    }
    Phase operator-() const { return Phase(-numerator_, modulus_); }

    friend bool operator==(const Phase&, const Phase&) = default;

private:
    void check_same(const Phase& o) const {
        if (o.modulus_ != modulus_) throw LengthMismatch("Phase: moduli differ");
    }

    i64 numerator_;
    i64 modulus_;
};

/// exp(-j*pi*e/N) for a raw exponent e over modulus 2N.
inline cplx unit_root(i64 numerator, i64 modulus) {
    const i64 e = mod(numerator, modulus);
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(modulus);
    return {std::cos(angle), std::sin(angle)};
}

inline cplx phase_value(const Phase& p) {
    return unit_root(p.numerator(), p.modulus());
}

/// Lookup table of all (2N)-th roots of unity, indexed by exponent.
class RootTable {
public:
    explicit RootTable(i64 modulus) : modulus_(modulus) {
        values_.reserve(static_cast<std::size_t>(modulus));
        for (i64 e = 0; e < modulus; ++e) values_.push_back(unit_root(e, modulus));
    }

    i64 modulus() const noexcept { return modulus_; }

    const cplx& operator[](i64 e) const { return values_[static_cast<std::size_t>(mod(e, modulus_))]; }

    /// Index without reduction; e must already lie in [0, modulus).
    const cplx& at_reduced(i64 e) const noexcept { return values_[static_cast<std::size_t>(e)]; }

private:
    i64 modulus_;
    std::vector<cplx> values_;
};

} // namespace ppzc
