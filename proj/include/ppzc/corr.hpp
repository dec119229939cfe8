#pragma once

// Periodic auto/cross-correlation, the DFT-based zero-autocorrelation test,
// and the five CAZAC-preserving basic operations.

#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/zcseq.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace ppzc {

/// Normalized magnitude at or below which a correlation value counts as zero.
inline constexpr double kDefaultTol = 1e-9;

struct CorrReport {
    i64 n = 0;
    double peak = 0.0;         // Re theta(0)
    double max_sidelobe = 0.0; // max_{d != 0} |theta(d)| / N
    i64 sidelobe_argmax = 0;
    bool is_cazac = false;
    double tol = kDefaultTol;
};

struct PacfResult {
    std::vector<cplx> theta;
    CorrReport report;
};

/// theta(d) = sum_k x[k] x*[k+d mod N] for every delay d.
inline PacfResult pacf(const PhaseSeq& x, double tol = kDefaultTol) {
    const i64 n = x.size();
    const i64 m = x.modulus();
    const RootTable roots(m);
    const auto& e = x.phases();

    PacfResult out;
    out.theta.resize(static_cast<std::size_t>(n));
    for (i64 d = 0; d < n; ++d) {
        cplx acc{0.0, 0.0};
        for (i64 k = 0; k < n; ++k) {
            i64 diff = e[static_cast<std::size_t>(k)] - e[static_cast<std::size_t>((k + d) % n)];
            if (diff < 0) diff += m;
            acc += roots.at_reduced(diff);
        }
        out.theta[static_cast<std::size_t>(d)] = acc;
    }

    auto& r = out.report;
    r.n = n;
    r.tol = tol;
    r.peak = out.theta[0].real();
    for (i64 d = 1; d < n; ++d) {
        const double s = std::abs(out.theta[static_cast<std::size_t>(d)]) / static_cast<double>(n);
        if (s > r.max_sidelobe) {
            r.max_sidelobe = s;
            r.sidelobe_argmax = d;
        }
    }
    r.is_cazac = r.max_sidelobe <= tol;
    return out;
}

inline bool is_cazac(const PhaseSeq& x, double tol = kDefaultTol) {
    return pacf(x, tol).report.is_cazac;
}

/// theta_xy(d) = sum_k x[k] y*[k+d mod N].
inline std::vector<cplx> pccf(const PhaseSeq& x, const PhaseSeq& y) {
    require_same_length(x, y, "pccf");
    const i64 n = x.size();
    const i64 m = x.modulus();
    const RootTable roots(m);
    std::vector<cplx> theta(static_cast<std::size_t>(n));
    for (i64 d = 0; d < n; ++d) {
        cplx acc{0.0, 0.0};
        for (i64 k = 0; k < n; ++k) {
            i64 diff = x[k] - y[(k + d) % n];
            if (diff < 0) diff += m;
            acc += roots.at_reduced(diff);
        }
        theta[static_cast<std::size_t>(d)] = acc;
    }
    return theta;
}

struct SpectrumVector {
    i64 n = 0;
    std::vector<double> magnitudes; // |X[k]|
};

struct ZacResult {
    bool zac = false;
    SpectrumVector spectrum;
};

/// X[k] = N^{-1/2} sum_m x[m] W_N^{mk}; x is zero-autocorrelation iff every
/// |X[k]| is 1. The twiddle W_N^{mk} = W_{2N}^{2mk} keeps the sum in exact phases.
inline ZacResult zac_via_dft(const PhaseSeq& x, double tol = kDefaultTol) {
    const i64 n = x.size();
    const i64 m = x.modulus();
    const RootTable roots(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    ZacResult out;
    out.spectrum.n = n;
    out.spectrum.magnitudes.resize(static_cast<std::size_t>(n));
    out.zac = true;
    for (i64 k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        const i64 step = mod(2 * k, m);
        i64 twiddle = 0;
        for (i64 j = 0; j < n; ++j) {
            i64 e = x[j] + twiddle;
            if (e >= m) e -= m;
            acc += roots.at_reduced(e);
            twiddle += step;
            if (twiddle >= m) twiddle -= m;
        }
        const double mag = std::abs(acc) * scale;
        out.spectrum.magnitudes[static_cast<std::size_t>(k)] = mag;
        if (std::abs(mag - 1.0) > tol) out.zac = false;
    }
    return out;
}

namespace op {
/// y[k] = W_{2N}^a x[k]
struct Rotation {
    i64 a;
};
/// y[k] = x[k + f0 mod N]
struct Translation {
    i64 f0;
};
/// y[k] = x[f1 k mod N], gcd(f1, N) = 1
struct Decimation {
    i64 f1;
};
/// y[k] = W_N^{kn} x[k]
struct LinearFm {
    i64 n;
};
/// y[k] = x*[k]
struct Conjugation {};
} // namespace op

using BasicOp = std::variant<op::Rotation, op::Translation, op::Decimation, op::LinearFm, op::Conjugation>;

inline PhaseSeq apply_basic_op(const PhaseSeq& x, const BasicOp& operation) {
    const i64 n = x.size();
    const i64 m = x.modulus();
    std::vector<i64> e(static_cast<std::size_t>(n));
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            for (i64 k = 0; k < n; ++k) {
                auto& out = e[static_cast<std::size_t>(k)];
                if constexpr (std::is_same_v<T, op::Rotation>) {
                    out = x[k] + mod(o.a, m);
                } else if constexpr (std::is_same_v<T, op::Translation>) {
                    out = x[mod(k + o.f0, n)];
                } else if constexpr (std::is_same_v<T, op::Decimation>) {
                    if (gcd(o.f1, n) != 1) {
                        throw BadDecimation("decimation factor " + std::to_string(o.f1) + " is not a unit mod " +
                                            std::to_string(n));
                    }
                    out = x[mod(mod(o.f1, n) * k, n)];
                } else if constexpr (std::is_same_v<T, op::LinearFm>) {
                    out = x[k] + mod(2 * mod(o.n, n) * k, m);
                } else {
                    out = m - x[k];
                }
            }
        },
        operation);
    return PhaseSeq(n, std::move(e), x.meta());
}

} // namespace ppzc
