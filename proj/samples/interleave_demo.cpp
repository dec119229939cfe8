// Interleaves a length-32 Zadoff-Chu sequence with a few permutation
// polynomials and prints the correlation verdict for each.

#include "ppzc/ppzc.hpp"

#include <cstdio>

int main() {
    using namespace ppzc;
    const i64 n = 32;
    const auto x = zc_phases(n, 1, 0);

    const PermPoly polys[] = {
        PermPoly(n, {0, 1, 2}),     // 2k^2 + k, a QPP
        PermPoly(n, {0, 1, 2, 8}),  // 8k^3 + 2k^2 + k, inverse is a QPP
        PermPoly(n, {0, 1, 0, 2}),  // 2k^3 + k
        PermPoly(n, {0, 5}),        // 5k, a plain decimation
    };
    for (const auto& p : polys) {
        const auto y = interleave(x, p);
        const auto rep = pacf(y).report;
        std::printf("%-14s cazac=%-5s max_sidelobe=%.2e unique=%s\n", p.to_string().c_str(),
                    rep.is_cazac ? "true" : "false", rep.max_sidelobe, find_witness(y) ? "false" : "true");
    }

    std::printf("inverses of 8k^3+2k^2+k up to degree 2:");
    for (const auto& h : polynomial_inverses(polys[1], 2)) std::printf(" %s", h.to_string().c_str());
    std::printf("\n");

    const auto w = gcl_modulation(n, 1, 0, polys[0].table());
    std::printf("modulation period of 2k^2+k: %lld\n", static_cast<long long>(modulation_period(w).period));
    return 0;
}
