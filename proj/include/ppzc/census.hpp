#pragma once

// Exhaustive censuses: cubic permutation polynomials, the distinct
// permutations they generate, which of those keep an interleaved Zadoff-Chu
// sequence CAZAC, and how many of all N! permutations do.
//
// The N! sweep walks permutations in lexicographic order, split into rank
// ranges ("work units"). Completed units can be appended to a checkpoint file
// as "N,u,range_start,range_end,count" lines and skipped on resume.

#include "ppzc/budget.hpp"
#include "ppzc/corr.hpp"
#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/parallel.hpp"
#include "ppzc/permpoly.hpp"
#include "ppzc/zcseq.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ppzc {

inline constexpr i64 kCensusMaxN = 12;
inline constexpr std::uint64_t kCensusUnit = 1'000'000;

inline std::uint64_t factorial(i64 n) {
    std::uint64_t f = 1;
    for (i64 i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Permutation of {0..n-1} at lexicographic rank `rank`.
inline std::vector<int> unrank_permutation(i64 n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<int>(i);
    std::vector<int> out;
    out.reserve(pool.size());
    for (i64 i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

/// CAZAC test of x[sigma[k]] for a fixed root sequence x, specialised for
/// streaming many permutations. pair[i*N + j] holds x[i] x*[j].
class PermutationTester {
public:
    PermutationTester(const PhaseSeq& x, double tol = kDefaultTol)
        : n_(static_cast<int>(x.size())), threshold_sq_(tol * tol * static_cast<double>(x.size() * x.size())) {
        const RootTable roots(x.modulus());
        pair_.resize(static_cast<std::size_t>(n_ * n_));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) pair_[static_cast<std::size_t>(i * n_ + j)] = roots[x[i] - x[j]];
        }
    }

    /// Early exit rejects at the first delay d = 1, 2, ... with |theta(d)| > tol*N.
    /// Only d <= N/2 is scanned since theta(N-d) is the conjugate of theta(d).
    bool is_cazac(const int* sigma, bool early_exit = true) const {
        if (!early_exit) return max_sidelobe_sq(sigma) <= threshold_sq_;
        for (int d = 1; d <= n_ / 2; ++d) {
            if (std::norm(theta(sigma, d)) > threshold_sq_) return false;
        }
        return true;
    }

    double max_sidelobe_sq(const int* sigma) const {
        double worst = 0.0;
        for (int d = 1; d < n_; ++d) worst = std::max(worst, std::norm(theta(sigma, d)));
        return worst;
    }

private:
    cplx theta(const int* sigma, int d) const {
        double re = 0.0, im = 0.0;
        int j = d;
        for (int k = 0; k < n_; ++k) {
            const cplx& p = pair_[static_cast<std::size_t>(sigma[k] * n_ + sigma[j])];
            re += p.real();
            im += p.imag();
            if (++j == n_) j = 0;
        }
        return {re, im};
    }

    int n_;
    double threshold_sq_;
    std::vector<cplx> pair_;
};

struct CensusOptions {
    Budget budget;
    unsigned workers = 1;
    std::optional<std::filesystem::path> checkpoint;
    bool early_exit = true;
    double tol = kDefaultTol;
    std::uint64_t unit = kCensusUnit;
    i64 cap = kCensusMaxN;
};

struct CensusResult {
    i64 n = 0;
    i64 u = 1;
    std::uint64_t count = 0;          // CAZAC permutations in the completed units
    std::uint64_t total = 0;          // N!
    std::uint64_t checked = 0;        // permutations evaluated in this run
    std::uint64_t resumed_units = 0;  // units taken from the checkpoint
    std::uint64_t units = 0;
    bool complete = false;            // false when the budget stopped the sweep
    double elapsed = 0.0;
};

namespace detail {

struct UnitKey {
    std::uint64_t start;
    std::uint64_t end;
    friend auto operator<=>(const UnitKey&, const UnitKey&) = default;
};

inline std::map<UnitKey, std::uint64_t> read_checkpoint(const std::filesystem::path& path, i64 n, i64 u) {
    std::map<UnitKey, std::uint64_t> done;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> parts;
        while (std::getline(fields, cell, ',')) parts.push_back(cell);
        if (parts.size() != 5) continue;
        try {
            if (std::stoll(parts[0]) != n || std::stoll(parts[1]) != u) continue;
            done[{std::stoull(parts[2]), std::stoull(parts[3])}] = std::stoull(parts[4]);
        } catch (const std::exception&) {
            continue;
        }
    }
    return done;
}

} // namespace detail

/// Number of permutations sigma of Z_N for which zc(N, u, 0)[sigma[k]] is CAZAC.
inline CensusResult cazac_permutation_census(i64 n, i64 u = 1, const CensusOptions& opt = {}) {
    if (n < 1) throw PreconditionError("cazac_permutation_census: N must be >= 1");
    if (n > opt.cap) {
        throw CapExceeded("cazac_permutation_census: N=" + std::to_string(n) + " exceeds cap " + std::to_string(opt.cap));
    }
    if (opt.unit == 0) throw PreconditionError("cazac_permutation_census: work unit must be positive");

    const auto x = zc_phases(n, u, 0);
    const PermutationTester tester(x, opt.tol);
    const BudgetClock clock(opt.budget);

    CensusResult out;
    out.n = n;
    out.u = u;
    out.total = factorial(n);
    out.units = (out.total + opt.unit - 1) / opt.unit;

    std::map<detail::UnitKey, std::uint64_t> resumed;
    if (opt.checkpoint) resumed = detail::read_checkpoint(*opt.checkpoint, n, u);

    std::vector<std::optional<std::uint64_t>> unit_counts(static_cast<std::size_t>(out.units));
    std::atomic<std::uint64_t> checked{0};
    std::mutex file_mutex;
    std::ofstream log;
    if (opt.checkpoint) log.open(*opt.checkpoint, std::ios::app);

    parallel_for(static_cast<std::size_t>(out.units), opt.workers, [&](std::size_t unit) {
        const std::uint64_t start = unit * opt.unit;
        const std::uint64_t end = std::min(out.total, start + opt.unit);
        if (auto it = resumed.find({start, end}); it != resumed.end()) {
            unit_counts[unit] = it->second;
            return;
        }
        if (clock.exhausted(checked.load(std::memory_order_relaxed))) return;

        auto sigma = unrank_permutation(n, start);
        std::uint64_t count = 0;
        for (std::uint64_t r = start; r < end; ++r) {
            if (tester.is_cazac(sigma.data(), opt.early_exit)) ++count;
            std::next_permutation(sigma.begin(), sigma.end());
        }
        checked.fetch_add(end - start, std::memory_order_relaxed);
        unit_counts[unit] = count;
        if (log.is_open()) {
            std::lock_guard lock(file_mutex);
            log << n << ',' << u << ',' << start << ',' << end << ',' << count << '\n';
            log.flush();
        }
    });

    out.complete = true;
    for (const auto& c : unit_counts) {
        if (c) {
            out.count += *c;
        } else {
            out.complete = false;
        }
    }
    for (std::size_t unit = 0; unit < unit_counts.size(); ++unit) {
        const std::uint64_t start = unit * opt.unit;
        if (resumed.count({start, std::min(out.total, start + opt.unit)})) ++out.resumed_units;
    }
    out.checked = checked.load();
    out.elapsed = clock.elapsed();
    return out;
}

struct CensusRow {
    i64 n = 0;
    i64 u_used = 1;
    std::uint64_t total_cpps = 0;        // coefficient tuples, f0 ranging over Z_N
    std::uint64_t unique_cpp_perms = 0;
    std::uint64_t cpp_cazac_perms = 0;
    std::optional<std::uint64_t> all_cazac_perms; // set only when the N! sweep completed
    bool all_column_requested = false;
    double elapsed_cpp = 0.0;
    double elapsed_all = 0.0;
};

/// One Table-I style row. The N! column runs only when `with_all_column`
/// and N is within the census cap; a budget stop leaves it unset.
inline CensusRow table1_row(i64 n, i64 u = 1, const CensusOptions& opt = {}, bool with_all_column = true) {
    CensusRow row;
    row.n = n;
    row.u_used = u;
    const auto t0 = std::chrono::steady_clock::now();

    const auto cpps = enumerate_cpps(n, true, kDefaultPolyCap, opt.workers);
    const auto unique = dedup_permutations(cpps);
    const auto x = zc_phases(n, u, 0);
    row.total_cpps = cpps.size();
    row.unique_cpp_perms = unique.size();
    for (const auto& p : unique) row.cpp_cazac_perms += is_cazac(interleave(x, p.perm), opt.tol) ? 1 : 0;
    row.elapsed_cpp = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (with_all_column && n <= opt.cap) {
        row.all_column_requested = true;
        const auto census = cazac_permutation_census(n, u, opt);
        if (census.complete) row.all_cazac_perms = census.count;
        row.elapsed_all = census.elapsed;
    }
    return row;
}

} // namespace ppzc
