#pragma once

// Sets of mutually orthogonal QPP-interleaved Zadoff-Chu sequences over one
// common root sequence. Orthogonality is judged at zero lag only.

#include "ppzc/corr.hpp"
#include "ppzc/equiv.hpp"
#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/parallel.hpp"
#include "ppzc/permpoly.hpp"
#include "ppzc/zcseq.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ppzc {

inline constexpr i64 kDefaultOrthoCap = 128;

/// |theta_ij(0)| / N. Equal for the modulation pair (w_i, w_j) and the
/// interleaved pair (y_i, y_j), since both share the root sequence.
inline double zero_lag_crosscorr(const PhaseSeq& wi, const PhaseSeq& wj) {
    require_same_length(wi, wj, "zero_lag_crosscorr");
    const i64 n = wi.size();
    const i64 m = wi.modulus();
    const RootTable roots(m);
    cplx acc{0.0, 0.0};
    for (i64 k = 0; k < n; ++k) {
        i64 diff = wi[k] - wj[k];
        if (diff < 0) diff += m;
        acc += roots.at_reduced(diff);
    }
    return std::abs(acc) / static_cast<double>(n);
}

/// Fixed-size bitset over graph vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    std::size_t size() const noexcept { return n_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// Lowest set index; the set must not be empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return n_;
    }

    void subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct OrthoGraph {
    i64 n = 0;
    i64 u = 1;
    double tol = kDefaultTol;
    std::vector<PhaseSeq> vertices;    // distinct interleaves, canonical order
    std::vector<PermPoly> generators;  // first QPP producing each vertex
    std::vector<double> zero_lag;      // row-major |theta_ij(0)|/N
    std::vector<VertexSet> adjacency;

    std::size_t size() const noexcept { return vertices.size(); }
    double corr(std::size_t i, std::size_t j) const { return zero_lag[i * vertices.size() + j]; }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& a : adjacency) twice += a.count();
        return twice / 2;
    }
};

inline OrthoGraph build_ortho_graph(i64 n, i64 u = 1, double tol = kDefaultTol, unsigned workers = 1,
                                    i64 cap = kDefaultOrthoCap) {
    if (n > cap) throw CapExceeded("build_ortho_graph: N=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (gcd(u, n) != 1) throw BadRoot("build_ortho_graph: u not relatively prime to N");

    OrthoGraph g;
    g.n = n;
    g.u = u;
    g.tol = tol;
    auto distinct = distinct_qpp_interleaves(n, u);
    g.vertices = std::move(distinct.sequences);
    for (auto idx : distinct.first_qpp) g.generators.push_back(distinct.qpps[idx]);

    const std::size_t v = g.vertices.size();
    g.zero_lag.assign(v * v, 0.0);
    parallel_for(v, workers, [&](std::size_t i) {
        g.zero_lag[i * v + i] = 1.0;
        for (std::size_t j = i + 1; j < v; ++j) g.zero_lag[i * v + j] = zero_lag_crosscorr(g.vertices[i], g.vertices[j]);
    });
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < i; ++j) g.zero_lag[i * v + j] = g.zero_lag[j * v + i];
    }

    g.adjacency.assign(v, VertexSet(v));
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (i != j && g.corr(i, j) <= tol) g.adjacency[i].set(j);
        }
    }
    return g;
}

enum class CliqueMode { exact, greedy };

struct OrthoSetResult {
    std::vector<PermPoly> qpps;
    std::vector<std::size_t> vertex_ids;
    std::size_t size = 0;          // I
    double certificate = 0.0;      // max pairwise |theta(0)|/N, recomputed from the sequences
    CliqueMode mode = CliqueMode::greedy;
    bool budget_exceeded = false;  // exact search stopped early; result is the best clique found
    std::uint64_t nodes = 0;       // branch-and-bound nodes expanded
    std::size_t upper_bound = 0;   // colouring bound at the root; equals size when exact completes
};

namespace detail {

/// Vertices ordered by degeneracy (repeatedly remove a minimum-degree vertex,
/// lowest index on ties); returned in reverse removal order.
inline std::vector<std::size_t> degeneracy_order(const OrthoGraph& g) {
    const std::size_t v = g.size();
    std::vector<std::size_t> degree(v);
    for (std::size_t i = 0; i < v; ++i) degree[i] = g.adjacency[i].count();
    std::vector<char> removed(v, 0);
    std::vector<std::size_t> order;
    order.reserve(v);
    for (std::size_t step = 0; step < v; ++step) {
        std::size_t best = v;
        for (std::size_t i = 0; i < v; ++i) {
            if (!removed[i] && (best == v || degree[i] < degree[best])) best = i;
        }
        removed[best] = 1;
        order.push_back(best);
        g.adjacency[best].for_each([&](std::size_t j) {
            if (!removed[j]) --degree[j];
        });
    }
    std::reverse(order.begin(), order.end());
    return order;
}

/// Branch and bound with greedy colouring bounds over bitsets. Vertices are
/// renumbered in degeneracy order so bit position doubles as colouring order.
class CliqueSearch {
public:
    CliqueSearch(const OrthoGraph& g, std::uint64_t node_budget) : budget_(node_budget), order_(degeneracy_order(g)) {
        const std::size_t v = g.size();
        std::vector<std::size_t> rank(v);
        for (std::size_t i = 0; i < v; ++i) rank[order_[i]] = i;
        adj_.assign(v, VertexSet(v));
        for (std::size_t i = 0; i < v; ++i) {
            g.adjacency[order_[i]].for_each([&](std::size_t j) { adj_[i].set(rank[j]); });
        }
    }

    /// Starting incumbent, in original vertex ids.
    void seed(const std::vector<std::size_t>& clique) {
        best_.clear();
        std::vector<std::size_t> rank(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) rank[order_[i]] = i;
        for (auto id : clique) best_.push_back(rank[id]);
    }

    /// Returns false if the node budget ran out.
    bool run() {
        VertexSet all(adj_.size());
        for (std::size_t i = 0; i < adj_.size(); ++i) all.set(i);
        std::vector<std::size_t> verts;
        std::vector<std::size_t> colours;
        colour_sort(all, verts, colours);
        root_bound_ = colours.empty() ? 0 : colours.back();
        std::vector<std::size_t> current;
        expand(all, current);
        return !stopped_;
    }

    /// Best clique found, in original vertex ids.
    std::vector<std::size_t> best() const {
        std::vector<std::size_t> out;
        for (auto i : best_) out.push_back(order_[i]);
        return out;
    }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::size_t root_bound() const noexcept { return root_bound_; }

private:
    // Sequential greedy colouring; outputs vertices grouped by colour class in
    // ascending colour, with each vertex's colour number.
    void colour_sort(const VertexSet& cand, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
        verts.clear();
        colours.clear();
        VertexSet uncoloured = cand;
        std::size_t colour = 0;
        while (!uncoloured.none()) {
            ++colour;
            VertexSet q = uncoloured;
            while (!q.none()) {
                const std::size_t v = q.first();
                q.reset(v);
                q.subtract(adj_[v]);
                uncoloured.reset(v);
                verts.push_back(v);
                colours.push_back(colour);
            }
        }
    }

    void expand(VertexSet cand, std::vector<std::size_t>& current) {
        if (stopped_) return;
        if (++nodes_ > budget_) {
            stopped_ = true;
            return;
        }
        std::vector<std::size_t> verts;
        std::vector<std::size_t> colours;
        colour_sort(cand, verts, colours);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current.size() + colours[idx] <= best_.size()) return;
            const auto v = verts[idx];
            current.push_back(v);
            VertexSet next = cand & adj_[v];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            cand.reset(v);
            if (stopped_) return;
        }
    }

    std::uint64_t budget_;
    std::vector<std::size_t> order_; // internal index -> original vertex id
    std::vector<VertexSet> adj_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    std::size_t root_bound_ = 0;
    bool stopped_ = false;
};

/// Maximal clique grown by taking, at each step, the candidate with the most
/// neighbours among the remaining candidates (lowest index on ties).
inline std::vector<std::size_t> greedy_clique(const OrthoGraph& g) {
    VertexSet cand(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) cand.set(i);
    std::vector<std::size_t> clique;
    while (!cand.none()) {
        std::size_t best = g.size();
        std::size_t best_deg = 0;
        cand.for_each([&](std::size_t i) {
            const std::size_t deg = (cand & g.adjacency[i]).count();
            if (best == g.size() || deg > best_deg) {
                best = i;
                best_deg = deg;
            }
        });
        clique.push_back(best);
        cand = cand & g.adjacency[best];
    }
    return clique;
}

} // namespace detail

/// Largest pairwise |theta(0)|/N over a set, recomputed from the sequences.
inline double set_certificate(const std::vector<PhaseSeq>& seqs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            worst = std::max(worst, std::abs(pccf(seqs[i], seqs[j])[0]) / static_cast<double>(seqs[i].size()));
        }
    }
    return worst;
}

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

inline OrthoSetResult max_orthogonal_set(const OrthoGraph& g, CliqueMode mode = CliqueMode::exact,
                                         std::uint64_t node_budget = kDefaultNodeBudget) {
    OrthoSetResult out;
    out.mode = mode;
    auto clique = detail::greedy_clique(g);
    if (mode == CliqueMode::exact && g.size() > 0) {
        detail::CliqueSearch search(g, node_budget);
        search.seed(clique);
        out.budget_exceeded = !search.run();
        clique = search.best();
        out.nodes = search.nodes();
        out.upper_bound = out.budget_exceeded ? search.root_bound() : clique.size();
    } else {
        out.upper_bound = clique.size();
    }
    std::sort(clique.begin(), clique.end());

    std::vector<PhaseSeq> members;
    for (auto id : clique) {
        out.vertex_ids.push_back(id);
        out.qpps.push_back(g.generators[id]);
        members.push_back(g.vertices[id]);
    }
    out.size = clique.size();
    out.certificate = set_certificate(members);
    return out;
}

struct CrossCorrSummary {
    double min = 1.0;           // 1.0 when no pair has |theta(0)| < N
    std::vector<double> values; // distinct values below 1, ascending, rounded to 1e-9
    std::size_t pairs = 0;      // pairs contributing
};

/// Distinct zero-lag cross-correlation magnitudes below 1 over all pairs of
/// distinct QPP interleaves. Values within tol of zero are reported as 0.
inline CrossCorrSummary min_nonzero_crosscorr(const OrthoGraph& g) {
    CrossCorrSummary out;
    std::map<long long, double> distinct;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            double c = g.corr(i, j);
            if (c >= 1.0 - g.tol) continue;
            if (c <= g.tol) c = 0.0;
            ++out.pairs;
            const auto key = static_cast<long long>(std::llround(c * 1e9));
            distinct.emplace(key, static_cast<double>(key) / 1e9);
        }
    }
    for (const auto& [key, value] : distinct) out.values.push_back(value);
    if (!out.values.empty()) out.min = out.values.front();
    return out;
}

inline CrossCorrSummary min_nonzero_crosscorr(i64 n, i64 u = 1, unsigned workers = 1) {
    return min_nonzero_crosscorr(build_ortho_graph(n, u, kDefaultTol, workers));
}

} // namespace ppzc
