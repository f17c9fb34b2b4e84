#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ehf/chromatics.hpp"
#include "ehf/errors.hpp"
#include "ehf/graph.hpp"

namespace ehf {

enum class SplitProvenance { lemma_construction, exhaustive_search };

/// Partition (S, T) of V with chromatic lower bounds on both sides. Any
/// certificate returned by an operation has both achieved flags true.
struct SplitCertificate {
    VertexSet s_side, t_side;
    int s_target = 0, t_target = 0;
    bool s_achieved = false, t_achieved = false;
    SplitProvenance provenance = SplitProvenance::exhaustive_search;
};

inline bool validate_split_certificate(const Graph& g, const SplitCertificate& cert,
                                       StepBudget budget = {}) {
    if (cert.s_side.intersects(cert.t_side)) return false;
    if ((cert.s_side | cert.t_side) != g.vertices()) return false;
    StepCounter steps(budget, "split validation");
    return detail::chromatic_at_least(g, cert.s_side, cert.s_target, steps) &&
           detail::chromatic_at_least(g, cert.t_side, cert.t_target, steps);
}

/// Input for the constructive split: a vertex, an optimal proper coloring of
/// its neighborhood with classes in descending size order, and the prefix
/// length r.
struct LemmaSplitInput {
    int vertex = 0;
    Coloring neighborhood_coloring;
    int r = 2;
};

/// Constructive split from an optimally colored neighborhood. When the color
/// tail V_r..V_p has at most chi(G)-r-1 vertices, S = {x} u V_1 u .. u V_{r-1}
/// and T = V \ S form an (r, chi(G)+1-r)-split. Absent exactly when the tail
/// inequality fails; a verification failure of the constructed split aborts
/// loudly instead of returning absent.
inline std::optional<SplitCertificate> lemma_split(const Graph& g, const LemmaSplitInput& in,
                                                   StepBudget budget = {}) {
    const int x = in.vertex;
    if (x < 0 || x >= g.vertex_count())
        throw ArgumentError("lemma_split: vertex out of range");
    const Coloring& col = in.neighborhood_coloring;
    const int p = col.count();
    if (in.r < 2 || in.r > p)
        throw ArgumentError("lemma_split: r must lie in 2..p");
    const VertexSet nb = g.nbr(x);
    if (!validate_coloring(g, col, nb))
        throw ArgumentError("lemma_split: not a proper coloring of the neighborhood");
    for (int i = 0; i + 1 < p; ++i)
        if (col.classes[static_cast<std::size_t>(i)].size() <
            col.classes[static_cast<std::size_t>(i + 1)].size())
            throw ArgumentError("lemma_split: classes not in descending size order");
    if (chromatic_number_in(g, nb, budget).chi != p)
        throw ArgumentError("lemma_split: neighborhood coloring is not optimal");

    const int chi = chromatic_number(g, budget).chi;
    VertexSet tail;
    for (int i = in.r - 1; i < p; ++i) tail |= col.classes[static_cast<std::size_t>(i)];
    if (tail.size() > chi - in.r - 1) return std::nullopt;
    if (p > chi - 2)
        throw std::logic_error("lemma_split: p <= chi-2 must follow from the tail bound");

    VertexSet prefix;
    for (int i = 0; i < in.r - 1; ++i) prefix |= col.classes[static_cast<std::size_t>(i)];
    SplitCertificate cert;
    cert.s_side = prefix | VertexSet::single(x);
    cert.t_side = g.vertices() - cert.s_side;
    cert.s_target = in.r;
    cert.t_target = chi + 1 - in.r;
    cert.provenance = SplitProvenance::lemma_construction;

    StepCounter steps(budget, "lemma split verification");
    cert.s_achieved = detail::chromatic_at_least(g, cert.s_side, cert.s_target, steps);
    cert.t_achieved = detail::chromatic_at_least(g, cert.t_side, cert.t_target, steps);
    if (!cert.s_achieved || !cert.t_achieved)
        throw std::logic_error(
            "lemma_split: constructed split failed exact verification; this "
            "contradicts the splitting lemma");
    return cert;
}

/// Exhaustive bipartition search for chi(G[S]) >= s and chi(G[T]) >= t.
/// Deterministic: first S in increasing bitmask order; when s == t only
/// bipartitions with vertex 0 in S are scanned.
inline std::optional<SplitCertificate> find_st_split(const Graph& g, int s, int t,
                                                     StepBudget budget = {}) {
    if (s < 1 || t < 1) throw ArgumentError("find_st_split: s and t must be at least 1");
    const int n = g.vertex_count();
    if (n > exact_solver_limit)
        throw ResourceError("find_st_split: graph exceeds the exact-solver limit");
    StepCounter steps(budget, "st-split search");
    const std::uint64_t end = n >= 64 ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t m = 0; m < end; ++m) {
        if (s == t && n > 0 && (m & 1) == 0) continue;
        const VertexSet side_s(m);
        const VertexSet side_t = g.vertices() - side_s;
        if (side_s.size() < s || side_t.size() < t) continue;
        steps.tick();
        if (detail::chromatic_at_least(g, side_s, s, steps) &&
            detail::chromatic_at_least(g, side_t, t, steps))
            return SplitCertificate{side_s, side_t, s,    t,
                                    true,   true,   SplitProvenance::exhaustive_search};
    }
    return std::nullopt;
}

namespace detail {

template <class Fn>
bool for_each_subset_of_size(VertexSet pool, int size, Fn&& fn) {
    if (size == 0) return fn(VertexSet());
    std::vector<int> items = pool.to_vector();
    if (static_cast<int>(items.size()) < size) return false;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == size) {
            VertexSet sub;
            for (int v : pick) sub.insert(v);
            return fn(sub);
        }
        const int missing = size - static_cast<int>(pick.size());
        for (std::size_t i = from; i + static_cast<std::size_t>(missing) <= items.size(); ++i) {
            pick.push_back(items[i]);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

class ChiDecisionCache {
public:
    ChiDecisionCache(const Graph& g, int threshold, StepCounter& steps)
        : g_(g), threshold_(threshold), steps_(steps) {}

    bool at_least(VertexSet mask) {
        auto [it, fresh] = cache_.try_emplace(mask.bits(), false);
        if (fresh) it->second = chromatic_at_least(g_, mask, threshold_, steps_);
        return it->second;
    }

private:
    const Graph& g_;
    int threshold_;
    StepCounter& steps_;
    std::unordered_map<std::uint64_t, bool> cache_;
};

}  // namespace detail

/// (s,t)-graph test: connected, chi = s+t-1, and no two vertex-disjoint
/// vertex sets A, B with chi(G[A]) >= s and chi(G[B]) >= t. Unlike
/// find_st_split the pair may leave vertices uncovered; pairs are scanned in
/// increasing combined size with memoized chromatic decisions.
inline bool is_st_graph(const Graph& g, int s, int t, StepBudget budget = {}) {
    if (s < 1 || t < 1) throw ArgumentError("is_st_graph: s and t must be at least 1");
    const int n = g.vertex_count();
    if (n > exact_solver_limit)
        throw ResourceError("is_st_graph: graph exceeds the exact-solver limit");
    if (!g.is_connected()) return false;

    StepCounter steps(budget, "st-graph search");
    if (!detail::chromatic_at_least(g, g.vertices(), s + t - 1, steps)) return false;
    if (detail::chromatic_at_least(g, g.vertices(), s + t, steps)) return false;

    std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n) + 1);
    const std::uint64_t end = n >= 64 ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t m = 1; m < end; ++m)
        by_size[static_cast<std::size_t>(VertexSet(m).size())].push_back(m);

    detail::ChiDecisionCache ge_s(g, s, steps), ge_t(g, t, steps);
    for (int total = s + t; total <= n; ++total) {
        for (int a = s; a + t <= total; ++a) {
            const int b = total - a;
            for (std::uint64_t m : by_size[static_cast<std::size_t>(a)]) {
                const VertexSet first(m);
                if (!ge_s.at_least(first)) continue;
                const VertexSet rest = g.vertices() - first;
                if (rest.size() < b) continue;
                const bool found = detail::for_each_subset_of_size(
                    rest, b, [&](VertexSet second) {
                        steps.tick();
                        return ge_t.at_least(second);
                    });
                if (found) return false;
            }
        }
    }
    return true;
}

/// Disjoint vertex sets with induced minimum degrees >= s and >= t.
/// Exhaustive: first qualifying set in bitmask order, paired with the t-core
/// of the rest.
inline std::optional<std::pair<VertexSet, VertexSet>> min_degree_split(const Graph& g, int s,
                                                                       int t,
                                                                       StepBudget budget = {}) {
    if (s < 1 || t < 1) throw ArgumentError("min_degree_split: s and t must be at least 1");
    const int n = g.vertex_count();
    if (n > exact_solver_limit)
        throw ResourceError("min_degree_split: graph exceeds the search limit");
    StepCounter steps(budget, "min-degree split search");
    const std::uint64_t end = n >= 64 ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t m = 1; m < end; ++m) {
        const VertexSet a(m);
        if (a.size() < s + 1) continue;
        steps.tick();
        bool ok = true;
        for (int v : a)
            if ((g.nbr(v) & a).size() < s) {
                ok = false;
                break;
            }
        if (!ok) continue;
        // t-core of the remainder: peel low-degree vertices to a fixpoint.
        VertexSet core = g.vertices() - a;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : core)
                if ((g.nbr(v) & core).size() < t) {
                    core.erase(v);
                    changed = true;
                }
        }
        if (!core.empty()) return std::make_pair(a, core);
    }
    return std::nullopt;
}

/// Consistency instance of the clique-bound theorem for (s,t)-graphs: false
/// would exhibit an (s,t)-graph with t <= omega < s+t-1, which the theorem
/// rules out.
inline bool clique_forces_st(const Graph& g, int s, int t, StepBudget budget = {}) {
    if (s < 2 || t < s) throw ArgumentError("clique_forces_st: need t >= s >= 2");
    if (!is_st_graph(g, s, t, budget)) return true;
    const int omega = clique_number(g).omega;
    if (omega < t) return true;
    return omega >= s + t - 1;
}

}  // namespace ehf
