#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/graph.hpp"

namespace ehf {

/// An induced cycle of length >= 4, listed in cyclic order.
struct HoleCertificate {
    std::vector<int> cycle;

    int length() const { return static_cast<int>(cycle.size()); }
    bool even() const { return length() % 2 == 0; }
};

/// Checks the certificate against the graph: consecutive vertices adjacent,
/// all other pairs non-adjacent, length >= 4. Kept independent of the search.
inline bool validate_hole(const Graph& g, const HoleCertificate& cert) {
    const int len = cert.length();
    if (len < 4) return false;
    VertexSet seen;
    for (int v : cert.cycle) {
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cert.cycle[static_cast<std::size_t>(i)],
                           cert.cycle[static_cast<std::size_t>(j)]) != consecutive)
                return false;
        }
    return true;
}

namespace detail {

/// DFS over induced paths rooted at the cycle's minimum vertex. A neighbor of
/// the root closes a hole and is never an interior vertex (the root edge
/// would be a chord). Returns the first even hole in deterministic order.
inline bool even_hole_dfs(const Graph& g, std::vector<int>& path, VertexSet path_set,
                          VertexSet interior_nbrs, VertexSet above_root,
                          StepCounter& steps, std::vector<int>& out) {
    const int root = path.front();
    const int last = path.back();
    const VertexSet cand = (g.nbr(last) & above_root) - path_set - interior_nbrs;
    for (int w : cand) {
        steps.tick();
        if (g.nbr(w).contains(root)) {
            // Closing edge. Cycle = path + w, length |path| + 1.
            if (path.size() >= 3 && w > path[1] && (path.size() + 1) % 2 == 0) {
                out = path;
                out.push_back(w);
                return true;
            }
            continue;
        }
        path.push_back(w);
        const bool hit = even_hole_dfs(g, path, path_set | VertexSet::single(w),
                                       interior_nbrs | g.nbr(last), above_root, steps, out);
        path.pop_back();
        if (hit) return true;
    }
    return false;
}

}  // namespace detail

/// Finds an even hole (induced cycle of even length >= 4) if one exists.
/// Exact search by induced-path extension; deterministic first answer.
inline std::optional<HoleCertificate> find_even_hole(const Graph& g,
                                                     StepBudget budget = {}) {
    StepCounter steps(budget, "find_even_hole");
    const int n = g.vertex_count();
    std::vector<int> path, found;
    path.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        const VertexSet above_root = g.vertices() - VertexSet::range(root + 1);
        for (int second : g.nbr(root) & above_root) {
            steps.tick();
            path.assign({root, second});
            if (detail::even_hole_dfs(g, path, VertexSet::of({root, second}), VertexSet(),
                                      above_root, steps, found))
                return HoleCertificate{found};
        }
    }
    return std::nullopt;
}

inline bool is_even_hole_free(const Graph& g, StepBudget budget = {}) {
    return !find_even_hole(g, budget).has_value();
}

/// Vertex whose neighborhood is the union of two cliques, with the cliques.
struct BisimplicialWitness {
    int vertex = 0;
    VertexSet clique_a, clique_b;
};

inline bool validate_bisimplicial_witness(const Graph& g, const BisimplicialWitness& w) {
    if (w.vertex < 0 || w.vertex >= g.vertex_count()) return false;
    if ((w.clique_a | w.clique_b) != g.neighbors(w.vertex)) return false;
    for (VertexSet clique : {w.clique_a, w.clique_b})
        for (int u : clique)
            if (!(g.nbr(u) | VertexSet::single(u)).contains_all(clique)) return false;
    return true;
}

namespace detail {

/// Two-coloring of the complement of G[N(v) & within] by BFS from the lowest
/// index of each component. The color classes are cliques of G covering the
/// neighborhood; absent iff the complement has an odd cycle.
inline std::optional<std::pair<VertexSet, VertexSet>> two_clique_cover(const Graph& g, int v,
                                                                       VertexSet within) {
    const VertexSet nb = g.nbr(v) & within;
    VertexSet color0, color1;
    std::vector<int> queue;
    for (int start : nb) {
        if ((color0 | color1).contains(start)) continue;
        color0.insert(start);
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const bool u_in_0 = color0.contains(u);
            const VertexSet co_nbrs = (nb - g.nbr(u)) - VertexSet::single(u);
            for (int w : co_nbrs) {
                if (u_in_0 ? color0.contains(w) : color1.contains(w)) return std::nullopt;
                if ((color0 | color1).contains(w)) continue;
                (u_in_0 ? color1 : color0).insert(w);
                queue.push_back(w);
            }
        }
    }
    return std::make_pair(color0, color1);
}

inline bool bisimplicial_in(const Graph& g, int v, VertexSet within) {
    return two_clique_cover(g, v, within).has_value();
}

}  // namespace detail

inline std::optional<BisimplicialWitness> bisimplicial_witness(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw ArgumentError("bisimplicial_witness: vertex " + std::to_string(v) +
                            " out of range");
    auto cover = detail::two_clique_cover(g, v, g.vertices());
    if (!cover) return std::nullopt;
    return BisimplicialWitness{v, cover->first, cover->second};
}

inline bool is_bisimplicial(const Graph& g, int v) {
    return bisimplicial_witness(g, v).has_value();
}

/// True iff every vertex is bisimplicial.
inline bool is_quasi_line(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!detail::bisimplicial_in(g, v, g.vertices())) return false;
    return true;
}

/// Vertex order where each vertex is bisimplicial among itself and its
/// successors.
struct EliminationOrder {
    std::vector<int> order;
};

inline bool validate_elimination_order(const Graph& g, const EliminationOrder& eo) {
    const int n = g.vertex_count();
    if (static_cast<int>(eo.order.size()) != n) return false;
    VertexSet remaining = g.vertices();
    for (int v : eo.order) {
        if (v < 0 || v >= n || !remaining.contains(v)) return false;
        if (!detail::bisimplicial_in(g, v, remaining)) return false;
        remaining.erase(v);
    }
    return true;
}

/// Greedy peeling: repeatedly remove the lowest-indexed vertex that is
/// bisimplicial in the remaining induced subgraph. Always succeeds on
/// even-hole-free graphs; absence means the peeling got stuck, nothing more
/// (C_6 peels fine yet has an even hole).
inline std::optional<EliminationOrder> bisimplicial_elimination_order(const Graph& g) {
    EliminationOrder eo;
    eo.order.reserve(static_cast<std::size_t>(g.vertex_count()));
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        int picked = -1;
        for (int v : remaining) {
            if (detail::bisimplicial_in(g, v, remaining)) {
                picked = v;
                break;
            }
        }
        if (picked < 0) return std::nullopt;
        eo.order.push_back(picked);
        remaining.erase(picked);
    }
    return eo;
}

}  // namespace ehf
