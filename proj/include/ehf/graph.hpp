#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/vertex_set.hpp"

namespace ehf {

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64. Adjacency
/// is one machine word per vertex; all transforms return new graphs.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;

    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n), 0) {}

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_unchecked(u, v);
    }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_unchecked(u, v);
        return g;
    }

    /// Builds from an edge bitmask in column order: bit 0 = (0,1), bit 1 =
    /// (0,2), bit 2 = (1,2), bit 3 = (0,3), ... — the graph6 bit order.
    /// Requires C(n,2) <= 64, i.e. n <= 11.
    static Graph from_edge_mask(int n, std::uint64_t mask) {
        if (n > 11) throw ArgumentError("from_edge_mask: n > 11 does not fit one word");
        Graph g(n);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if ((mask >> bit) & 1) g.add_edge_unchecked(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return e_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }

    int degree(int v) const { return neighbors(v).size(); }

    /// Unchecked fast path used by the search kernels.
    VertexSet nbr(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }

    struct DegreeStats {
        int min = 0;
        int max = 0;
        std::vector<int> sequence;  // indexed by vertex
    };

    DegreeStats degree_stats() const {
        DegreeStats st;
        st.sequence.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) st.sequence.push_back(nbr(v).size());
        if (n_ > 0) {
            st.min = *std::min_element(st.sequence.begin(), st.sequence.end());
            st.max = *std::max_element(st.sequence.begin(), st.sequence.end());
        }
        return st;
    }

    int min_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = v == 0 ? nbr(v).size() : std::min(d, nbr(v).size());
        return d;
    }

    /// Induced subgraph G[a], vertices relabeled 0..|a|-1 preserving order.
    Graph induced(VertexSet a) const {
        check_subset(a);
        std::vector<int> keep = a.to_vector();
        Graph g(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (adjacent_unchecked(keep[i], keep[j]))
                    g.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    /// G\a, the subgraph induced on V\a.
    Graph without(VertexSet a) const {
        check_subset(a);
        return induced(vertices() - a);
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            g.adj_[static_cast<std::size_t>(u)] =
                (~adj_[static_cast<std::size_t>(u)] & vertices().bits()) & ~VertexSet::single(u).bits();
        g.recount_edges();
        return g;
    }

    /// Contracts each branch set to one vertex; vertices outside the sets are
    /// discarded. Result vertex i corresponds to branch_sets[i]. This is
    /// "take a subgraph, then contract", the operation behind minor models.
    Graph contract(std::span<const VertexSet> branch_sets) const {
        VertexSet seen;
        for (std::size_t i = 0; i < branch_sets.size(); ++i) {
            const VertexSet b = branch_sets[i];
            check_subset(b);
            if (b.empty())
                throw ArgumentError("contract: branch set " + std::to_string(i) + " is empty");
            if (b.intersects(seen))
                throw ArgumentError("contract: branch set " + std::to_string(i) +
                                    " overlaps an earlier set");
            if (!connected_within(b))
                throw ArgumentError("contract: branch set " + std::to_string(i) +
                                    " does not induce a connected subgraph");
            seen |= b;
        }
        Graph g(static_cast<int>(branch_sets.size()));
        for (std::size_t i = 0; i < branch_sets.size(); ++i)
            for (std::size_t j = i + 1; j < branch_sets.size(); ++j)
                if (joined(branch_sets[i], branch_sets[j]))
                    g.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    /// True iff some edge of the graph has one end in a and the other in b.
    bool joined(VertexSet a, VertexSet b) const {
        for (int v : a)
            if (nbr(v).intersects(b)) return true;
        return false;
    }

    /// Vertices reachable from seed staying inside within (seed included).
    VertexSet reach(int seed, VertexSet within) const {
        VertexSet r = VertexSet::single(seed) & within;
        if (r.empty()) return r;
        VertexSet frontier = r;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= nbr(v);
            next = (next & within) - r;
            r |= next;
            frontier = next;
        }
        return r;
    }

    bool connected_within(VertexSet a) const {
        if (a.empty()) return true;
        return reach(a.min(), a) == a;
    }

    std::vector<VertexSet> connected_components() const {
        std::vector<VertexSet> comps;
        VertexSet rest = vertices();
        while (!rest.empty()) {
            VertexSet c = reach(rest.min(), rest);
            comps.push_back(c);
            rest -= c;
        }
        return comps;
    }

    bool is_connected() const { return connected_components().size() == 1; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    static int check_order(int n) {
        if (n < 0 || n > max_vertices)
            throw ArgumentError("graph order " + std::to_string(n) + " outside 0.." +
                                std::to_string(max_vertices));
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw ArgumentError("vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(n_ - 1));
    }

    void check_subset(VertexSet a) const {
        if (!vertices().contains_all(a))
            throw ArgumentError("vertex set contains indices outside the graph");
    }

    bool adjacent_unchecked(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    void add_edge_unchecked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
        if (adjacent_unchecked(u, v)) return;
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++e_;
    }

    void recount_edges() {
        std::size_t total = 0;
        for (int v = 0; v < n_; ++v) total += static_cast<std::size_t>(nbr(v).size());
        e_ = total / 2;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::size_t e_ = 0;
};

// Named builders used throughout the corpora and tests.

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, edges);
}

/// Disjoint union, vertices of b relabeled after a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v : a.nbr(u))
            if (u < v) edges.emplace_back(u, v);
    const int off = a.vertex_count();
    for (int u = 0; u < b.vertex_count(); ++u)
        for (int v : b.nbr(u))
            if (u < v) edges.emplace_back(off + u, off + v);
    return Graph::from_edges(off + b.vertex_count(), edges);
}

}  // namespace ehf
