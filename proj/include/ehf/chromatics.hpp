#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/graph.hpp"
#include "ehf/recognition.hpp"

namespace ehf {

/// Partition of a vertex set into independent classes. Classes are kept in
/// descending size order, the shape the splitting machinery consumes.
struct Coloring {
    std::vector<VertexSet> classes;

    int count() const { return static_cast<int>(classes.size()); }

    VertexSet support() const {
        VertexSet u;
        for (VertexSet c : classes) u |= c;
        return u;
    }

    void sort_classes_by_size() {
        std::stable_sort(classes.begin(), classes.end(),
                         [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    }
};

/// Independent proper-coloring check: classes disjoint, independent, and
/// covering exactly the expected support.
inline bool validate_coloring(const Graph& g, const Coloring& col, VertexSet support) {
    VertexSet seen;
    for (VertexSet c : col.classes) {
        if (c.empty() || c.intersects(seen) || !g.vertices().contains_all(c)) return false;
        seen |= c;
        for (int v : c)
            if (g.nbr(v).intersects(c)) return false;
    }
    return seen == support;
}

namespace detail {

inline void max_clique_rec(const Graph& g, VertexSet cand, VertexSet cur, VertexSet& best) {
    while (!cand.empty()) {
        if (cur.size() + cand.size() <= best.size()) return;
        const int v = cand.min();
        cand.erase(v);
        const VertexSet ext = cand & g.nbr(v);
        if (ext.empty()) {
            if (cur.size() + 1 > best.size()) best = cur | VertexSet::single(v);
        } else {
            max_clique_rec(g, ext, cur | VertexSet::single(v), best);
        }
    }
}

inline VertexSet max_clique_in(const Graph& g, VertexSet mask) {
    VertexSet best;
    if (!mask.empty()) {
        best = VertexSet::single(mask.min());
        max_clique_rec(g, mask, VertexSet(), best);
    }
    return best;
}

/// Greedy clique from the lowest vertex; cheap lower bound for pruning.
inline int greedy_clique_size(const Graph& g, VertexSet mask) {
    int size = 0;
    VertexSet cand = mask;
    while (!cand.empty()) {
        const int v = cand.min();
        ++size;
        cand &= g.nbr(v);
    }
    return size;
}

/// Enumerates the maximal (within mask) independent sets that contain
/// mask.min(), in deterministic order. emit(I) returning true stops the
/// enumeration early.
template <class Emit>
bool maximal_independent_with_min(const Graph& g, VertexSet mask, Emit&& emit) {
    const int v = mask.min();
    // rest: undecided vertices; skipped: excluded while free (must end up
    // dominated for maximality).
    auto rec = [&](auto&& self, VertexSet current, VertexSet dominated, VertexSet rest,
                   VertexSet skipped) -> bool {
        while (!rest.empty()) {
            const int u = rest.min();
            rest.erase(u);
            if (dominated.contains(u)) continue;
            // Branch 1: u stays out. Only viable if u can still be dominated.
            if ((g.nbr(u) & rest).empty()) {
                // u would stay free forever: forced in.
                current.insert(u);
                dominated |= g.nbr(u);
                continue;
            }
            if (self(self, current, dominated, rest, skipped | VertexSet::single(u)))
                return true;
            // Branch 2: u joins the set.
            current.insert(u);
            dominated |= g.nbr(u);
        }
        if (!dominated.contains_all(skipped)) return false;  // not maximal
        return emit(current);
    };
    return rec(rec, VertexSet::single(v), g.nbr(v), (mask - g.nbr(v)) - VertexSet::single(v),
               VertexSet());
}

/// Decides k-colorability of G[mask]; on success appends the classes found.
inline bool try_color(const Graph& g, VertexSet mask, int k, std::vector<VertexSet>* classes,
                      StepCounter& steps) {
    if (mask.empty()) return true;
    if (k <= 0) return false;
    steps.tick();
    if (mask.size() <= k) {
        if (classes)
            for (int v : mask) classes->push_back(VertexSet::single(v));
        return true;
    }
    if (greedy_clique_size(g, mask) > k) return false;
    return maximal_independent_with_min(g, mask, [&](VertexSet cls) {
        if (classes) classes->push_back(cls);
        if (try_color(g, mask - cls, k - 1, classes, steps)) return true;
        if (classes) classes->pop_back();
        return false;
    });
}

/// chi(G[mask]) >= k, decided without computing chi exactly.
inline bool chromatic_at_least(const Graph& g, VertexSet mask, int k, StepCounter& steps) {
    if (k <= 0) return true;
    if (mask.size() < k) return false;
    return !try_color(g, mask, k - 1, nullptr, steps);
}

}  // namespace detail

/// Largest subgraph order the exact chromatic solver accepts.
inline constexpr int exact_solver_limit = 16;

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
};

inline CliqueResult clique_number(const Graph& g) {
    const VertexSet best = detail::max_clique_in(g, g.vertices());
    return {best.size(), best};
}

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};

inline IndependenceResult independence_number(const Graph& g) {
    const VertexSet best = detail::max_clique_in(g.complement(), g.vertices());
    return {best.size(), best};
}

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

/// Exact chromatic number by branch and bound over maximal independent sets,
/// seeded at the clique lower bound. Deterministic for fixed input.
inline ChromaticResult chromatic_number_in(const Graph& g, VertexSet mask,
                                           StepBudget budget = {}) {
    ChromaticResult res;
    if (mask.empty()) return res;
    if (mask.size() > exact_solver_limit)
        throw ResourceError("chromatic_number: " + std::to_string(mask.size()) +
                            " vertices exceed the exact-solver limit of " +
                            std::to_string(exact_solver_limit));
    StepCounter steps(budget, "chromatic_number");
    for (int k = detail::max_clique_in(g, mask).size();; ++k) {
        std::vector<VertexSet> classes;
        if (detail::try_color(g, mask, k, &classes, steps)) {
            res.chi = k;
            res.witness.classes = std::move(classes);
            res.witness.sort_classes_by_size();
            return res;
        }
    }
}

inline ChromaticResult chromatic_number(const Graph& g, StepBudget budget = {}) {
    return chromatic_number_in(g, g.vertices(), budget);
}

/// True iff g has no proper (k-1)-coloring; early-exits faster than exact chi.
inline bool chromatic_lower_bound_at_least(const Graph& g, int k, StepBudget budget = {}) {
    StepCounter steps(budget, "coloring decision");
    return detail::chromatic_at_least(g, g.vertices(), k, steps);
}

/// Greedy coloring in reverse peeling order. Each vertex sees at most
/// 2*omega-2 colored neighbors (its back-neighborhood is two cliques), so the
/// result never needs more than 2*omega-1 classes.
inline Coloring color_by_elimination(const Graph& g, const EliminationOrder& order) {
    if (!validate_elimination_order(g, order))
        throw ArgumentError("color_by_elimination: not a valid bisimplicial elimination order");
    std::vector<int> color_of(static_cast<std::size_t>(g.vertex_count()), -1);
    int max_color = -1;
    for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
        const int v = *it;
        std::uint64_t used = 0;
        for (int u : g.nbr(v))
            if (color_of[static_cast<std::size_t>(u)] >= 0)
                used |= std::uint64_t{1} << color_of[static_cast<std::size_t>(u)];
        int c = 0;
        while ((used >> c) & 1) ++c;
        color_of[static_cast<std::size_t>(v)] = c;
        max_color = std::max(max_color, c);
    }
    Coloring col;
    col.classes.assign(static_cast<std::size_t>(max_color + 1), VertexSet());
    for (int v = 0; v < g.vertex_count(); ++v)
        col.classes[static_cast<std::size_t>(color_of[static_cast<std::size_t>(v)])].insert(v);
    col.sort_classes_by_size();
    return col;
}

}  // namespace ehf
