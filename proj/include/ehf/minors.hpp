#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/graph.hpp"

namespace ehf {

struct MinorTarget {
    enum class Kind { clique, disjoint_cliques };

    Kind kind = Kind::clique;
    int k = 0;  // clique order for Kind::clique
    int s = 0;  // clique orders for Kind::disjoint_cliques
    int t = 0;

    static MinorTarget clique(int k) { return {Kind::clique, k, 0, 0}; }
    static MinorTarget disjoint_cliques(int s, int t) {
        return {Kind::disjoint_cliques, 0, s, t};
    }

    std::string describe() const {
        if (kind == Kind::clique) return "K" + std::to_string(k);
        return "K" + std::to_string(s) + "+K" + std::to_string(t);
    }
};

/// Disjoint connected branch sets certifying a minor. For a clique target the
/// sets are pairwise joined by edges. For K_s u K_t the first s sets form the
/// K_s side and the last t the K_t side; only within-side pairs need edges.
struct MinorModel {
    MinorTarget target;
    std::vector<VertexSet> branch_sets;
};

/// Independent validity check used by tests and the harness; shares no code
/// with the search.
inline bool validate_minor_model(const Graph& g, const MinorModel& m) {
    const auto& sets = m.branch_sets;
    std::size_t expected = 0;
    if (m.target.kind == MinorTarget::Kind::clique)
        expected = static_cast<std::size_t>(m.target.k);
    else
        expected = static_cast<std::size_t>(m.target.s + m.target.t);
    if (sets.size() != expected) return false;

    VertexSet seen;
    for (VertexSet b : sets) {
        if (b.empty() || !g.vertices().contains_all(b) || b.intersects(seen)) return false;
        if (!g.connected_within(b)) return false;
        seen |= b;
    }
    auto all_joined = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < hi; ++j)
                if (!g.joined(sets[i], sets[j])) return false;
        return true;
    };
    if (m.target.kind == MinorTarget::Kind::clique) return all_joined(0, sets.size());
    return all_joined(0, static_cast<std::size_t>(m.target.s)) &&
           all_joined(static_cast<std::size_t>(m.target.s), sets.size());
}

namespace detail {

/// Exact branch-set search. Groups are built in order; within a group every
/// pair of sets must be joined and set minima increase, which removes the
/// label symmetry of the unordered target. Branch sets are enumerated small
/// first (exclude-first on the frontier), so complete graphs yield singleton
/// models.
class MinorSearch {
public:
    MinorSearch(const Graph& g, std::vector<int> group_sizes, StepCounter& steps)
        : g_(g), group_sizes_(std::move(group_sizes)), steps_(steps) {
        total_ = 0;
        for (int c : group_sizes_) total_ += c;
    }

    std::optional<std::vector<VertexSet>> run() {
        sets_.clear();
        set_nbrs_.clear();
        group_of_.clear();
        if (next_set(0, 0, VertexSet(), -1)) return sets_;
        return std::nullopt;
    }

private:
    bool next_set(int group, int built_in_group, VertexSet used, int prev_seed) {
        if (built_in_group == group_sizes_[static_cast<std::size_t>(group)]) {
            if (group + 1 == static_cast<int>(group_sizes_.size())) return true;
            return next_set(group + 1, 0, used, -1);
        }
        const VertexSet free = g_.vertices() - used;
        const int remaining_total = total_ - static_cast<int>(sets_.size());
        if (free.size() < remaining_total) return false;
        const int remaining_in_group =
            group_sizes_[static_cast<std::size_t>(group)] - built_in_group;
        if ((free & VertexSet::above(prev_seed)).size() < remaining_in_group) return false;

        for (int seed : free & VertexSet::above(prev_seed)) {
            steps_.tick();
            if (grow(group, built_in_group, used, seed, VertexSet::single(seed), VertexSet()))
                return true;
        }
        return false;
    }

    bool grow(int group, int built_in_group, VertexSet used, int seed, VertexSet current,
              VertexSet banned) {
        steps_.tick();
        const VertexSet pool = ((g_.vertices() - used) & VertexSet::above(seed)) - banned;
        // No completion of `current` can join an earlier set whose
        // neighborhood misses the whole remaining pool.
        const VertexSet potential = current | pool;
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (group_of_[j] != group) continue;
            if (!set_nbrs_[j].intersects(potential)) return false;
        }

        VertexSet frontier;
        for (int v : current) frontier |= g_.nbr(v);
        frontier = (frontier & pool) - current;

        if (frontier.empty()) {
            for (std::size_t j = 0; j < sets_.size(); ++j)
                if (group_of_[j] == group && !set_nbrs_[j].intersects(current)) return false;
            VertexSet nbrs;
            for (int v : current) nbrs |= g_.nbr(v);
            sets_.push_back(current);
            set_nbrs_.push_back(nbrs);
            group_of_.push_back(group);
            if (next_set(group, built_in_group + 1, used | current, seed)) return true;
            sets_.pop_back();
            set_nbrs_.pop_back();
            group_of_.pop_back();
            return false;
        }
        const int u = frontier.min();
        if (grow(group, built_in_group, used, seed, current, banned | VertexSet::single(u)))
            return true;
        return grow(group, built_in_group, used, seed, current | VertexSet::single(u), banned);
    }

    const Graph& g_;
    std::vector<int> group_sizes_;
    StepCounter& steps_;
    int total_ = 0;
    std::vector<VertexSet> sets_;
    std::vector<VertexSet> set_nbrs_;
    std::vector<int> group_of_;
};

}  // namespace detail

/// Exact K_k minor test with certificate; absent means no model exists.
inline std::optional<MinorModel> has_clique_minor(const Graph& g, int k,
                                                  StepBudget budget = {}) {
    if (k < 1) throw ArgumentError("has_clique_minor: k must be at least 1");
    StepCounter steps(budget, "clique minor search");
    detail::MinorSearch search(g, {k}, steps);
    auto sets = search.run();
    if (!sets) return std::nullopt;
    return MinorModel{MinorTarget::clique(k), std::move(*sets)};
}

/// Exact K_s u K_t minor test. The K_t side is searched first (larger, more
/// constrained), then the K_s side in what remains.
inline std::optional<MinorModel> has_disjoint_clique_minors(const Graph& g, int s, int t,
                                                            StepBudget budget = {}) {
    if (s < 1 || t < 1)
        throw ArgumentError("has_disjoint_clique_minors: s and t must be at least 1");
    StepCounter steps(budget, "disjoint clique minor search");
    detail::MinorSearch search(g, {t, s}, steps);
    auto sets = search.run();
    if (!sets) return std::nullopt;
    // Searched t side then s side; the model stores the K_s side first.
    std::vector<VertexSet> ordered(sets->begin() + t, sets->end());
    ordered.insert(ordered.end(), sets->begin(), sets->begin() + t);
    return MinorModel{MinorTarget::disjoint_cliques(s, t), std::move(ordered)};
}

/// Edge-count condition that forces a K_p minor for p up to 7: n >= p and
/// e >= (p-2)n - C(p-1,2) + 1. One-sided: false concludes nothing.
inline bool mader_sufficient(const Graph& g, int p) {
    if (p < 1 || p > 7)
        throw ArgumentError("mader_sufficient: p must be between 1 and 7");
    const long long n = g.vertex_count();
    if (n < p) return false;
    const long long threshold =
        (p - 2) * n - static_cast<long long>(p - 1) * (p - 2) / 2 + 1;
    return static_cast<long long>(g.edge_count()) >= threshold;
}

}  // namespace ehf
