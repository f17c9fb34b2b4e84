#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ehf/chromatics.hpp"
#include "ehf/corpus.hpp"
#include "ehf/errors.hpp"
#include "ehf/graph.hpp"
#include "ehf/json_io.hpp"
#include "ehf/minors.hpp"
#include "ehf/recognition.hpp"
#include "ehf/splitting.hpp"

namespace ehf {

/// Per-operation step budgets, set from flags or a config file.
struct Budgets {
    StepBudget even_hole{};
    StepBudget coloring{};
    StepBudget minor{};
    StepBudget split{};

    static Budgets uniform(std::uint64_t limit) {
        Budgets b;
        b.even_hole.limit = b.coloring.limit = b.minor.limit = b.split.limit = limit;
        return b;
    }

    json to_json() const {
        return json{{"even_hole", even_hole.limit},
                    {"coloring", coloring.limit},
                    {"minor", minor.limit},
                    {"split", split.limit}};
    }

    static Budgets from_json(const json& j) {
        Budgets b;
        if (j.contains("even_hole")) b.even_hole.limit = j["even_hole"].get<std::uint64_t>();
        if (j.contains("coloring")) b.coloring.limit = j["coloring"].get<std::uint64_t>();
        if (j.contains("minor")) b.minor.limit = j["minor"].get<std::uint64_t>();
        if (j.contains("split")) b.split.limit = j["split"].get<std::uint64_t>();
        return b;
    }
};

/// Corpus-level predicates applied before a verifier sees an instance.
struct CorpusFilters {
    bool connected_only = false;
    bool even_hole_free_only = false;
    std::optional<int> chi_min, chi_max;
    std::optional<int> omega_min, omega_max;

    json to_json() const {
        json j{{"connected_only", connected_only},
               {"even_hole_free_only", even_hole_free_only}};
        if (chi_min) j["chi_min"] = *chi_min;
        if (chi_max) j["chi_max"] = *chi_max;
        if (omega_min) j["omega_min"] = *omega_min;
        if (omega_max) j["omega_max"] = *omega_max;
        return j;
    }

    bool admits(const Graph& g, const Budgets& budgets) const {
        if (connected_only && !g.is_connected()) return false;
        if (omega_min || omega_max) {
            const int omega = clique_number(g).omega;
            if (omega_min && omega < *omega_min) return false;
            if (omega_max && omega > *omega_max) return false;
        }
        if (chi_min || chi_max) {
            const int chi = chromatic_number(g, budgets.coloring).chi;
            if (chi_min && chi < *chi_min) return false;
            if (chi_max && chi > *chi_max) return false;
        }
        if (even_hole_free_only && !is_even_hole_free(g, budgets.even_hole)) return false;
        return true;
    }
};

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 0;
    Budgets budgets{};
};

struct InstanceOutcome {
    enum class Kind { pass, violation, skip };

    Kind kind = Kind::pass;
    bool premise = false;  // theorem hypothesis held, i.e. the pass was not vacuous
    bool trivial = false;  // conclusion held for free (reported so readers see vacuity)
    std::string detail;

    static InstanceOutcome vacuous() { return {}; }
    static InstanceOutcome pass_checked(bool trivially = false) {
        return {Kind::pass, true, trivially, {}};
    }
    static InstanceOutcome violate(std::string detail) {
        return {Kind::violation, true, false, std::move(detail)};
    }
};

struct InstanceRecord {
    std::size_t instance = 0;
    std::string graph6;
    std::string detail;
};

struct TheoremReport {
    std::string theorem;
    json params = json::object();
    std::string corpus_source;
    json filters = json::object();
    std::uint64_t seed = 0;
    json budgets = json::object();
    std::size_t corpus_size = 0;
    std::size_t filtered_out = 0;
    std::size_t instances = 0;
    std::size_t passes = 0;
    std::size_t premise_holds = 0;
    std::size_t trivially_satisfied = 0;
    std::vector<InstanceRecord> violations;
    std::vector<InstanceRecord> skips;
    // Timing and execution detail; lives under the "timestamp" key so report
    // comparisons can drop exactly one field.
    std::string started_at;
    double wall_ms = 0;
    int jobs = 1;

    bool ok() const { return violations.empty() && skips.empty(); }

    int exit_code() const {
        if (!violations.empty()) return 1;
        if (!skips.empty()) return 2;
        return 0;
    }

    json to_json() const {
        json v = json::array();
        for (const auto& r : violations)
            v.push_back(json{{"instance", r.instance}, {"graph6", r.graph6}, {"detail", r.detail}});
        json s = json::array();
        for (const auto& r : skips)
            s.push_back(json{{"instance", r.instance}, {"graph6", r.graph6}, {"reason", r.detail}});
        return json{
            {"schema", 1},
            {"theorem", theorem},
            {"params", params},
            {"corpus", json{{"source", corpus_source}, {"size", corpus_size}, {"filters", filters}}},
            {"seed", seed},
            {"budgets", budgets},
            {"counts", json{{"corpus", corpus_size},
                            {"filtered_out", filtered_out},
                            {"instances", instances},
                            {"passes", passes},
                            {"violations", violations.size()},
                            {"skips", skips.size()},
                            {"premise_holds", premise_holds},
                            {"trivially_satisfied", trivially_satisfied}}},
            {"violations", v},
            {"skips", s},
            {"timestamp", json{{"started_at", started_at}, {"wall_ms", wall_ms}, {"jobs", jobs}}}};
    }

    static std::string csv_header() {
        return "theorem,corpus,size,filtered_out,instances,passes,violations,skips,"
               "premise_holds,trivially_satisfied,exit";
    }

    std::string csv_row() const {
        return theorem + "," + corpus_source + "," + std::to_string(corpus_size) + "," +
               std::to_string(filtered_out) + "," + std::to_string(instances) + "," +
               std::to_string(passes) + "," + std::to_string(violations.size()) + "," +
               std::to_string(skips.size()) + "," + std::to_string(premise_holds) + "," +
               std::to_string(trivially_satisfied) + "," + std::to_string(exit_code());
    }
};

namespace detail {

inline std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct WorkerTally {
    std::size_t filtered_out = 0;
    std::size_t passes = 0;
    std::size_t premise_holds = 0;
    std::size_t trivially_satisfied = 0;
    std::vector<InstanceRecord> violations;
    std::vector<InstanceRecord> skips;
};

/// Fans the corpus out over jobs workers in index blocks; results are merged
/// and canonically sorted by instance index, so the report is identical for
/// every job count.
template <class Check>
TheoremReport run_sweep(std::string theorem, json params, const Corpus& corpus,
                        const CorpusFilters& filters, const VerifyOptions& options,
                        Check&& check) {
    TheoremReport rep;
    rep.theorem = std::move(theorem);
    rep.params = std::move(params);
    rep.corpus_source = corpus.source_description();
    rep.filters = filters.to_json();
    rep.seed = options.seed;
    rep.budgets = options.budgets.to_json();
    rep.corpus_size = corpus.size();
    rep.jobs = options.jobs;
    rep.started_at = utc_timestamp();

    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t total = corpus.size();
    const int jobs = std::max(1, options.jobs);
    constexpr std::size_t block = 1024;
    std::atomic<std::size_t> cursor{0};
    std::vector<WorkerTally> tallies(static_cast<std::size_t>(jobs));

    auto worker = [&](WorkerTally& tally) {
        for (;;) {
            const std::size_t lo = cursor.fetch_add(block);
            if (lo >= total) return;
            const std::size_t hi = std::min(total, lo + block);
            for (std::size_t i = lo; i < hi; ++i) {
                const Graph g = corpus.graph_at(i);
                InstanceOutcome out;
                try {
                    if (!filters.admits(g, options.budgets)) {
                        ++tally.filtered_out;
                        continue;
                    }
                    out = check(g);
                } catch (const ResourceError& e) {
                    out.kind = InstanceOutcome::Kind::skip;
                    out.detail = e.what();
                }
                switch (out.kind) {
                    case InstanceOutcome::Kind::pass:
                        ++tally.passes;
                        if (out.premise) ++tally.premise_holds;
                        if (out.trivial) ++tally.trivially_satisfied;
                        break;
                    case InstanceOutcome::Kind::violation:
                        ++tally.premise_holds;
                        tally.violations.push_back({i, corpus.graph6_at(i), out.detail});
                        break;
                    case InstanceOutcome::Kind::skip:
                        tally.skips.push_back({i, corpus.graph6_at(i), out.detail});
                        break;
                }
            }
        }
    };

    if (jobs == 1) {
        worker(tallies[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&, j] { worker(tallies[static_cast<std::size_t>(j)]); });
        for (auto& th : threads) th.join();
    }

    for (auto& tally : tallies) {
        rep.filtered_out += tally.filtered_out;
        rep.passes += tally.passes;
        rep.premise_holds += tally.premise_holds;
        rep.trivially_satisfied += tally.trivially_satisfied;
        rep.violations.insert(rep.violations.end(), tally.violations.begin(),
                              tally.violations.end());
        rep.skips.insert(rep.skips.end(), tally.skips.begin(), tally.skips.end());
    }
    auto by_instance = [](const InstanceRecord& a, const InstanceRecord& b) {
        return a.instance < b.instance;
    };
    std::sort(rep.violations.begin(), rep.violations.end(), by_instance);
    std::sort(rep.skips.begin(), rep.skips.end(), by_instance);
    rep.instances = rep.corpus_size - rep.filtered_out;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

inline bool has_bisimplicial_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (detail::bisimplicial_in(g, v, g.vertices())) return true;
    return false;
}

/// chi(G) == value, decided with two early-exit colorability tests.
inline bool chi_equals(const Graph& g, int value, StepBudget budget) {
    StepCounter steps(budget, "chi decision");
    return chromatic_at_least(g, g.vertices(), value, steps) &&
           !chromatic_at_least(g, g.vertices(), value + 1, steps);
}

}  // namespace detail

/// Every non-empty even-hole-free graph has a bisimplicial vertex, satisfies
/// chi <= 2*omega-1 exactly, and the elimination coloring stays within the
/// same bound.
inline TheoremReport verify_T13(const Corpus& corpus, const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    return detail::run_sweep(
        "T13", json::object(), corpus, filters, options, [&](const Graph& g) {
            if (g.vertex_count() == 0) return InstanceOutcome::vacuous();
            if (!is_even_hole_free(g, options.budgets.even_hole))
                return InstanceOutcome::vacuous();
            if (!detail::has_bisimplicial_vertex(g))
                return InstanceOutcome::violate("no bisimplicial vertex");
            const int omega = clique_number(g).omega;
            const int chi = chromatic_number(g, options.budgets.coloring).chi;
            if (chi > 2 * omega - 1)
                return InstanceOutcome::violate("chi=" + std::to_string(chi) + " exceeds 2w-1=" +
                                                std::to_string(2 * omega - 1));
            const auto order = bisimplicial_elimination_order(g);
            if (!order) return InstanceOutcome::violate("no bisimplicial elimination order");
            const Coloring col = color_by_elimination(g, *order);
            if (!validate_coloring(g, col, g.vertices()))
                return InstanceOutcome::violate("elimination coloring is not proper");
            if (col.count() > 2 * omega - 1)
                return InstanceOutcome::violate("elimination coloring used " +
                                                std::to_string(col.count()) + " > 2w-1 classes");
            return InstanceOutcome::pass_checked();
        });
}

/// Every even-hole-free graph with no K_k minor is (2k-5)-colorable. k >= 4;
/// instances with n <= 2k-5 satisfy the bound for free and are counted as
/// trivially satisfied.
inline TheoremReport verify_T21(const Corpus& corpus, int k, const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    if (k < 4) throw ArgumentError("verify_T21: k must be at least 4");
    return detail::run_sweep(
        "T21", json{{"k", k}}, corpus, filters, options, [&, k](const Graph& g) {
            if (!is_even_hole_free(g, options.budgets.even_hole))
                return InstanceOutcome::vacuous();
            if (has_clique_minor(g, k, options.budgets.minor)) return InstanceOutcome::vacuous();
            if (g.vertex_count() <= 2 * k - 5) return InstanceOutcome::pass_checked(true);
            const int chi = chromatic_number(g, options.budgets.coloring).chi;
            if (chi > 2 * k - 5)
                return InstanceOutcome::violate("chi=" + std::to_string(chi) + " exceeds 2k-5=" +
                                                std::to_string(2 * k - 5));
            return InstanceOutcome::pass_checked();
        });
}

/// Erdos-Lovasz-Tihany instances for even-hole-free graphs: omega < chi =
/// s+t-1 with t >= s >= 2 and s > chi/3 forces an (s,t)-split.
inline TheoremReport verify_T23(const Corpus& corpus, int s, int t,
                                const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    if (s < 2 || t < s) throw ArgumentError("verify_T23: need t >= s >= 2");
    const int chi_target = s + t - 1;
    const bool s_large_enough = 3 * s > chi_target;
    return detail::run_sweep(
        "T23", json{{"s", s}, {"t", t}}, corpus, filters, options, [&](const Graph& g) {
            if (!s_large_enough) return InstanceOutcome::vacuous();
            if (clique_number(g).omega >= chi_target) return InstanceOutcome::vacuous();
            if (!detail::chi_equals(g, chi_target, options.budgets.coloring))
                return InstanceOutcome::vacuous();
            if (!is_even_hole_free(g, options.budgets.even_hole))
                return InstanceOutcome::vacuous();
            const auto split = find_st_split(g, s, t, options.budgets.split);
            if (!split) return InstanceOutcome::violate("no (s,t)-split found");
            if (!validate_split_certificate(g, *split, options.budgets.split))
                return InstanceOutcome::violate("split certificate failed revalidation");
            return InstanceOutcome::pass_checked();
        });
}

/// Minor-version analogues: omega < chi = s+t-1 forces a K_s u K_t minor.
inline TheoremReport verify_T24(const Corpus& corpus, int s, int t,
                                const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    if (s < 2 || t < s) throw ArgumentError("verify_T24: need t >= s >= 2");
    const int chi_target = s + t - 1;
    return detail::run_sweep(
        "T24", json{{"s", s}, {"t", t}}, corpus, filters, options, [&](const Graph& g) {
            if (clique_number(g).omega >= chi_target) return InstanceOutcome::vacuous();
            if (!detail::chi_equals(g, chi_target, options.budgets.coloring))
                return InstanceOutcome::vacuous();
            const auto model = has_disjoint_clique_minors(g, s, t, options.budgets.minor);
            if (!model) return InstanceOutcome::violate("no disjoint clique minors found");
            if (!validate_minor_model(g, *model))
                return InstanceOutcome::violate("minor model failed revalidation");
            return InstanceOutcome::pass_checked();
        });
}

/// (s,t)-graphs with omega >= t have omega >= s+t-1.
inline TheoremReport verify_T15(const Corpus& corpus, int s, int t,
                                const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    if (s < 2 || t < s) throw ArgumentError("verify_T15: need t >= s >= 2");
    return detail::run_sweep(
        "T15", json{{"s", s}, {"t", t}}, corpus, filters, options, [&](const Graph& g) {
            if (!is_st_graph(g, s, t, options.budgets.split)) return InstanceOutcome::vacuous();
            if (clique_number(g).omega < t) return InstanceOutcome::vacuous();
            if (!clique_forces_st(g, s, t, options.budgets.split))
                return InstanceOutcome::violate("(s,t)-graph with t <= omega < s+t-1");
            return InstanceOutcome::pass_checked();
        });
}

/// Minimum degree s+t+1 forces disjoint subgraphs of minimum degree s and t.
inline TheoremReport verify_T16(const Corpus& corpus, int s, int t,
                                const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    if (s < 1 || t < 1) throw ArgumentError("verify_T16: need s, t >= 1");
    return detail::run_sweep(
        "T16", json{{"s", s}, {"t", t}}, corpus, filters, options, [&](const Graph& g) {
            if (g.vertex_count() == 0 || g.min_degree() < s + t + 1)
                return InstanceOutcome::vacuous();
            const auto split = min_degree_split(g, s, t, options.budgets.split);
            if (!split) return InstanceOutcome::violate("no minimum-degree split found");
            for (int v : split->first)
                if ((g.nbr(v) & split->first).size() < s)
                    return InstanceOutcome::violate("first side fails its degree bound");
            for (int v : split->second)
                if ((g.nbr(v) & split->second).size() < t)
                    return InstanceOutcome::violate("second side fails its degree bound");
            return InstanceOutcome::pass_checked();
        });
}

/// Mader's edge bound forces a K_p minor (p <= 7).
inline TheoremReport verify_T17(const Corpus& corpus, int p, const CorpusFilters& filters = {},
                                const VerifyOptions& options = {}) {
    if (p < 1 || p > 7) throw ArgumentError("verify_T17: p must be between 1 and 7");
    return detail::run_sweep(
        "T17", json{{"p", p}}, corpus, filters, options, [&, p](const Graph& g) {
            if (!mader_sufficient(g, p)) return InstanceOutcome::vacuous();
            const auto model = has_clique_minor(g, p, options.budgets.minor);
            if (!model)
                return InstanceOutcome::violate("edge bound met but no K_p minor found");
            if (!validate_minor_model(g, *model))
                return InstanceOutcome::violate("minor model failed revalidation");
            return InstanceOutcome::pass_checked();
        });
}

/// Randomized soundness sweep for the constructive split: seeded attempts
/// generate (graph, vertex, optimal neighborhood coloring, r) inputs, and
/// every precondition-satisfying instance must produce a verified split.
/// Attempt i draws from rng_for_item(seed, i), so results are job-count
/// independent and replayable.
struct LemmaSweepParams {
    std::size_t attempts = 200'000;
    int min_n = 4;
    int max_n = 10;
};

inline TheoremReport verify_L22(const LemmaSweepParams& params,
                                const VerifyOptions& options = {}) {
    TheoremReport rep;
    rep.theorem = "L22";
    rep.params = json{{"attempts", params.attempts},
                      {"min_n", params.min_n},
                      {"max_n", params.max_n}};
    rep.corpus_source = "lemma-sample:seed=" + std::to_string(options.seed);
    rep.seed = options.seed;
    rep.budgets = options.budgets.to_json();
    rep.corpus_size = params.attempts;
    rep.jobs = options.jobs;
    rep.started_at = detail::utc_timestamp();
    const auto t0 = std::chrono::steady_clock::now();

    struct Tally {
        std::size_t attempts_without_instance = 0;
        std::size_t instances = 0;
        std::size_t passes = 0;
        std::vector<InstanceRecord> violations;
        std::vector<InstanceRecord> skips;
    };

    const int jobs = std::max(1, options.jobs);
    std::vector<Tally> tallies(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t block = 256;

    auto worker = [&](Tally& tally) {
        for (;;) {
            const std::size_t lo = cursor.fetch_add(block);
            if (lo >= params.attempts) return;
            const std::size_t hi = std::min(params.attempts, lo + block);
            for (std::size_t i = lo; i < hi; ++i) {
                Rng rng = rng_for_item(options.seed, i);
                const int span = params.max_n - params.min_n + 1;
                const int n = params.min_n +
                              static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
                const std::uint64_t density = 35 + rng.below(56);
                const Graph g = random_labeled_graph_density(rng, n, density);
                const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

                bool any_instance = false;
                try {
                    const VertexSet nb = g.nbr(x);
                    if (nb.size() < 2) {
                        ++tally.attempts_without_instance;
                        continue;
                    }
                    const ChromaticResult nb_col =
                        chromatic_number_in(g, nb, options.budgets.coloring);
                    const int p = nb_col.chi;
                    if (p < 2) {
                        ++tally.attempts_without_instance;
                        continue;
                    }
                    const int chi = chromatic_number(g, options.budgets.coloring).chi;
                    for (int r = 2; r <= p; ++r) {
                        VertexSet tail;
                        for (int c = r - 1; c < p; ++c)
                            tail |= nb_col.witness.classes[static_cast<std::size_t>(c)];
                        if (tail.size() > chi - r - 1) continue;
                        any_instance = true;
                        ++tally.instances;
                        const std::string tag =
                            "attempt=" + std::to_string(i) + ",r=" + std::to_string(r);
                        try {
                            LemmaSplitInput input{x, nb_col.witness, r};
                            const auto cert = lemma_split(g, input, options.budgets.split);
                            if (!cert) {
                                tally.violations.push_back(
                                    {i, encode_graph6(g),
                                     tag + ": precondition held but split absent"});
                                continue;
                            }
                            if (p > chi - 2) {
                                tally.violations.push_back(
                                    {i, encode_graph6(g), tag + ": p <= chi-2 failed"});
                                continue;
                            }
                            if (cert->s_target != r || cert->t_target != chi + 1 - r ||
                                !validate_split_certificate(g, *cert, options.budgets.split)) {
                                tally.violations.push_back(
                                    {i, encode_graph6(g), tag + ": certificate invalid"});
                                continue;
                            }
                            ++tally.passes;
                        } catch (const std::logic_error& e) {
                            tally.violations.push_back(
                                {i, encode_graph6(g), tag + ": " + e.what()});
                        }
                    }
                } catch (const ResourceError& e) {
                    tally.skips.push_back({i, encode_graph6(g), e.what()});
                    continue;
                }
                if (!any_instance) ++tally.attempts_without_instance;
            }
        }
    };

    if (jobs == 1) {
        worker(tallies[0]);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&, j] { worker(tallies[static_cast<std::size_t>(j)]); });
        for (auto& th : threads) th.join();
    }

    for (auto& tally : tallies) {
        rep.filtered_out += tally.attempts_without_instance;
        rep.instances += tally.instances;
        rep.passes += tally.passes;
        rep.violations.insert(rep.violations.end(), tally.violations.begin(),
                              tally.violations.end());
        rep.skips.insert(rep.skips.end(), tally.skips.begin(), tally.skips.end());
    }
    rep.premise_holds = rep.instances;
    auto by_instance = [](const InstanceRecord& a, const InstanceRecord& b) {
        return a.instance < b.instance ||
               (a.instance == b.instance && a.detail < b.detail);
    };
    std::sort(rep.violations.begin(), rep.violations.end(), by_instance);
    std::sort(rep.skips.begin(), rep.skips.end(), by_instance);
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

/// Per-graph record: all invariants the library computes, with per-field
/// resource skips instead of a failed record.
inline json analyze_graph(const Graph& g, const Budgets& budgets = {}) {
    json rec;
    json skipped = json::array();
    rec["graph6"] = encode_graph6(g);
    rec["n"] = g.vertex_count();
    rec["e"] = g.edge_count();
    const auto degrees = g.degree_stats();
    rec["min_degree"] = degrees.min;
    rec["max_degree"] = degrees.max;
    rec["alpha"] = independence_number(g).alpha;
    rec["omega"] = clique_number(g).omega;
    try {
        rec["chi"] = chromatic_number(g, budgets.coloring).chi;
    } catch (const ResourceError& e) {
        rec["chi"] = nullptr;
        skipped.push_back(json{{"field", "chi"}, {"reason", e.what()}});
    }
    try {
        const auto hole = find_even_hole(g, budgets.even_hole);
        rec["even_hole_free"] = !hole.has_value();
        rec["even_hole"] = hole ? to_json(*hole) : json(nullptr);
    } catch (const ResourceError& e) {
        rec["even_hole_free"] = nullptr;
        rec["even_hole"] = nullptr;
        skipped.push_back(json{{"field", "even_hole_free"}, {"reason", e.what()}});
    }
    rec["quasi_line"] = is_quasi_line(g);
    json bisimplicial = json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_bisimplicial(g, v)) bisimplicial.push_back(v);
    rec["bisimplicial_vertices"] = bisimplicial;
    const auto order = bisimplicial_elimination_order(g);
    rec["elimination_order"] = order ? to_json(*order) : json(nullptr);
    rec["skipped_fields"] = skipped;
    return rec;
}

inline std::string analyze_csv_header() {
    return "graph6,n,e,min_degree,max_degree,alpha,omega,chi,even_hole_free,quasi_line,"
           "bisimplicial_count,has_elimination_order";
}

inline std::string analyze_csv_row(const json& rec) {
    auto cell = [&](const char* key) -> std::string {
        if (rec[key].is_null()) return "";
        if (rec[key].is_boolean()) return rec[key].get<bool>() ? "true" : "false";
        return rec[key].dump();
    };
    return rec["graph6"].get<std::string>() + "," + cell("n") + "," + cell("e") + "," +
           cell("min_degree") + "," + cell("max_degree") + "," + cell("alpha") + "," +
           cell("omega") + "," + cell("chi") + "," + cell("even_hole_free") + "," +
           cell("quasi_line") + "," +
           std::to_string(rec["bisimplicial_vertices"].size()) + "," +
           (rec["elimination_order"].is_null() ? "false" : "true");
}

}  // namespace ehf
