#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/graph.hpp"
#include "ehf/graph6.hpp"

namespace ehf {

/// splitmix64; pinned here so reports replay identically across standard
/// library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection sampling keeps the distribution exactly uniform.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// True with probability percent/100.
    bool percent_chance(std::uint64_t percent) { return below(100) < percent; }

private:
    std::uint64_t state_;
};

/// Derives an independent stream for work item i; used so sampled corpora and
/// sampled sweeps are random-access and job-count independent.
inline Rng rng_for_item(std::uint64_t seed, std::uint64_t item) {
    Rng mix(seed ^ (0xa0761d6478bd642fULL + item * 0xe7037ed1a0b428dbULL));
    mix.next();
    return mix;
}

/// Labeled graph on n vertices with every edge present independently with
/// probability 1/2 (uniform over all labeled graphs on n vertices).
inline Graph random_labeled_graph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng.next() & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph random_labeled_graph_density(Rng& rng, int n, std::uint64_t edge_percent) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng.percent_chance(edge_percent)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Random-access corpus of small graphs. Sources: built-in exhaustive labeled
/// enumeration (n <= 7, lexicographic edge-mask order), a graph6 file, a
/// seeded random sample, or an explicit list.
class Corpus {
public:
    static constexpr int builtin_max_n = 7;

    /// Every labeled graph on 1..max_n vertices exactly once: for each n all
    /// 2^C(n,2) edge masks in increasing order.
    static Corpus builtin(int max_n) {
        if (max_n < 1 || max_n > builtin_max_n)
            throw ArgumentError("builtin enumeration supports 1 <= max_n <= " +
                                std::to_string(builtin_max_n) +
                                "; use a graph6 corpus file beyond that");
        Corpus c;
        c.kind_ = Kind::builtin;
        c.max_n_ = max_n;
        c.offsets_.assign(1, 0);
        for (int n = 1; n <= max_n; ++n) {
            const int pairs = n * (n - 1) / 2;
            c.offsets_.push_back(c.offsets_.back() + (std::uint64_t{1} << pairs));
        }
        return c;
    }

    static Corpus from_file(const std::string& path, int max_n = Graph::max_vertices) {
        std::ifstream in(path);
        if (!in) throw ArgumentError("cannot open corpus file: " + path);
        Corpus c;
        c.kind_ = Kind::file;
        c.path_ = path;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            parse_graph6(line, max_n);  // validate eagerly so errors name the file
            c.lines_.push_back(line);
        }
        return c;
    }

    /// count seeded samples; item i is drawn from rng_for_item(seed, i) with
    /// n uniform in 1..max_n and edges at probability 1/2.
    static Corpus sample(std::size_t count, int max_n, std::uint64_t seed) {
        if (max_n < 1 || max_n > Graph::max_vertices)
            throw ArgumentError("sample corpus: max_n out of range");
        Corpus c;
        c.kind_ = Kind::sample;
        c.sample_count_ = count;
        c.max_n_ = max_n;
        c.seed_ = seed;
        return c;
    }

    static Corpus from_graphs(std::vector<Graph> graphs) {
        Corpus c;
        c.kind_ = Kind::list;
        for (const Graph& g : graphs) c.lines_.push_back(encode_graph6(g));
        return c;
    }

    std::size_t size() const {
        switch (kind_) {
            case Kind::builtin: return offsets_.back();
            case Kind::sample: return sample_count_;
            default: return lines_.size();
        }
    }

    Graph graph_at(std::size_t i) const {
        switch (kind_) {
            case Kind::builtin: {
                int n = 1;
                while (i >= offsets_[static_cast<std::size_t>(n)]) ++n;
                return Graph::from_edge_mask(n, i - offsets_[static_cast<std::size_t>(n) - 1]);
            }
            case Kind::sample: {
                Rng rng = rng_for_item(seed_, i);
                const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n_)));
                return random_labeled_graph(rng, n);
            }
            default: return parse_graph6(lines_[i]);
        }
    }

    std::string graph6_at(std::size_t i) const {
        if (kind_ == Kind::builtin || kind_ == Kind::sample) return encode_graph6(graph_at(i));
        return lines_[i];
    }

    std::string source_description() const {
        switch (kind_) {
            case Kind::builtin: return "builtin:max_n=" + std::to_string(max_n_);
            case Kind::sample:
                return "sample:count=" + std::to_string(sample_count_) +
                       ",max_n=" + std::to_string(max_n_) + ",seed=" + std::to_string(seed_);
            case Kind::file: return "file:" + path_;
            default: return "list:count=" + std::to_string(lines_.size());
        }
    }

private:
    enum class Kind { builtin, file, sample, list };

    Kind kind_ = Kind::list;
    int max_n_ = 0;
    std::uint64_t seed_ = 0;
    std::size_t sample_count_ = 0;
    std::string path_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::string> lines_;
};

}  // namespace ehf
