#pragma once

#include <string>

#include <json.hpp>

#include "ehf/chromatics.hpp"
#include "ehf/graph.hpp"
#include "ehf/minors.hpp"
#include "ehf/recognition.hpp"
#include "ehf/splitting.hpp"

namespace ehf {

using nlohmann::json;

inline json to_json(VertexSet s) { return json(s.to_vector()); }

inline json to_json(const HoleCertificate& c) {
    return json{{"cycle", c.cycle},
                {"length", c.length()},
                {"parity", c.even() ? "even" : "odd"}};
}

inline json to_json(const BisimplicialWitness& w) {
    return json{{"vertex", w.vertex},
                {"clique_a", to_json(w.clique_a)},
                {"clique_b", to_json(w.clique_b)}};
}

inline json to_json(const Coloring& c) {
    json classes = json::array();
    for (VertexSet cls : c.classes) classes.push_back(to_json(cls));
    return json{{"classes", classes}, {"count", c.count()}};
}

inline json to_json(const EliminationOrder& eo) { return json(eo.order); }

inline json to_json(const MinorModel& m) {
    json sets = json::array();
    for (VertexSet b : m.branch_sets) sets.push_back(to_json(b));
    json target;
    if (m.target.kind == MinorTarget::Kind::clique)
        target = json{{"kind", "clique"}, {"k", m.target.k}};
    else
        target = json{{"kind", "disjoint_cliques"}, {"s", m.target.s}, {"t", m.target.t}};
    return json{{"target", target}, {"branch_sets", sets}};
}

inline json to_json(const SplitCertificate& c) {
    return json{{"s_side", to_json(c.s_side)},
                {"t_side", to_json(c.t_side)},
                {"s_target", c.s_target},
                {"t_target", c.t_target},
                {"achieved", json::array({c.s_achieved, c.t_achieved})},
                {"provenance", c.provenance == SplitProvenance::lemma_construction
                                   ? "lemma-construction"
                                   : "exhaustive-search"}};
}

}  // namespace ehf
