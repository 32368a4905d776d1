#ifndef HYPERGAMES_JSON_IO_HPP
#define HYPERGAMES_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "geography.hpp"
#include "hypergraph.hpp"
#include "reduction.hpp"

namespace hypergames {

// ordered_json preserves insertion order, so repeated serialization of the
// same object is byte-identical.
using json = nlohmann::ordered_json;

inline std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

// ---- Hypergraph -----------------------------------------------------------

inline json to_json(const Hypergraph& h) {
    json j;
    j["vertices"] = h.vertices;
    j["edges"] = h.edges;
    return j;
}

inline Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph JSON must have 'vertices' and 'edges'");
    return make_board(j.at("vertices").get<std::vector<Vertex>>(),
                      j.at("edges").get<std::vector<Edge>>());
}

// ---- Geography ------------------------------------------------------------

inline json to_json(const GeoInstance& g) {
    json j;
    j["nodes"] = g.nodes;
    json arcs = json::array();
    for (const auto& a : g.arcs) {
        json ja;
        ja["tail"] = a.tail;
        ja["head"] = a.head;
        ja["label"] = a.label;
        arcs.push_back(std::move(ja));
    }
    j["arcs"] = std::move(arcs);
    j["start"] = g.start;
    return j;
}

inline GeoInstance geo_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("arcs") || !j.contains("start"))
        throw std::invalid_argument("geography JSON must have 'nodes', 'arcs' and 'start'");
    std::vector<Arc> arcs;
    for (const auto& ja : j.at("arcs")) {
        Arc a;
        a.tail = ja.at("tail").get<NodeId>();
        a.head = ja.at("head").get<NodeId>();
        if (ja.contains("label")) a.label = ja.at("label").get<ArcLabel>();
        arcs.push_back(std::move(a));
    }
    return make_geo_instance(j.at("nodes").get<std::vector<NodeId>>(), std::move(arcs),
                             j.at("start").get<NodeId>());
}

// ---- Reduction metadata ----------------------------------------------------

inline json reduction_meta_json(const ReductionOutput& r) {
    json j;
    j["variant"] = to_string(r.variant);
    json arcs = json::object();
    for (const auto& [label, pq] : r.arcToJunction) {
        json ja;
        ja["p"] = pq.first;
        ja["q"] = pq.second;
        if (const Arc* a = r.instance.arc_by_label(label)) {
            ja["tail"] = a->tail;
            ja["head"] = a->head;
        }
        arcs[label] = std::move(ja);
    }
    j["arcs"] = std::move(arcs);
    json nodes = json::object();
    for (const auto& [n, g] : r.gadgets) {
        json jn;
        jn["type"] = to_string(g.type);
        jn["vertices"] = g.vertices;
        nodes[n] = std::move(jn);
    }
    j["nodes"] = std::move(nodes);
    if (!r.startUniformizers.empty()) j["startUniformizers"] = r.startUniformizers;
    return j;
}

}  // namespace hypergames

#endif
