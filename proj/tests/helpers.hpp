#ifndef HYPERGAMES_TEST_HELPERS_HPP
#define HYPERGAMES_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "hypergames/geography.hpp"
#include "hypergames/hypergraph.hpp"

namespace hgtest {

// Shared fixtures: the two smallest interesting instances and the nine-node
// worked example.
inline hypergames::GeoInstance geo_g1() {
    return hypergames::make_geo_instance(
        {"s", "v1", "v2"}, {{"s", "v1", "a"}, {"v1", "v2", "b"}, {"v2", "v1", "c"}}, "s");
}
inline hypergames::GeoInstance geo_g2() {
    return hypergames::make_geo_instance(
        {"s", "v1", "v2", "v3"},
        {{"s", "v1", "a"}, {"v1", "v2", "b"}, {"v2", "v3", "c"}, {"v3", "v2", "d"}}, "s");
}
inline hypergames::GeoInstance geo_fig3() {
    return hypergames::make_geo_instance({"s", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
                                         {{"s", "v1", "a"},
                                          {"v1", "v2", "b"},
                                          {"v2", "v3", "c"},
                                          {"v2", "v4", "d"},
                                          {"v3", "v5", "e"},
                                          {"v3", "v6", "f"},
                                          {"v4", "v6", "g"},
                                          {"v5", "v7", "h"},
                                          {"v6", "v7", "i"},
                                          {"v7", "v8", "j"},
                                          {"v8", "v4", "k"}},
                                         "s");
}

// Deterministic random boards for property tests. mt19937_64 with a fixed
// seed is fully specified by the standard, so sequences are portable.
inline hypergames::Hypergraph random_board(std::mt19937_64& rng, int maxVerts, int maxEdges,
                                           int maxEdgeSize = 4) {
    int n = 2 + (int)(rng() % (std::uint64_t)(maxVerts - 1));
    std::vector<hypergames::Vertex> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::string(1, char('a' + i / 10)) +
                                                std::string(1, char('0' + i % 10)));
    int m = 1 + (int)(rng() % (std::uint64_t)maxEdges);
    std::vector<hypergames::Edge> edges;
    for (int i = 0; i < m; ++i) {
        int sz = 1 + (int)(rng() % (std::uint64_t)maxEdgeSize);
        hypergames::Edge e;
        for (int j = 0; j < sz; ++j) e.push_back(verts[rng() % verts.size()]);
        e = hypergames::make_edge(std::move(e));
        if (!e.empty()) edges.push_back(std::move(e));
    }
    return hypergames::make_board(std::move(verts), std::move(edges));
}

// A board built from disjoint pairs, so it always admits a pairing.
inline std::pair<hypergames::Hypergraph, hypergames::Pairing> random_paired_board(
    std::mt19937_64& rng, int maxPairs, int maxEdges) {
    int p = 2 + (int)(rng() % (std::uint64_t)(maxPairs - 1));
    std::vector<hypergames::Vertex> verts;
    std::vector<hypergames::Edge> pairs;
    for (int i = 0; i < p; ++i) {
        hypergames::Vertex a = "p" + std::to_string(i) + "a";
        hypergames::Vertex b = "p" + std::to_string(i) + "b";
        verts.push_back(a);
        verts.push_back(b);
        pairs.push_back(hypergames::make_edge({a, b}));
    }
    int m = 1 + (int)(rng() % (std::uint64_t)maxEdges);
    std::vector<hypergames::Edge> edges;
    for (int i = 0; i < m; ++i) {
        // every edge contains a full pair, plus up to two extra vertices
        hypergames::Edge e = pairs[rng() % pairs.size()];
        int extra = (int)(rng() % 3);
        for (int j = 0; j < extra; ++j) e.push_back(verts[rng() % verts.size()]);
        edges.push_back(hypergames::make_edge(std::move(e)));
    }
    return {hypergames::make_board(verts, edges), hypergames::make_pairing(pairs)};
}

}  // namespace hgtest

#endif
