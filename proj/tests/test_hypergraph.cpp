#include <catch2/catch_amalgamated.hpp>

#include "hypergames/hypergraph.hpp"
#include "helpers.hpp"

using namespace hypergames;

namespace {
Hypergraph example_board() {
    return make_board({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"},
                      {{"x1", "x2"},
                       {"x1", "x3", "x4"},
                       {"x2", "x4", "x5"},
                       {"x1", "x3", "x6", "x7"},
                       {"x2", "x5", "x7", "x8"}});
}
}  // namespace

TEST_CASE("board construction validates input") {
    CHECK_THROWS(make_board({"a"}, {{"a", "b"}}));               // member outside V
    CHECK_THROWS(make_board({"a", "b"}, {{}}));                  // empty edge
    CHECK_THROWS(make_board({"a b"}, {}));                       // whitespace id
    Hypergraph h = make_board({"b", "a"}, {{"b", "a"}, {"a", "b"}});
    CHECK(h.vertices == std::vector<Vertex>{"a", "b"});
    CHECK(h.edges.size() == 1);  // deduplicated
    CHECK(h.rank() == 2);
    CHECK(h.is_uniform(2));
}

TEST_CASE("mb_update applies the update rule") {
    Hypergraph h = example_board();
    SECTION("worked example") {
        Hypergraph u = mb_update(h, {"x1", "x7"}, {"x2"});
        CHECK(u.edges == canonical_family({{"x3", "x4"}, {"x3", "x6"}}));
        CHECK(u.vertices == std::vector<Vertex>{"x3", "x4", "x5", "x6", "x8"});
    }
    SECTION("identity") {
        CHECK(mb_update(h, {}, {}) == h);
    }
    SECTION("filled edge reduces to the empty edge") {
        Hypergraph u = mb_update(make_board({"a", "b"}, {{"a", "b"}}), {"a", "b"}, {});
        REQUIRE(u.edges.size() == 1);
        CHECK(u.edges[0].empty());
    }
    SECTION("precondition violations throw") {
        CHECK_THROWS(mb_update(h, {"x1"}, {"x1"}));
        CHECK_THROWS(mb_update(h, {"zz"}, {}));
    }
}

TEST_CASE("mm_update produces red and blue families") {
    Hypergraph h = example_board();
    SECTION("worked example") {
        MMFamilies f = mm_update(h, {"x1", "x7"}, {"x2"});
        CHECK(f.red == canonical_family({{"x3", "x4"}, {"x3", "x6"}}));
        CHECK(f.blue == canonical_family({{"x4", "x5"}}));
    }
    SECTION("no picks: both families equal the edge set") {
        MMFamilies f = mm_update(h, {}, {});
        CHECK(f.red == h.edges);
        CHECK(f.blue == h.edges);
    }
    SECTION("mutually killed edge") {
        MMFamilies f = mm_update(make_board({"a", "b"}, {{"a", "b"}}), {"a"}, {"b"});
        CHECK(f.red.empty());
        CHECK(f.blue.empty());
    }
}

TEST_CASE("mm_update red/blue symmetry property") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 100; ++it) {
        Hypergraph h = hgtest::random_board(rng, 10, 8);
        VertexSet F, S;
        for (const auto& v : h.vertices) {
            auto r = rng() % 4;
            if (r == 0) F.insert(v);
            else if (r == 1) S.insert(v);
        }
        MMFamilies f = mm_update(h, F, S);
        CHECK(f.red == mb_update(h, F, S).edges);
        CHECK(f.blue == mb_update(h, S, F).edges);
    }
}

TEST_CASE("mb_update idempotence property") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 100; ++it) {
        Hypergraph h = hgtest::random_board(rng, 10, 8);
        VertexSet M, B;
        for (const auto& v : h.vertices) {
            auto r = rng() % 4;
            if (r == 0) M.insert(v);
            else if (r == 1) B.insert(v);
        }
        Hypergraph u = mb_update(h, M, B);
        CHECK(mb_update(u, {}, {}) == u);
    }
}

TEST_CASE("is_pairing") {
    SECTION("vacuous coverage") {
        CHECK(is_pairing(make_board({"a"}, {}), make_pairing({})));
    }
    SECTION("uncovered edge reported") {
        Hypergraph h = make_board({"a", "b", "c", "d"}, {{"a", "b", "c"}});
        auto rep = check_pairing(h, make_pairing({{"a", "d"}}));
        CHECK_FALSE(rep.ok);
        CHECK(rep.reason.find("uncovered edge") != std::string::npos);
    }
    SECTION("overlapping pairs reported") {
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}});
        auto rep = check_pairing(h, make_pairing({{"a", "b"}, {"a", "c"}}));
        CHECK_FALSE(rep.ok);
        CHECK(rep.reason.find("overlapping") != std::string::npos);
    }
    SECTION("valid pairing") {
        Hypergraph h = make_board({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
        CHECK(is_pairing(h, make_pairing({{"a", "b"}, {"c", "d"}})));
    }
}

TEST_CASE("pairing_move") {
    Pairing pi = make_pairing({{"a", "b"}});
    SECTION("answers inside a pair") {
        CHECK(pairing_move(pi, Vertex("a"), {"b", "c"}) == "b");
    }
    SECTION("arbitrary branch: lowest unpicked") {
        CHECK(pairing_move(pi, Vertex("c"), {"b", "d"}) == "b");
        CHECK(pairing_move(make_pairing({}), std::nullopt, {"q", "z"}) == "q");
    }
    SECTION("partner already picked") {
        CHECK(pairing_move(pi, Vertex("a"), {"c", "d"}) == "c");
    }
    CHECK_THROWS(pairing_move(pi, std::nullopt, {}));
}

TEST_CASE("find_pairing") {
    SECTION("disjoint edges pair internally") {
        Hypergraph h = make_board({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
        auto res = find_pairing(h);
        REQUIRE(res.pairing.has_value());
        CHECK(is_pairing(h, *res.pairing));
        CHECK(res.complete);
    }
    SECTION("triangle admits no pairing") {
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        auto res = find_pairing(h);
        CHECK_FALSE(res.pairing.has_value());
        CHECK(res.complete);
    }
    SECTION("empty family") {
        auto res = find_pairing(make_board({"a"}, {}));
        REQUIRE(res.pairing.has_value());
        CHECK(res.pairing->pairs.empty());
        CHECK(res.complete);
    }
    SECTION("budget exhaustion reported via flag") {
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        auto res = find_pairing(h, 1);
        CHECK_FALSE(res.pairing.has_value());
        CHECK_FALSE(res.complete);
    }
}

TEST_CASE("greedy_pairs_mb") {
    SECTION("start-gadget shape") {
        Hypergraph h = make_board({"a.p", "a.q", "s.y1", "s.y2"},
                                  {{"a.p", "s.y1"}, {"a.q", "s.y2"}});
        auto g = greedy_pairs_mb(h);
        CHECK(std::find(g.begin(), g.end(), std::pair<Vertex, Vertex>{"a.p", "s.y1"}) != g.end());
        CHECK(std::find(g.begin(), g.end(), std::pair<Vertex, Vertex>{"a.q", "s.y2"}) != g.end());
    }
    SECTION("asymmetric condition") {
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        auto g = greedy_pairs_mb(h);
        CHECK(std::find(g.begin(), g.end(), std::pair<Vertex, Vertex>{"b", "a"}) != g.end());
        CHECK(std::find(g.begin(), g.end(), std::pair<Vertex, Vertex>{"a", "b"}) == g.end());
    }
    SECTION("no size-2 edge") {
        CHECK(greedy_pairs_mb(make_board({"a", "b", "c"}, {{"a", "b", "c"}})).empty());
    }
}

TEST_CASE("prune_supersets") {
    auto fam = canonical_family({{"a", "b"}, {"a", "b", "c"}, {"c", "d"}});
    auto pruned = prune_supersets(fam);
    CHECK(pruned == canonical_family({{"a", "b"}, {"c", "d"}}));
}

TEST_CASE("uniformize_mb") {
    SECTION("already uniform") {
        Hypergraph h = make_board({"a", "b"}, {{"a", "b"}});
        CHECK(uniformize_mb(h, 2) == h);
    }
    SECTION("one split") {
        Hypergraph h = uniformize_mb(make_board({"a", "b"}, {{"a", "b"}}), 3);
        CHECK(h.is_uniform(3));
        CHECK(h.edges.size() == 2);
        CHECK(h.vertices.size() == 4);
    }
    SECTION("two levels") {
        Hypergraph h = uniformize_mb(make_board({"a", "b"}, {{"a", "b"}}), 4);
        CHECK(h.is_uniform(4));
        CHECK(h.edges.size() == 4);
        CHECK(h.vertices.size() == 8);  // 2 original + 6 fresh
    }
    SECTION("k below rank throws") {
        CHECK_THROWS(uniformize_mb(make_board({"a", "b", "c"}, {{"a", "b", "c"}}), 2));
    }
    SECTION("deterministic output") {
        Hypergraph a = uniformize_mb(make_board({"a", "b", "c"}, {{"a", "b"}, {"c"}}), 4);
        Hypergraph b = uniformize_mb(make_board({"a", "b", "c"}, {{"a", "b"}, {"c"}}), 4);
        CHECK(a == b);
    }
}
