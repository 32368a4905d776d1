#include <catch2/catch_amalgamated.hpp>

#include "hypergames/geography.hpp"

using namespace hypergames;

namespace {
GeoInstance g1() {
    return make_geo_instance({"s", "v1", "v2"},
                             {{"s", "v1", "a"}, {"v1", "v2", "b"}, {"v2", "v1", "c"}}, "s");
}
GeoInstance g2() {
    return make_geo_instance(
        {"s", "v1", "v2", "v3"},
        {{"s", "v1", "a"}, {"v1", "v2", "b"}, {"v2", "v3", "c"}, {"v3", "v2", "d"}}, "s");
}
GeoInstance fig3() {
    return make_geo_instance({"s", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
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
}  // namespace

TEST_CASE("instance construction") {
    CHECK_THROWS(make_geo_instance({"s"}, {{"s", "s", "l"}}, "s"));      // self-loop
    CHECK_THROWS(make_geo_instance({"s"}, {{"s", "t", "l"}}, "s"));      // endpoint missing
    CHECK_THROWS(make_geo_instance({"s", "t"}, {}, "x"));                // start missing
    CHECK_THROWS(make_geo_instance({"s", "t"},
                                   {{"s", "t", "l"}, {"s", "t", "m"}}, "s"));  // parallel arcs
    GeoInstance g = make_geo_instance({"s", "t"}, {{"s", "t", ""}}, "s");
    CHECK(g.arcs[0].label == "a0");  // auto label
}

TEST_CASE("validate_geo") {
    SECTION("valid instances") {
        CHECK(validate_geo(g1()).valid);
        CHECK(validate_geo(g2()).valid);
        CHECK(validate_geo(fig3()).valid);
    }
    SECTION("start with out-degree 0") {
        GeoInstance g = make_geo_instance({"s", "t"}, {{"t", "s", "l"}}, "s");
        auto rep = validate_geo(g);
        CHECK_FALSE(rep.valid);
        bool foundIn = false, foundOut = false;
        for (const auto& v : rep.violations) {
            if (v.find("in-degree") != std::string::npos) foundIn = true;
            if (v.find("out-degree") != std::string::npos) foundOut = true;
        }
        CHECK(foundIn);
        CHECK(foundOut);
    }
    SECTION("bad degree profile") {
        GeoInstance g = make_geo_instance(
            {"s", "a", "b", "c"},
            {{"s", "a", "1"}, {"a", "b", "2"}, {"a", "c", "3"}, {"b", "a", "4"}, {"c", "a", "5"}},
            "s");
        CHECK_FALSE(validate_geo(g).valid);  // a has (3,2)
    }
    SECTION("not bipartite") {
        GeoInstance g = make_geo_instance(
            {"s", "a", "b", "c"},
            {{"s", "a", "1"}, {"a", "b", "2"}, {"b", "c", "3"}, {"c", "a", "4"}}, "s");
        auto rep = validate_geo(g);
        bool found = false;
        for (const auto& v : rep.violations)
            if (v.find("bipartite") != std::string::npos) found = true;
        CHECK(found);
    }
    SECTION("not weakly connected") {
        GeoInstance g = make_geo_instance(
            {"s", "a", "b", "c"},
            {{"s", "a", "1"}, {"a", "s", "x"}, {"b", "c", "2"}, {"c", "b", "3"}}, "s");
        auto rep = validate_geo(g);
        bool found = false;
        for (const auto& v : rep.violations)
            if (v.find("connected") != std::string::npos) found = true;
        CHECK(found);
    }
}

TEST_CASE("two_coloring") {
    auto c = two_coloring(g1());
    CHECK(c["s"] == 0);
    CHECK(c["v1"] == 1);
    CHECK(c["v2"] == 0);
    auto f = two_coloring(fig3());
    for (const auto& n : {"v1", "v3", "v4", "v7"}) CHECK(f[n] == 1);
    for (const auto& n : {"s", "v2", "v5", "v6", "v8"}) CHECK(f[n] == 0);
}

TEST_CASE("classify_nodes") {
    SECTION("G1") {
        auto t = classify_nodes(g1());
        CHECK(t["s"] == NodeType::B01);
        CHECK(t["v1"] == NodeType::M21);
        CHECK(t["v2"] == NodeType::B11);
    }
    SECTION("G2") {
        auto t = classify_nodes(g2());
        CHECK(t["v1"] == NodeType::M11);
        CHECK(t["v2"] == NodeType::B21);
        CHECK(t["v3"] == NodeType::M11);
    }
    SECTION("Larger example") {
        auto t = classify_nodes(fig3());
        CHECK(t["s"] == NodeType::B01);
        CHECK(t["v1"] == NodeType::M11);
        CHECK(t["v2"] == NodeType::B12);
        CHECK(t["v3"] == NodeType::M12);
        CHECK(t["v4"] == NodeType::M21);
        CHECK(t["v5"] == NodeType::B11);
        CHECK(t["v6"] == NodeType::B21);
        CHECK(t["v7"] == NodeType::M21);
        CHECK(t["v8"] == NodeType::B11);
    }
}

TEST_CASE("solve_geo") {
    SECTION("G1: Alice wins") {
        CHECK(solve_geo(g1()).winner == GeoWinner::Alice);
    }
    SECTION("G2: Bob wins") {
        CHECK(solve_geo(g2()).winner == GeoWinner::Bob);
    }
    SECTION("principal line replays legally") {
        auto rep = solve_geo(g1());
        CHECK_FALSE(rep.principalLine.empty());
        CHECK(rep.principalLine.front() == "a");
    }
    SECTION("budget exceeded throws") {
        CHECK_THROWS_AS(solve_geo(fig3(), 2), BudgetExceeded);
    }
}

TEST_CASE("optimal oracle") {
    GeoInstance g = g1();
    auto oracle = make_optimal_oracle(g);
    GeoState st{"s", {"s"}, GeoWinner::Bob};
    CHECK(oracle(st) == "a");  // only move
    GeoState st2{"v1", {"s", "v1"}, GeoWinner::Alice};
    CHECK(oracle(st2) == "b");  // Alice's winning move
}

TEST_CASE("dot emission") {
    std::string dot = to_dot(fig3());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("M12") != std::string::npos);
    CHECK(dot.find("label=\"k\"") != std::string::npos);
}
