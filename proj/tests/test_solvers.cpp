#include <catch2/catch_amalgamated.hpp>

#include "hypergames/solvers.hpp"
#include "helpers.hpp"

using namespace hypergames;

TEST_CASE("solve_mb basics") {
    SECTION("no edges: Breaker wins") {
        CHECK(solve_mb(make_board({"a", "b"}, {})).outcome == MBOutcome::BreakerWin);
    }
    SECTION("singleton edge: Maker wins") {
        CHECK(solve_mb(make_board({"a", "b"}, {{"a"}})).outcome == MBOutcome::MakerWin);
    }
    SECTION("single pair edge: Breaker wins") {
        CHECK(solve_mb(make_board({"a", "b"}, {{"a", "b"}})).outcome == MBOutcome::BreakerWin);
    }
    SECTION("double threat: Maker wins") {
        // picking b threatens both edges
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        CHECK(solve_mb(h).outcome == MBOutcome::MakerWin);
    }
    SECTION("triangle of pairs: Maker wins") {
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        CHECK(solve_mb(h).outcome == MBOutcome::MakerWin);
    }
    SECTION("mid-game position") {
        Hypergraph h = make_board({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
        CHECK(solve_mb(make_mb_position(h, {"a"}, {"b"})).outcome == MBOutcome::BreakerWin);
        CHECK(solve_mb(make_mb_position(h, {"a"}, {"c"})).outcome == MBOutcome::MakerWin);
    }
    SECTION("budget exhaustion throws") {
        Hypergraph h = make_board({"a", "b", "c", "d", "e", "f", "g"},
                                  {{"a", "b", "c"}, {"c", "d", "e"}, {"e", "f", "g"}});
        SolveOptions o;
        o.budget = 1;
        o.forcedSingletons = o.doubleThreatWin = o.deadVertexSkip = false;
        CHECK_THROWS_AS(solve_mb(h, o), BudgetExceeded);
    }
}

TEST_CASE("solve_mm basics") {
    SECTION("singleton edge: FP wins") {
        CHECK(solve_mm(make_board({"a", "b"}, {{"a"}})).outcome == MMOutcome::FPWin);
    }
    SECTION("paired board: draw") {
        Hypergraph h = make_board({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
        CHECK(solve_mm(h).outcome == MMOutcome::Draw);
    }
    SECTION("double-threat board: FP wins") {
        Hypergraph h = make_board({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        CHECK(solve_mm(h).outcome == MMOutcome::FPWin);
    }
    SECTION("SPWin only in subtrees: position after an FP blunder") {
        // FP wasted a move on d; SP now owns the double threat at b.
        Hypergraph h = make_board({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}});
        MMPosition pos = make_mm_position(h, {"d"}, {"b"});
        CHECK(solve_mm(pos).outcome == MMOutcome::SPWin);
    }
}

TEST_CASE("reduction toggles preserve outcomes") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 40; ++it) {
        Hypergraph h = hgtest::random_board(rng, 9, 7);
        SolveOptions all;  // defaults: everything on
        SolveOptions none;
        none.forcedSingletons = none.doubleThreatWin = none.deadVertexSkip = false;
        auto mbAll = solve_mb(h, all).outcome;
        CHECK(mbAll == solve_mb(h, none).outcome);
        for (int bit = 0; bit < 3; ++bit) {
            SolveOptions one = none;
            if (bit == 0) one.forcedSingletons = true;
            if (bit == 1) one.doubleThreatWin = true;
            if (bit == 2) one.deadVertexSkip = true;
            CHECK(solve_mb(h, one).outcome == mbAll);
        }
        auto mmAll = solve_mm(h, all).outcome;
        CHECK(mmAll == solve_mm(h, none).outcome);
        for (int bit = 0; bit < 3; ++bit) {
            SolveOptions one = none;
            if (bit == 0) one.forcedSingletons = true;
            if (bit == 1) one.doubleThreatWin = true;
            if (bit == 2) one.deadVertexSkip = true;
            CHECK(solve_mm(h, one).outcome == mmAll);
        }
    }
}

TEST_CASE("convention bridge: BreakerWin implies MM draw") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 60; ++it) {
        Hypergraph h = hgtest::random_board(rng, 10, 8);
        if (solve_mb(h).outcome == MBOutcome::BreakerWin)
            CHECK(solve_mm(h).outcome == MMOutcome::Draw);
    }
}

TEST_CASE("strategy stealing: initial positions never SPWin") {
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 60; ++it) {
        Hypergraph h = hgtest::random_board(rng, 9, 8);
        CHECK(solve_mm(h).outcome != MMOutcome::SPWin);
    }
}

TEST_CASE("MB monotonicity: adding an edge never hurts Maker") {
    std::mt19937_64 rng(1618);
    for (int it = 0; it < 40; ++it) {
        Hypergraph h = hgtest::random_board(rng, 9, 6);
        auto base = solve_mb(h).outcome;
        // add one random edge
        Edge e;
        int sz = 1 + (int)(rng() % 3);
        for (int j = 0; j < sz; ++j) e.push_back(h.vertices[rng() % h.vertices.size()]);
        auto edges = h.edges;
        edges.push_back(make_edge(std::move(e)));
        Hypergraph h2 = make_board(h.vertices, edges);
        if (base == MBOutcome::MakerWin) CHECK(solve_mb(h2).outcome == MBOutcome::MakerWin);
    }
}

TEST_CASE("pairing certificates are sound") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 60; ++it) {
        auto [h, pi] = hgtest::random_paired_board(rng, 6, 8);
        REQUIRE(is_pairing(h, pi));
        CHECK(solve_mb(h).outcome == MBOutcome::BreakerWin);
        CHECK(solve_mb_against_pairing(h, pi) == MBOutcome::BreakerWin);
        CHECK(solve_mm(h).outcome != MMOutcome::FPWin);
    }
}

TEST_CASE("greedy pair invariance") {
    std::mt19937_64 rng(808);
    int tested = 0;
    for (int it = 0; it < 80 && tested < 40; ++it) {
        Hypergraph h = hgtest::random_board(rng, 10, 8);
        auto pairs = greedy_pairs_mb(h);
        if (pairs.empty()) continue;
        ++tested;
        auto base = solve_mb(h).outcome;
        for (const auto& [x, y] : pairs) {
            auto after = solve_mb(make_mb_position(h, {x}, {y})).outcome;
            CHECK(after == base);
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("uniformization invariance") {
    std::mt19937_64 rng(313);
    int tested = 0;
    for (int it = 0; it < 60 && tested < 30; ++it) {
        Hypergraph h = hgtest::random_board(rng, 8, 5);
        Hypergraph u = uniformize_mb(h, 4);
        if (u.vertices.size() > 16) continue;
        ++tested;
        CHECK(solve_mb(u).outcome == solve_mb(h).outcome);
    }
    CHECK(tested > 0);
}

TEST_CASE("determinism and principal variation") {
    std::mt19937_64 rng(7);
    Hypergraph h = hgtest::random_board(rng, 10, 8);
    auto a = solve_mb(h);
    auto b = solve_mb(h);
    CHECK(a.outcome == b.outcome);
    CHECK(a.nodes == b.nodes);
    CHECK(a.principalVariation == b.principalVariation);

    // PV of a Maker win ends with Maker completing an edge.
    Hypergraph win = make_board({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto rep = solve_mb(win);
    REQUIRE(rep.outcome == MBOutcome::MakerWin);
    REQUIRE_FALSE(rep.principalVariation.empty());
    VertexSet M, B;
    for (std::size_t i = 0; i < rep.principalVariation.size(); ++i)
        (i % 2 == 0 ? M : B).insert(rep.principalVariation[i]);
    bool filled = false;
    for (const auto& e : win.edges) {
        bool all = true;
        for (const auto& v : e)
            if (!M.count(v)) all = false;
        if (all) filled = true;
    }
    CHECK(filled);
}

TEST_CASE("workers produce the same outcome") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 10; ++it) {
        Hypergraph h = hgtest::random_board(rng, 9, 8);
        SolveOptions par;
        par.workers = 4;
        CHECK(solve_mb(h, par).outcome == solve_mb(h).outcome);
        CHECK(solve_mm(h, par).outcome == solve_mm(h).outcome);
    }
}
