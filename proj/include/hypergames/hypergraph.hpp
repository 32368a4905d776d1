#ifndef HYPERGAMES_HYPERGRAPH_HPP
#define HYPERGAMES_HYPERGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypergames {

using Vertex = std::string;
using Edge = std::vector<Vertex>;  // sorted ascending, no duplicates
using VertexSet = std::set<Vertex>;

inline Edge make_edge(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

// Canonical family order: by size ascending, then lexicographic.
inline bool edge_less(const Edge& a, const Edge& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline std::vector<Edge> canonical_family(std::vector<Edge> edges) {
    for (auto& e : edges) e = make_edge(std::move(e));
    std::sort(edges.begin(), edges.end(), edge_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// The board for both conventions: a vertex universe and an edge family.
// Freshly constructed boards reject empty edges; updated views (mb_update /
// mm_update results) may legitimately contain the empty edge, which means
// the filling player has already won.
struct Hypergraph {
    std::vector<Vertex> vertices;  // sorted ascending
    std::vector<Edge> edges;       // canonical family order

    bool has_vertex(const Vertex& v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& e : edges) r = std::max(r, e.size());
        return r;
    }
    bool is_uniform(std::size_t k) const {
        for (const auto& e : edges)
            if (e.size() != k) return false;
        return true;
    }
    bool operator==(const Hypergraph& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

// Builds a board without validation; used for updated views.
inline Hypergraph make_view(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Hypergraph{std::move(vertices), canonical_family(std::move(edges))};
}

// Builds and validates a fresh board: every edge nonempty and inside V.
inline Hypergraph make_board(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    Hypergraph h = make_view(std::move(vertices), std::move(edges));
    for (const auto& v : h.vertices) {
        if (v.empty() || v.find_first_of(" \t\n") != std::string::npos)
            throw std::invalid_argument("vertex id must be nonempty without whitespace: '" + v + "'");
    }
    for (const auto& e : h.edges) {
        if (e.empty()) throw std::invalid_argument("fresh board may not contain an empty edge");
        for (const auto& v : e)
            if (!h.has_vertex(v)) throw std::invalid_argument("edge member outside vertex set: " + v);
    }
    return h;
}

enum class Player { Maker, Breaker };  // doubles as FP / SP for Maker-Maker

enum class MBOutcome { MakerWin, BreakerWin };
// Ordered by FP preference; SPWin only arises in subtrees after FP errors.
enum class MMOutcome { SPWin = -1, Draw = 0, FPWin = 1 };

inline const char* to_string(MBOutcome o) {
    return o == MBOutcome::MakerWin ? "MakerWin" : "BreakerWin";
}
inline const char* to_string(MMOutcome o) {
    switch (o) {
        case MMOutcome::FPWin: return "FPWin";
        case MMOutcome::SPWin: return "SPWin";
        default: return "Draw";
    }
}

namespace detail {
inline void check_picks(const Hypergraph& board, const VertexSet& first, const VertexSet& second) {
    for (const auto& v : first) {
        if (!board.has_vertex(v)) throw std::invalid_argument("pick outside board: " + v);
        if (second.count(v)) throw std::invalid_argument("players overlap on vertex: " + v);
    }
    for (const auto& v : second)
        if (!board.has_vertex(v)) throw std::invalid_argument("pick outside board: " + v);
}
}  // namespace detail

// Maker-Breaker position. Maker moves first, so |M| - |B| in {0,1}.
struct MBPosition {
    Hypergraph board;
    VertexSet makerPicks;
    VertexSet breakerPicks;
    Player toMove = Player::Maker;
};

inline MBPosition make_mb_position(Hypergraph board, VertexSet maker, VertexSet breaker) {
    detail::check_picks(board, maker, breaker);
    if (maker.size() != breaker.size() && maker.size() != breaker.size() + 1)
        throw std::invalid_argument("pick counts violate alternation");
    Player toMove = maker.size() == breaker.size() ? Player::Maker : Player::Breaker;
    return MBPosition{std::move(board), std::move(maker), std::move(breaker), toMove};
}

// Maker-Maker position; red/blue edge families are derived, not stored.
struct MMPosition {
    Hypergraph board;
    VertexSet fpPicks;
    VertexSet spPicks;
    Player toMove = Player::Maker;
};

inline MMPosition make_mm_position(Hypergraph board, VertexSet fp, VertexSet sp) {
    detail::check_picks(board, fp, sp);
    if (fp.size() != sp.size() && fp.size() != sp.size() + 1)
        throw std::invalid_argument("pick counts violate alternation");
    Player toMove = fp.size() == sp.size() ? Player::Maker : Player::Breaker;
    return MMPosition{std::move(board), std::move(fp), std::move(sp), toMove};
}

// Removes edges that are strict supersets of another edge. Strategically
// redundant in Maker-Breaker, but pairing validity is stated against the raw
// family, so this is opt-in.
inline std::vector<Edge> prune_supersets(const std::vector<Edge>& family) {
    std::vector<Edge> out;
    for (const auto& e : family) {
        bool dominated = false;
        for (const auto& f : family) {
            if (f == e) continue;
            if (f.size() <= e.size() && std::includes(e.begin(), e.end(), f.begin(), f.end())) {
                // ties between equal sets cannot happen (family deduplicated)
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(e);
    }
    return out;
}

// Updated Maker-Breaker board: V' = V \ (M u B), E' = { e \ M : e n B = {} }.
// The empty edge may appear in the result and means Maker has won.
inline Hypergraph mb_update(const Hypergraph& board, const VertexSet& makerPicks,
                            const VertexSet& breakerPicks, bool pruneSupersets = false) {
    detail::check_picks(board, makerPicks, breakerPicks);
    std::vector<Vertex> verts;
    for (const auto& v : board.vertices)
        if (!makerPicks.count(v) && !breakerPicks.count(v)) verts.push_back(v);
    std::vector<Edge> edges;
    for (const auto& e : board.edges) {
        bool killed = false;
        Edge reduced;
        for (const auto& v : e) {
            if (breakerPicks.count(v)) { killed = true; break; }
            if (!makerPicks.count(v)) reduced.push_back(v);
        }
        if (!killed) edges.push_back(std::move(reduced));
    }
    edges = canonical_family(std::move(edges));
    if (pruneSupersets) edges = canonical_family(prune_supersets(edges));
    Hypergraph h;
    h.vertices = std::move(verts);
    h.edges = std::move(edges);
    return h;
}

struct MMFamilies {
    std::vector<Edge> red;   // FP's surviving winning sets
    std::vector<Edge> blue;  // SP's surviving winning sets
};

// Updated Maker-Maker families: red = { e \ F : e n S = {} },
// blue = { e \ S : e n F = {} }.
inline MMFamilies mm_update(const Hypergraph& board, const VertexSet& fpPicks,
                            const VertexSet& spPicks) {
    detail::check_picks(board, fpPicks, spPicks);
    return MMFamilies{mb_update(board, fpPicks, spPicks).edges,
                      mb_update(board, spPicks, fpPicks).edges};
}

// A set of pairwise disjoint vertex pairs; a polynomial-time-checkable
// certificate for a Breaker win / second-player draw.
struct Pairing {
    std::vector<Edge> pairs;  // each a sorted 2-vector; canonical order

    bool uses(const Vertex& v) const {
        for (const auto& p : pairs)
            if (p[0] == v || p[1] == v) return true;
        return false;
    }
    bool operator==(const Pairing& o) const { return pairs == o.pairs; }
};

inline Pairing make_pairing(std::vector<Edge> pairs) {
    for (auto& p : pairs) p = make_edge(std::move(p));
    std::sort(pairs.begin(), pairs.end(), edge_less);
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Pairing{std::move(pairs)};
}

struct PairingCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

// True iff pairs are pairwise disjoint 2-sets over V(board) and every edge
// contains some pair as a subset. Structural violations produce a reason
// code rather than an exception.
inline PairingCheck check_pairing(const Hypergraph& board, const Pairing& candidate) {
    VertexSet used;
    for (const auto& p : candidate.pairs) {
        if (p.size() != 2) return {false, "malformed pair"};
        for (const auto& v : p) {
            if (!board.has_vertex(v)) return {false, "pair vertex outside board: " + v};
            if (!used.insert(v).second) return {false, "overlapping pairs at " + v};
        }
    }
    for (const auto& e : board.edges) {
        bool covered = false;
        for (const auto& p : candidate.pairs) {
            if (std::includes(e.begin(), e.end(), p.begin(), p.end())) { covered = true; break; }
        }
        if (!covered) {
            std::string key;
            for (const auto& v : e) key += (key.empty() ? "" : ",") + v;
            return {false, "uncovered edge {" + key + "}"};
        }
    }
    return {true, ""};
}

inline bool is_pairing(const Hypergraph& board, const Pairing& candidate) {
    return check_pairing(board, candidate).ok;
}

// Reply of the pairing strategy: the partner of the opponent's last pick if
// that pick lies in a pair whose partner is unpicked, otherwise the
// lowest-ordered unpicked vertex (the deterministic "arbitrary" branch).
inline Vertex pairing_move(const Pairing& pairing, const std::optional<Vertex>& opponentLastPick,
                           const VertexSet& unpicked) {
    if (unpicked.empty()) throw std::invalid_argument("pairing_move on exhausted board");
    if (opponentLastPick) {
        for (const auto& p : pairing.pairs) {
            if (p[0] == *opponentLastPick && unpicked.count(p[1])) return p[1];
            if (p[1] == *opponentLastPick && unpicked.count(p[0])) return p[0];
        }
    }
    return *unpicked.begin();
}

struct PairingSearchResult {
    std::optional<Pairing> pairing;
    bool complete = false;  // none + complete proves nonexistence
    std::uint64_t nodes = 0;
};

namespace detail {
inline bool find_pairing_rec(const std::vector<Edge>& edges, std::size_t idx, VertexSet& used,
                             std::vector<Edge>& chosen, std::uint64_t budget,
                             std::uint64_t& nodes, bool& complete) {
    if (idx == edges.size()) return true;
    if (++nodes > budget) { complete = false; return false; }
    const Edge& e = edges[idx];
    // Edge already covered by a chosen pair?
    for (const auto& p : chosen) {
        if (std::includes(e.begin(), e.end(), p.begin(), p.end()))
            return find_pairing_rec(edges, idx + 1, used, chosen, budget, nodes, complete);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (used.count(e[i]) || used.count(e[j])) continue;
            used.insert(e[i]);
            used.insert(e[j]);
            chosen.push_back({e[i], e[j]});
            if (find_pairing_rec(edges, idx + 1, used, chosen, budget, nodes, complete)) return true;
            chosen.pop_back();
            used.erase(e[i]);
            used.erase(e[j]);
            if (!complete) return false;
        }
    }
    return false;
}
}  // namespace detail

// Backtracking certificate search, intended for small boards. Pairs are tried
// in lexicographic order over edges sorted by size ascending. A miss only
// proves nonexistence when the completeness flag is set.
inline PairingSearchResult find_pairing(const Hypergraph& board, std::uint64_t budget = 1'000'000) {
    std::vector<Edge> edges = board.edges;  // already size-ascending canonical
    for (const auto& e : edges)
        if (e.empty()) return {std::nullopt, true, 0};  // empty edge is uncoverable
    PairingSearchResult res;
    res.complete = true;
    VertexSet used;
    std::vector<Edge> chosen;
    if (detail::find_pairing_rec(edges, 0, used, chosen, budget, res.nodes, res.complete))
        res.pairing = make_pairing(std::move(chosen));
    return res;
}

// All ordered pairs (x,y) with {x,y} an edge and every edge containing y also
// containing x: an optimal opening round is Maker x, Breaker y.
inline std::vector<std::pair<Vertex, Vertex>> greedy_pairs_mb(const Hypergraph& board) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : board.edges) {
        if (e.size() != 2) continue;
        for (int flip = 0; flip < 2; ++flip) {
            const Vertex& x = e[flip];
            const Vertex& y = e[1 - flip];
            bool ok = true;
            for (const auto& f : board.edges) {
                if (std::binary_search(f.begin(), f.end(), y) &&
                    !std::binary_search(f.begin(), f.end(), x)) { ok = false; break; }
            }
            if (ok) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Repeatedly replaces an undersized edge e by e u {x}, e u {y} with fresh
// vertices until the board is k-uniform. Outcome-preserving for
// Maker-Breaker. Fresh names are deterministic: "<edge-key>.u<n>".
inline Hypergraph uniformize_mb(const Hypergraph& board, std::size_t k) {
    if (board.rank() > k) throw std::invalid_argument("uniformize: k below board rank");
    for (const auto& e : board.edges)
        if (e.empty()) throw std::invalid_argument("uniformize: empty edge");
    std::vector<Vertex> verts = board.vertices;
    std::vector<Edge> edges = board.edges;
    std::uint64_t fresh = 0;
    while (true) {
        auto it = std::find_if(edges.begin(), edges.end(),
                               [k](const Edge& e) { return e.size() < k; });
        if (it == edges.end()) break;
        Edge e0 = *it;
        edges.erase(it);
        std::string key;
        for (const auto& v : e0) key += (key.empty() ? "" : "+") + v;
        Vertex x = key + ".u" + std::to_string(++fresh);
        Vertex y = key + ".u" + std::to_string(++fresh);
        verts.push_back(x);
        verts.push_back(y);
        Edge ex = e0, ey = e0;
        ex.push_back(x);
        ey.push_back(y);
        edges.push_back(make_edge(std::move(ex)));
        edges.push_back(make_edge(std::move(ey)));
        edges = canonical_family(std::move(edges));
    }
    return make_board(std::move(verts), std::move(edges));
}

}  // namespace hypergames

#endif
