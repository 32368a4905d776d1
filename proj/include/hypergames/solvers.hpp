#ifndef HYPERGAMES_SOLVERS_HPP
#define HYPERGAMES_SOLVERS_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "budget.hpp"
#include "hypergraph.hpp"

namespace hypergames {

// 128-bit pick mask: exact search is capped at 128 vertices.
struct Mask {
    std::uint64_t lo = 0, hi = 0;

    void set(int i) { (i < 64 ? lo : hi) |= 1ull << (i & 63); }
    void clear(int i) { (i < 64 ? lo : hi) &= ~(1ull << (i & 63)); }
    bool test(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1; }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool none() const { return lo == 0 && hi == 0; }
    Mask operator|(Mask o) const { return {lo | o.lo, hi | o.hi}; }
    Mask operator&(Mask o) const { return {lo & o.lo, hi & o.hi}; }
    Mask operator~() const { return {~lo, ~hi}; }
    bool operator==(const Mask& o) const { return lo == o.lo && hi == o.hi; }
    bool subset_of(Mask o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
};

namespace detail {
struct StateKey {
    Mask a, b;
    bool operator==(const StateKey& o) const { return a == o.a && b == o.b; }
};
struct StateHash {
    std::size_t operator()(const StateKey& k) const {
        auto mix = [](std::uint64_t x) {
            x ^= x >> 33; x *= 0xff51afd7ed558ccdull;
            x ^= x >> 33; x *= 0xc4ceb9fe1a85ec53ull;
            return x ^ (x >> 33);
        };
        return mix(k.a.lo ^ mix(k.a.hi)) ^ mix(k.b.lo + 0x9e3779b97f4a7c15ull + mix(k.b.hi));
    }
};
}  // namespace detail

// Board with vertices indexed 0..n-1 and edges as masks; shared by solvers.
struct IndexedBoard {
    std::vector<Vertex> vertices;        // index -> name, sorted
    std::map<Vertex, int> index;         // name -> index
    std::vector<Mask> edges;             // same order as board.edges
    std::vector<int> edgeSizes;

    explicit IndexedBoard(const Hypergraph& board) {
        if (board.vertices.size() > 128)
            throw std::invalid_argument("exact solver limited to 128 vertices");
        vertices = board.vertices;
        for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = (int)i;
        for (const auto& e : board.edges) {
            Mask m;
            for (const auto& v : e) m.set(index.at(v));
            edges.push_back(m);
            edgeSizes.push_back((int)e.size());
        }
    }

    Mask to_mask(const VertexSet& picks) const {
        Mask m;
        for (const auto& v : picks) m.set(index.at(v));
        return m;
    }
    int n() const { return (int)vertices.size(); }
};

struct SolveOptions {
    std::uint64_t budget = 200'000'000;  // node count cap
    bool forcedSingletons = true;        // take own / block lone opposing singleton
    bool doubleThreatWin = true;         // two distinct opposing singletons decide
    bool deadVertexSkip = true;          // restrict play to vertices in live edges
    int workers = 1;                     // >1 splits root moves across threads
};

struct MBSolveReport {
    MBOutcome outcome;
    std::uint64_t nodes = 0;
    std::vector<Vertex> principalVariation;  // alternating Maker/Breaker picks
};

struct MMSolveReport {
    MMOutcome outcome;
    std::uint64_t nodes = 0;
    std::vector<Vertex> principalVariation;
};

namespace detail {

struct MBSolver {
    const IndexedBoard& ib;
    SolveOptions opt;
    std::unordered_map<StateKey, bool, StateHash> memo;
    std::uint64_t nodes = 0;

    MBSolver(const IndexedBoard& b, const SolveOptions& o) : ib(b), opt(o) {}

    // Singleton scan over live edges: distinct last-free vertices of edges
    // untouched by Breaker with exactly one unpicked vertex left.
    // Returns up to 2 of them (2 means "at least two").
    void live_singletons(Mask M, Mask B, int out[2], int& cnt) const {
        cnt = 0;
        for (std::size_t i = 0; i < ib.edges.size(); ++i) {
            Mask e = ib.edges[i];
            if (!(e & B).none()) continue;
            Mask rem = e & ~M;
            if (rem.count() != 1) continue;
            int v = rem.lo ? std::countr_zero(rem.lo) : 64 + std::countr_zero(rem.hi);
            if (cnt >= 1 && out[0] == v) continue;
            out[cnt++] = v;
            if (cnt == 2) return;
        }
    }

    Mask live_vertices(Mask M, Mask B) const {
        Mask live;
        for (Mask e : ib.edges)
            if ((e & B).none()) live = live | (e & ~M);
        return live;
    }

    bool maker_has_won(Mask M, Mask B) const {
        for (Mask e : ib.edges)
            if (e.subset_of(M)) return true;
        return false;
    }

    bool breaker_has_killed_all(Mask B) const {
        for (Mask e : ib.edges)
            if ((e & B).none()) return false;
        return true;
    }

    // True iff Maker wins from (M, B) with `makerToMove` to play; assumes no
    // edge is complete yet.
    bool maker_wins(Mask M, Mask B, bool makerToMove) {
        if (breaker_has_killed_all(B)) return false;
        if (++nodes > opt.budget) throw BudgetExceeded("maker-breaker node budget exceeded");

        int sing[2]; int nsing = 0;
        if (opt.forcedSingletons || opt.doubleThreatWin) live_singletons(M, B, sing, nsing);
        if (makerToMove && opt.forcedSingletons && nsing >= 1) return true;
        if (!makerToMove && opt.doubleThreatWin && nsing >= 2) return true;

        StateKey key{M, B};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        Mask candidates;
        if (!makerToMove && opt.forcedSingletons && nsing == 1) {
            candidates.set(sing[0]);  // forced block
        } else if (opt.deadVertexSkip) {
            candidates = live_vertices(M, B);
            if (candidates.none()) { memo[key] = false; return false; }
        } else {
            candidates = ~(M | B);
            if (ib.n() < 128) {
                Mask all;
                for (int i = 0; i < ib.n(); ++i) all.set(i);
                candidates = candidates & all;
            }
            if (candidates.none()) { memo[key] = false; return false; }
        }

        bool win = !makerToMove;  // Maker tries to make true, Breaker false
        for (int v = 0; v < ib.n(); ++v) {
            if (!candidates.test(v)) continue;
            bool child;
            if (makerToMove) {
                Mask M2 = M; M2.set(v);
                child = maker_has_won(M2, B) || maker_wins(M2, B, false);
                if (child) { win = true; break; }
            } else {
                Mask B2 = B; B2.set(v);
                child = maker_wins(M, B2, true);
                if (!child) { win = false; break; }
            }
        }
        memo[key] = win;
        return win;
    }
};

struct MMSolver {
    const IndexedBoard& ib;
    SolveOptions opt;
    // value packed with bound flag: exact / lower / upper
    enum Flag : std::uint8_t { Exact, Lower, Upper };
    struct Entry { std::int8_t value; Flag flag; };
    std::unordered_map<StateKey, Entry, StateHash> memo;
    std::uint64_t nodes = 0;

    MMSolver(const IndexedBoard& b, const SolveOptions& o) : ib(b), opt(o) {}

    void singletons_for(Mask own, Mask opp, int out[2], int& cnt) const {
        cnt = 0;
        for (Mask e : ib.edges) {
            if (!(e & opp).none()) continue;
            Mask rem = e & ~own;
            if (rem.count() != 1) continue;
            int v = rem.lo ? std::countr_zero(rem.lo) : 64 + std::countr_zero(rem.hi);
            if (cnt >= 1 && out[0] == v) continue;
            out[cnt++] = v;
            if (cnt == 2) return;
        }
    }

    Mask live_vertices(Mask F, Mask S) const {
        Mask live;
        for (Mask e : ib.edges) {
            if ((e & S).none()) live = live | (e & ~F);
            if ((e & F).none()) live = live | (e & ~S);
        }
        return live;
    }

    bool completes(Mask own) const {
        for (Mask e : ib.edges)
            if (e.subset_of(own)) return true;
        return false;
    }

    // Value from the mover's perspective: +1 mover wins, 0 draw, -1 opponent
    // wins. `own` is the mover's mask. Assumes neither side has completed.
    int value(Mask own, Mask opp, bool moverIsFP, int alpha, int beta) {
        if (++nodes > opt.budget) throw BudgetExceeded("maker-maker node budget exceeded");

        int osing[2]; int ocnt = 0;
        int psing[2]; int pcnt = 0;
        if (opt.forcedSingletons || opt.doubleThreatWin) {
            singletons_for(own, opp, osing, ocnt);
            singletons_for(opp, own, psing, pcnt);
        }
        if (opt.forcedSingletons && ocnt >= 1) return 1;       // mover completes now
        if (opt.doubleThreatWin && pcnt >= 2 && ocnt == 0) return -1;  // unstoppable

        StateKey key = moverIsFP ? StateKey{own, opp} : StateKey{opp, own};
        int sign = moverIsFP ? 1 : -1;  // memo stores FP-perspective value
        auto it = memo.find(key);
        if (it != memo.end()) {
            int v = sign * it->second.value;
            Flag f = it->second.flag;
            bool lower = (f == Exact) || (moverIsFP ? f == Lower : f == Upper);
            bool upper = (f == Exact) || (moverIsFP ? f == Upper : f == Lower);
            if (lower && upper) return v;
            if (lower) alpha = std::max(alpha, v);
            if (upper) beta = std::min(beta, v);
            if (alpha >= beta) return v;
        }

        Mask candidates;
        if (opt.forcedSingletons && pcnt == 1) {
            candidates.set(psing[0]);  // must block the lone opposing threat
        } else if (opt.deadVertexSkip) {
            candidates = live_vertices(moverIsFP ? own : opp, moverIsFP ? opp : own);
            if (candidates.none()) return 0;  // nothing completable: draw
        } else {
            candidates = ~(own | opp);
            Mask all;
            for (int i = 0; i < ib.n(); ++i) all.set(i);
            candidates = candidates & all;
            if (candidates.none()) return 0;
        }

        int best = -2;
        int a = alpha;
        for (int v = 0; v < ib.n(); ++v) {
            if (!candidates.test(v)) continue;
            Mask own2 = own; own2.set(v);
            int child;
            if (completes(own2)) child = 1;
            else child = -value(opp, own2, !moverIsFP, -beta, -std::max(a, best));
            if (child > best) best = child;
            if (best >= beta) break;
        }
        if (best == -2) return 0;  // no candidate vertex (exhausted board)

        Flag flag = Exact;
        if (best <= alpha) flag = moverIsFP ? Upper : Lower;
        else if (best >= beta) flag = moverIsFP ? Lower : Upper;
        memo[key] = Entry{(std::int8_t)(sign * best), flag};
        return best;
    }
};

}  // namespace detail

// Exact Maker-Breaker outcome from a (possibly mid-game) position.
inline MBSolveReport solve_mb(const MBPosition& pos, const SolveOptions& opt = {}) {
    IndexedBoard ib(pos.board);
    Mask M = ib.to_mask(pos.makerPicks);
    Mask B = ib.to_mask(pos.breakerPicks);
    bool makerToMove = pos.toMove == Player::Maker;

    MBSolveReport rep;
    detail::MBSolver root(ib, opt);
    if (root.maker_has_won(M, B)) {
        rep.outcome = MBOutcome::MakerWin;
        return rep;
    }

    if (opt.workers > 1 && makerToMove) {
        // Split root moves; each worker gets a private table. Deterministic
        // result (outcome is position-defined); only node counts vary.
        std::vector<int> moves;
        Mask cand = opt.deadVertexSkip ? root.live_vertices(M, B) : (~(M | B));
        for (int v = 0; v < ib.n(); ++v)
            if (cand.test(v)) moves.push_back(v);
        std::atomic<bool> found{false};
        auto work = [&](int v) -> std::pair<bool, std::uint64_t> {
            if (found.load()) return {false, 0};
            detail::MBSolver s(ib, opt);
            Mask M2 = M; M2.set(v);
            bool w = s.maker_has_won(M2, B) || s.maker_wins(M2, B, false);
            if (w) found.store(true);
            return {w, s.nodes};
        };
        std::vector<std::future<std::pair<bool, std::uint64_t>>> futs;
        for (int v : moves) futs.push_back(std::async(std::launch::async, work, v));
        bool win = false;
        for (auto& f : futs) {
            auto [w, n] = f.get();
            win = win || w;
            rep.nodes += n;
        }
        rep.outcome = win ? MBOutcome::MakerWin : MBOutcome::BreakerWin;
        return rep;
    }

    bool win = root.maker_wins(M, B, makerToMove);
    rep.outcome = win ? MBOutcome::MakerWin : MBOutcome::BreakerWin;
    rep.nodes = root.nodes;

    // Principal variation: replay optimal picks off the filled table.
    Mask m = M, b = B;
    bool turnMaker = makerToMove;
    while (true) {
        Mask cand = opt.deadVertexSkip ? root.live_vertices(m, b) : (~(m | b));
        int pick = -1;
        bool moverIsWinner = turnMaker == (rep.outcome == MBOutcome::MakerWin);
        for (int v = 0; v < ib.n(); ++v) {
            if (!cand.test(v)) continue;
            if (pick == -1) pick = v;  // fallback: lowest candidate
            if (!moverIsWinner) break;
            Mask m2 = m, b2 = b;
            if (turnMaker) m2.set(v); else b2.set(v);
            bool childMakerWins =
                turnMaker ? (root.maker_has_won(m2, b2) || root.maker_wins(m2, b2, false))
                          : root.maker_wins(m2, b2, true);
            if (childMakerWins == (rep.outcome == MBOutcome::MakerWin)) { pick = v; break; }
        }
        if (pick == -1) break;
        rep.principalVariation.push_back(ib.vertices[pick]);
        if (turnMaker) m.set(pick); else b.set(pick);
        if (root.maker_has_won(m, b) || root.breaker_has_killed_all(b)) break;
        if (rep.principalVariation.size() > (std::size_t)ib.n()) break;
        turnMaker = !turnMaker;
    }
    rep.nodes = root.nodes;
    return rep;
}

inline MBSolveReport solve_mb(const Hypergraph& board, const SolveOptions& opt = {}) {
    return solve_mb(make_mb_position(board, {}, {}), opt);
}

// Exact Maker-Maker (strong game) outcome.
inline MMSolveReport solve_mm(const MMPosition& pos, const SolveOptions& opt = {}) {
    IndexedBoard ib(pos.board);
    Mask F = ib.to_mask(pos.fpPicks);
    Mask S = ib.to_mask(pos.spPicks);
    bool fpToMove = pos.toMove == Player::Maker;

    detail::MMSolver solver(ib, opt);
    MMSolveReport rep;
    if (solver.completes(F)) { rep.outcome = MMOutcome::FPWin; return rep; }
    if (solver.completes(S)) { rep.outcome = MMOutcome::SPWin; return rep; }

    int val;
    if (opt.workers > 1) {
        Mask own = fpToMove ? F : S, opp = fpToMove ? S : F;
        Mask cand = opt.deadVertexSkip ? solver.live_vertices(F, S) : (~(F | S));
        std::vector<int> moves;
        for (int v = 0; v < ib.n(); ++v)
            if (cand.test(v)) moves.push_back(v);
        auto work = [&](int v) -> std::pair<int, std::uint64_t> {
            detail::MMSolver s(ib, opt);
            Mask own2 = own; own2.set(v);
            int child = s.completes(own2) ? 1 : -s.value(opp, own2, !fpToMove, -1, 1);
            return {child, s.nodes};
        };
        std::vector<std::future<std::pair<int, std::uint64_t>>> futs;
        for (int v : moves) futs.push_back(std::async(std::launch::async, work, v));
        int best = moves.empty() ? 0 : -2;
        for (auto& f : futs) {
            auto [c, n] = f.get();
            best = std::max(best, c);
            rep.nodes += n;
        }
        val = fpToMove ? best : -best;
    } else {
        Mask own = fpToMove ? F : S, opp = fpToMove ? S : F;
        int mv = solver.value(own, opp, fpToMove, -1, 1);
        val = fpToMove ? mv : -mv;
        rep.nodes = solver.nodes;
    }
    rep.outcome = val > 0 ? MMOutcome::FPWin : (val < 0 ? MMOutcome::SPWin : MMOutcome::Draw);

    if (opt.workers <= 1) {
        // Principal variation off the single-threaded solver.
        Mask f = F, s = S;
        bool turnFP = fpToMove;
        int target = val;
        while (rep.principalVariation.size() <= (std::size_t)ib.n()) {
            Mask own = turnFP ? f : s, opp = turnFP ? s : f;
            int want = turnFP ? target : -target;  // mover-perspective goal
            Mask cand = opt.deadVertexSkip ? solver.live_vertices(f, s) : (~(f | s));
            int pick = -1;
            for (int v = 0; v < ib.n(); ++v) {
                if (!cand.test(v)) continue;
                if (pick == -1) pick = v;
                Mask own2 = own; own2.set(v);
                int child = solver.completes(own2) ? 1
                            : -solver.value(opp, own2, !turnFP, -1, 1);
                if (child == want) { pick = v; break; }
            }
            if (pick == -1) break;
            rep.principalVariation.push_back(ib.vertices[pick]);
            if (turnFP) f.set(pick); else s.set(pick);
            if (solver.completes(turnFP ? f : s)) break;
            turnFP = !turnFP;
        }
        rep.nodes = solver.nodes;
    }
    return rep;
}

inline MMSolveReport solve_mm(const Hypergraph& board, const SolveOptions& opt = {}) {
    return solve_mm(make_mm_position(board, {}, {}), opt);
}

namespace detail {
inline bool maker_beats_pairing(const IndexedBoard& ib, const Pairing& pairing, Mask M, Mask B,
                                std::unordered_map<StateKey, bool, StateHash>& memo,
                                std::uint64_t& nodes, std::uint64_t budget) {
    StateKey key{M, B};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) throw BudgetExceeded("pairing-defense node budget exceeded");
    bool win = false;
    for (int v = 0; v < ib.n() && !win; ++v) {
        if (M.test(v) || B.test(v)) continue;
        Mask M2 = M; M2.set(v);
        bool complete = false;
        for (Mask e : ib.edges)
            if (e.subset_of(M2)) { complete = true; break; }
        if (complete) { win = true; break; }
        VertexSet unpicked;
        for (int u = 0; u < ib.n(); ++u)
            if (!M2.test(u) && !B.test(u)) unpicked.insert(ib.vertices[u]);
        if (unpicked.empty()) continue;  // board exhausted, no completion
        Vertex reply = pairing_move(pairing, ib.vertices[v], unpicked);
        Mask B2 = B; B2.set(ib.index.at(reply));
        win = maker_beats_pairing(ib, pairing, M2, B2, memo, nodes, budget);
    }
    memo[key] = win;
    return win;
}
}  // namespace detail

// Plays every Maker line against the deterministic pairing defense; a
// BreakerWin result certifies the pairing as a winning Breaker strategy on
// this board (soundness check for certificates).
inline MBOutcome solve_mb_against_pairing(const Hypergraph& board, const Pairing& pairing,
                                          std::uint64_t budget = 100'000'000) {
    IndexedBoard ib(board);
    for (const auto& e : board.edges)
        if (e.empty()) return MBOutcome::MakerWin;
    std::unordered_map<detail::StateKey, bool, detail::StateHash> memo;
    std::uint64_t nodes = 0;
    bool win = detail::maker_beats_pairing(ib, pairing, {}, {}, memo, nodes, budget);
    return win ? MBOutcome::MakerWin : MBOutcome::BreakerWin;
}

}  // namespace hypergames

#endif
