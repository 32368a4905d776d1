#ifndef HYPERGAMES_STRATEGIES_HPP
#define HYPERGAMES_STRATEGIES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "budget.hpp"
#include "geography.hpp"
#include "hypergraph.hpp"
#include "reduction.hpp"

namespace hypergames {

// ---------------------------------------------------------------------------
// Regular play: the per-gadget move schedule.
// ---------------------------------------------------------------------------

enum class StepTag {
    Greedy,        // Maker move satisfying the greedy-move lemma
    Forced,        // Breaker reply to a size-1 threat
    MakerPlain,    // Maker move justified by the punishment analysis
    MakerChoice,   // Maker picks the branch (M12: z1 vs z2)
    BreakerChoice  // Breaker picks the branch (B12: y4 vs y3)
};

struct Step {
    Player mover;
    std::string token;  // gadget role
    StepTag tag;
};

// Full sequence for a node type; entrySlot ('a'/'b') only matters for M21,
// branchSlot ('b'/'c') only for B12/M12.
inline std::vector<Step> regular_sequence_roles(NodeType t, char entrySlot = 0,
                                                char branchSlot = 0) {
    using S = Step;
    const Player M = Player::Maker, B = Player::Breaker;
    switch (t) {
        case NodeType::B01:
            return {S{M, "pa", StepTag::Greedy}, S{B, "y1", StepTag::Forced},
                    S{M, "qa", StepTag::Greedy}, S{B, "y2", StepTag::Forced}};
        case NodeType::B11:
        case NodeType::M11:
            return {S{M, "x1", StepTag::Greedy}, S{B, "y1", StepTag::Forced},
                    S{M, "pb", StepTag::Greedy}, S{B, "y2", StepTag::Forced},
                    S{M, "qb", StepTag::Greedy}, S{B, "y3", StepTag::Forced}};
        case NodeType::B21:
            return {S{M, "x1", StepTag::Greedy}, S{B, "y1", StepTag::Forced},
                    S{M, "pc", StepTag::Greedy}, S{B, "y2", StepTag::Forced},
                    S{M, "qc", StepTag::Greedy}, S{B, "y3", StepTag::Forced}};
        case NodeType::M21: {
            if (entrySlot != 'a' && entrySlot != 'b')
                throw std::invalid_argument("M21 sequence needs the entry slot");
            std::string z = entrySlot == 'a' ? "za" : "zb";
            return {S{M, "x1", StepTag::Greedy}, S{B, z, StepTag::Forced},
                    S{M, "pc", StepTag::Greedy}, S{B, "y1", StepTag::Forced},
                    S{M, "qc", StepTag::Greedy}, S{B, "y2", StepTag::Forced}};
        }
        case NodeType::B12: {
            if (branchSlot != 'b' && branchSlot != 'c')
                throw std::invalid_argument("B12 sequence needs the branch");
            std::vector<Step> s{S{M, "x1", StepTag::Greedy}, S{B, "y1", StepTag::Forced},
                                S{M, "x2", StepTag::Greedy}, S{B, "y2", StepTag::Forced},
                                S{M, "x3", StepTag::MakerPlain}};
            if (branchSlot == 'b') {
                s.push_back(S{B, "y4", StepTag::BreakerChoice});
                s.push_back(S{M, "pb", StepTag::Greedy});
                s.push_back(S{B, "y3", StepTag::Forced});
                s.push_back(S{M, "qb", StepTag::MakerPlain});
            } else {
                s.push_back(S{B, "y3", StepTag::BreakerChoice});
                s.push_back(S{M, "pc", StepTag::Greedy});
                s.push_back(S{B, "y4", StepTag::Forced});
                s.push_back(S{M, "qc", StepTag::MakerPlain});
            }
            s.push_back(S{B, "y5", StepTag::Forced});
            return s;
        }
        default: {  // M12
            if (branchSlot != 'b' && branchSlot != 'c')
                throw std::invalid_argument("M12 sequence needs the branch");
            std::vector<Step> s{S{M, "x1", StepTag::Greedy}, S{B, "y1", StepTag::Forced},
                                S{M, "x2", StepTag::Greedy}, S{B, "y2", StepTag::Forced}};
            if (branchSlot == 'b') {
                s.push_back(S{M, "z1", StepTag::MakerChoice});
                s.push_back(S{B, "z2", StepTag::Forced});
                s.push_back(S{M, "pb", StepTag::Greedy});
                s.push_back(S{B, "y3", StepTag::Forced});
                s.push_back(S{M, "qb", StepTag::Greedy});
                s.push_back(S{B, "zb", StepTag::Forced});
            } else {
                s.push_back(S{M, "z2", StepTag::MakerChoice});
                s.push_back(S{B, "z1", StepTag::Forced});
                s.push_back(S{M, "pc", StepTag::Greedy});
                s.push_back(S{B, "y3", StepTag::Forced});
                s.push_back(S{M, "qc", StepTag::Greedy});
                s.push_back(S{B, "zc", StepTag::Forced});
            }
            return s;
        }
    }
}

// Concrete-vertex sequence for an instantiated gadget.
inline std::vector<std::pair<Player, Vertex>> regular_sequence(
    const GadgetInstance& g, const std::optional<ArcLabel>& entryArc,
    const std::optional<ArcLabel>& choiceArc) {
    char entrySlot = 0;
    if (g.type == NodeType::M21) {
        if (!entryArc) throw std::invalid_argument("M21 sequence needs the entry arc");
        entrySlot = *entryArc == g.inArcs[0] ? 'a' : 'b';
    }
    char branchSlot = 0;
    if (g.type == NodeType::B12 || g.type == NodeType::M12) {
        if (!choiceArc) throw std::invalid_argument("out-degree-2 sequence needs the chosen arc");
        branchSlot = *choiceArc == g.outArcs[0] ? 'b' : 'c';
    } else if (choiceArc) {
        throw std::invalid_argument("choice arc given for a single-exit gadget");
    }
    std::vector<std::pair<Player, Vertex>> out;
    for (const auto& st : regular_sequence_roles(g.type, entrySlot, branchSlot))
        out.emplace_back(st.mover, g.role(st.token));
    return out;
}

// ---------------------------------------------------------------------------
// Regular play engine over a reduced board.
// ---------------------------------------------------------------------------

struct RegularPlayEngine {
    enum class Status { InProgress, EndedMakerWinPending, EndedBreakerPairing };

    const ReductionOutput* red = nullptr;
    NodeId active;
    char entrySlot = 0;    // M21 only
    char branch = 0;       // 0 until the B12/M12 branch is resolved
    std::size_t phase = 0;
    VertexSet makerPicks, breakerPicks;
    std::map<NodeId, int> activationCount;
    struct Visit {
        std::optional<ArcLabel> entry;
        std::optional<ArcLabel> exit;
    };
    std::map<NodeId, Visit> visits;
    Status status = Status::InProgress;
    Vertex pendingSingleton;  // z_g after a second M21 activation
    int movesPlayed = 0;

    explicit RegularPlayEngine(const ReductionOutput& r) : red(&r) {
        active = r.instance.start;
        activationCount[active] = 1;
        visits[active] = {};
    }

    const GadgetInstance& gadget() const { return red->gadget(active); }
    NodeType type() const { return red->types.at(active); }

    bool ended() const { return status != Status::InProgress; }

    // Is this the phase of an unresolved branch?
    bool at_choice() const {
        if (branch != 0) return false;
        if (type() == NodeType::M12) return phase == 4;
        if (type() == NodeType::B12) return phase == 5;
        return false;
    }

    struct Expected {
        Player mover;
        StepTag tag;
        std::vector<Vertex> options;  // 2 at a branch point, else 1
    };

    std::vector<Step> steps() const {
        char b = branch;
        if (b == 0 && (type() == NodeType::B12 || type() == NodeType::M12))
            b = 'b';  // prefix up to the choice is branch-independent
        return regular_sequence_roles(type(), entrySlot, b);
    }

    Expected expected() const {
        if (ended()) throw std::logic_error("regular play already over");
        const auto& g = gadget();
        if (at_choice()) {
            if (type() == NodeType::M12)
                return {Player::Maker, StepTag::MakerChoice, {g.role("z1"), g.role("z2")}};
            return {Player::Breaker, StepTag::BreakerChoice, {g.role("y4"), g.role("y3")}};
        }
        Step st = steps().at(phase);
        return {st.mover, st.tag, {g.role(st.token)}};
    }

    // The visited node set as seen by the mirrored Geography game.
    std::set<NodeId> visited_nodes() const {
        std::set<NodeId> out;
        for (const auto& [n, c] : activationCount)
            if (c > 0) out.insert(n);
        return out;
    }

    ArcLabel exit_arc() const {
        const auto& g = gadget();
        switch (type()) {
            case NodeType::B12:
            case NodeType::M12:
                if (branch == 0) throw std::logic_error("exit before branch resolution");
                return branch == 'b' ? g.outArcs[0] : g.outArcs[1];
            default: return g.outArcs[0];
        }
    }

    // Applies one conforming move (must match expected()).
    void advance(const Vertex& v) {
        Expected exp = expected();
        auto it = std::find(exp.options.begin(), exp.options.end(), v);
        if (it == exp.options.end())
            throw std::invalid_argument("move " + v + " does not conform to regular play");
        if (at_choice()) branch = it == exp.options.begin() ? 'b' : 'c';
        (exp.mover == Player::Maker ? makerPicks : breakerPicks).insert(v);
        ++phase;
        ++movesPlayed;
        if (phase == steps().size() &&
            !(branch == 0 && (type() == NodeType::B12 || type() == NodeType::M12)))
            transition();
    }

    void transition() {
        ArcLabel g = exit_arc();
        visits[active].exit = g;
        const Arc* arc = red->instance.arc_by_label(g);
        NodeId w = arc->head;
        int& cnt = activationCount[w];
        if (cnt == 0) {
            cnt = 1;
            visits[w] = {};
            visits[w].entry = g;
            active = w;
            branch = 0;
            phase = 0;
            entrySlot = 0;
            const GadgetInstance& gw = red->gadget(w);
            if (gw.type == NodeType::M21) entrySlot = g == gw.inArcs[0] ? 'a' : 'b';
            return;
        }
        cnt = 2;
        NodeType wt = red->types.at(w);
        if (wt == NodeType::B21) {
            status = Status::EndedBreakerPairing;
        } else if (wt == NodeType::M21) {
            status = Status::EndedMakerWinPending;
            const GadgetInstance& gw = red->gadget(w);
            pendingSingleton = gw.role(g == gw.inArcs[0] ? "za" : "zb");
        } else {
            throw std::logic_error("second activation of a non-(2,1) node: " + w);
        }
        active = w;
    }
};

// ---------------------------------------------------------------------------
// Residual gadget pairings and global assembly.
// ---------------------------------------------------------------------------

namespace detail {

// Candidate pairings for a gadget, given its visit record: the intact
// library for never-active nodes, the junction-pair survivors for a visited
// M21, nothing (trivially) for other visited nodes.
inline std::vector<Pairing> residual_candidates(const ReductionOutput& red, const NodeId& t,
                                                const RegularPlayEngine& eng) {
    auto itc = eng.activationCount.find(t);
    int count = itc == eng.activationCount.end() ? 0 : itc->second;
    const GadgetInstance& g = red.gadget(t);
    if (count == 0) {
        std::vector<Pairing> out{g.basePairing};
        for (const auto& [z, p] : g.avoidPairing) out.push_back(p);
        return out;
    }
    if (g.type == NodeType::M21 && count == 1 && eng.visits.at(t).exit) {
        // Residue: vertices {p_g, q_g, z_g} and edge {p_g, q_g, z_g}, where g
        // is the unused in-arc.
        ArcLabel entry = *eng.visits.at(t).entry;
        char slot = entry == g.inArcs[0] ? 'b' : 'a';  // unused slot
        Vertex p = (slot == 'a' ? g.inArcs[0] : g.inArcs[1]) + ".p";
        Vertex q = (slot == 'a' ? g.inArcs[0] : g.inArcs[1]) + ".q";
        Vertex z = g.role(slot == 'a' ? "za" : "zb");
        return {make_pairing({{p, q}}), make_pairing({{q, z}}), make_pairing({{p, z}})};
    }
    return {Pairing{}};
}

inline bool pair_conflicts(const Edge& p, const std::vector<Edge>& accumulated) {
    for (const auto& q : accumulated) {
        if (q == p) continue;  // identical pairs merge
        if (q[0] == p[0] || q[0] == p[1] || q[1] == p[0] || q[1] == p[1]) return true;
    }
    return false;
}

}  // namespace detail

// Builds a global pairing covering every live edge of every gadget except
// `skipNode`. For each gadget the residual candidates are tried in order;
// pairs touching picked vertices are dropped, and a candidate is accepted if
// the surviving pairs cover the gadget's live local edges without colliding
// with pairs chosen so far. Identical junction pairs shared by two gadgets
// merge. Returns nothing if some gadget cannot be covered.
inline std::optional<Pairing> assemble_global_pairing(
    const ReductionOutput& red, const RegularPlayEngine& eng,
    const std::optional<NodeId>& skipNode, const VertexSet& M, const VertexSet& B,
    std::vector<Edge> seedPairs) {
    auto unpicked = [&](const Vertex& v) { return !M.count(v) && !B.count(v); };
    std::vector<Edge> chosen;
    for (auto& p : seedPairs) chosen.push_back(make_edge(std::move(p)));

    for (const auto& n : red.instance.nodes) {
        if (skipNode && n == *skipNode) continue;
        const GadgetInstance& g = red.gadget(n);
        std::vector<Edge> live;
        for (const auto& e : g.edges) {
            bool killed = false;
            Edge rem;
            for (const auto& v : e) {
                if (B.count(v)) { killed = true; break; }
                if (!M.count(v)) rem.push_back(v);
            }
            if (!killed) live.push_back(std::move(rem));
        }
        bool done = false;
        for (const Pairing& cand : detail::residual_candidates(red, n, eng)) {
            std::vector<Edge> usable;
            bool conflict = false;
            for (const auto& p : cand.pairs) {
                if (!unpicked(p[0]) || !unpicked(p[1])) continue;
                if (detail::pair_conflicts(p, chosen)) { conflict = true; break; }
                usable.push_back(p);
            }
            if (conflict) continue;
            bool covers = true;
            for (const auto& e : live) {
                bool cov = false;
                for (const auto& p : usable)
                    if (std::includes(e.begin(), e.end(), p.begin(), p.end())) { cov = true; break; }
                // an already-chosen pair (from another gadget or the seed)
                // may also cover a junction edge
                for (const auto& p : chosen)
                    if (!cov && std::includes(e.begin(), e.end(), p.begin(), p.end())) cov = true;
                if (!cov) { covers = false; break; }
            }
            if (!covers) continue;
            for (const auto& p : usable)
                if (std::find(chosen.begin(), chosen.end(), p) == chosen.end())
                    chosen.push_back(p);
            done = true;
            break;
        }
        if (!done) return std::nullopt;
    }
    return make_pairing(std::move(chosen));
}

// ---------------------------------------------------------------------------
// Punishment of Maker deviations at the non-greedy decision points.
// ---------------------------------------------------------------------------

struct PunishmentPlan {
    Vertex breakerReply;
    Pairing globalPairing;  // valid for the post-reply updated board
};

// `eng` must sit at one of the three decision points (M12 branch pick, B12
// x3, B12 qb/qc) with `deviant` an unpicked vertex that regular play does
// not allow there. Extra picks (owed greedy pairs held by the caller) can be
// folded in through M/B overrides.
inline std::optional<PunishmentPlan> punish(const ReductionOutput& red,
                                            const RegularPlayEngine& eng,
                                            const Vertex& deviant) {
    if (eng.ended()) throw std::logic_error("punish after regular play ended");
    const GadgetInstance& g = eng.gadget();
    RegularPlayEngine::Expected exp = eng.expected();
    if (std::find(exp.options.begin(), exp.options.end(), deviant) != exp.options.end())
        throw std::invalid_argument("deviant move actually conforms");

    Vertex reply;
    std::vector<Edge> local;
    NodeType t = eng.type();
    if (t == NodeType::M12 && exp.tag == StepTag::MakerChoice) {
        VertexSet groupA{g.role("y3"), g.role("zb"), g.role("zc"), g.role("pb"), g.role("qb")};
        VertexSet groupB{g.role("pc"), g.role("qc")};
        if (groupA.count(deviant)) {
            reply = g.role("z1");
            local = {{g.role("z2"), g.role("pc")}};
        } else if (groupB.count(deviant)) {
            reply = g.role("z2");
            local = {{g.role("z1"), g.role("pb")}};
        } else {
            reply = g.role("y3");
            local = {{g.role("z1"), g.role("z2")},
                     {g.role("pb"), g.role("qb")},
                     {g.role("pc"), g.role("qc")}};
        }
    } else if (t == NodeType::B12 && exp.tag == StepTag::MakerPlain && eng.phase == 4) {
        if (deviant == g.role("y3")) {
            reply = g.role("y4");
            local = {{g.role("pb"), g.role("x3")}, {g.role("pc"), g.role("qc")}};
        } else if (deviant == g.role("y4")) {
            reply = g.role("y3");
            local = {{g.role("pc"), g.role("x3")}, {g.role("pb"), g.role("qb")}};
        } else {
            reply = g.role("x3");
            local = {{g.role("y3"), g.role("y4")}};
        }
    } else if (t == NodeType::B12 && exp.tag == StepTag::MakerPlain && eng.phase == 8) {
        // Deviations at the final q move. Taking q ourselves kills, via the
        // input-pair law, every taken-branch edge that the already-picked p
        // half-covers; only deviations onto the other branch's junction pair
        // keep the y5 reply (q would leave its half-pair edges uncovered).
        bool branchB = eng.branch == 'b';
        Vertex q = g.role(branchB ? "qb" : "qc");
        Edge otherPair = branchB ? make_edge({g.role("pc"), g.role("qc")})
                                 : make_edge({g.role("pb"), g.role("qb")});
        if (deviant == otherPair[0] || deviant == otherPair[1]) {
            reply = g.role("y5");
            local = {};
        } else {
            reply = q;
            local = {otherPair};
        }
    } else {
        throw std::logic_error("punish called away from a decision point");
    }

    VertexSet M = eng.makerPicks, B = eng.breakerPicks;
    M.insert(deviant);
    B.insert(reply);
    auto pairing = assemble_global_pairing(red, eng, eng.active, M, B, local);
    if (!pairing) return std::nullopt;
    return PunishmentPlan{reply, *pairing};
}

// ---------------------------------------------------------------------------
// Strategy verifiers.
// ---------------------------------------------------------------------------

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<Vertex> counterexample;  // move list reaching the first failure
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
    int maxPliesAfterDeviation = 0;

    void fail(const std::string& why, const std::vector<Vertex>& line) {
        pass = false;
        failures.push_back(why);
        if (counterexample.empty()) counterexample = line;
    }
};

namespace detail {

inline bool completes_edge(const Hypergraph& board, const VertexSet& M) {
    for (const auto& e : board.edges) {
        bool all = true;
        for (const auto& v : e)
            if (!M.count(v)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

// Remaining single vertices of live edges: e with e (intersect) B empty and
// |e \ M| = 1.
inline std::vector<Vertex> live_singletons(const Hypergraph& board, const VertexSet& M,
                                           const VertexSet& B) {
    std::set<Vertex> out;
    for (const auto& e : board.edges) {
        Vertex last;
        int rem = 0;
        bool killed = false;
        for (const auto& v : e) {
            if (B.count(v)) { killed = true; break; }
            if (!M.count(v)) { ++rem; last = v; if (rem > 1) break; }
        }
        if (!killed && rem == 1) out.insert(last);
    }
    return {out.begin(), out.end()};
}

struct MakerVerifier {
    const ReductionOutput& red;
    GeoOracle oracle;
    std::uint64_t budget;
    VerifyReport rep;
    std::vector<Vertex> line;

    MakerVerifier(const ReductionOutput& r, GeoOracle o, std::uint64_t b)
        : red(r), oracle(std::move(o)), budget(b) {}

    void note(std::uint64_t n = 1) {
        rep.nodes += n;
        if (rep.nodes > budget) throw BudgetExceeded("maker verification budget exceeded");
    }

    Vertex maker_choice_vertex(const RegularPlayEngine& eng) {
        GeoState st{eng.active, {}, GeoWinner::Alice};
        st.visited = eng.visited_nodes();
        ArcLabel a = oracle(st);
        const GadgetInstance& g = eng.gadget();
        return g.role(a == g.outArcs[0] ? "z1" : "z2");
    }

    // Explores all Breaker moves with Maker playing the composite strategy.
    // Returns false if some leaf is not a Maker win.
    void explore(RegularPlayEngine eng) {
        note();
        // Maker to move, regular mode.
        if (eng.ended()) {
            if (eng.status != RegularPlayEngine::Status::EndedMakerWinPending) {
                rep.fail("regular play ended in the Breaker-pairing case", line);
                return;
            }
            VertexSet M = eng.makerPicks;
            M.insert(eng.pendingSingleton);
            line.push_back(eng.pendingSingleton);
            if (completes_edge(red.board, M)) ++rep.leaves;
            else rep.fail("surviving singleton did not complete an edge", line);
            line.pop_back();
            return;
        }
        auto exp = eng.expected();
        if (exp.mover != Player::Maker) throw std::logic_error("maker verifier out of turn");
        Vertex mv = exp.tag == StepTag::MakerChoice ? maker_choice_vertex(eng) : exp.options[0];
        eng.advance(mv);
        line.push_back(mv);
        if (completes_edge(red.board, eng.makerPicks)) {
            ++rep.leaves;  // cannot happen mid-regular-play, but count it
            line.pop_back();
            return;
        }
        if (eng.ended()) {
            // Sequence finished on a Maker move? Sequences end on Breaker
            // moves, so this cannot happen.
            rep.fail("regular play ended on a Maker move", line);
            line.pop_back();
            return;
        }
        // Breaker explores every unpicked vertex.
        auto bexp = eng.expected();
        if (bexp.mover != Player::Breaker) throw std::logic_error("expected a Breaker step");
        for (const auto& bv : red.board.vertices) {
            if (eng.makerPicks.count(bv) || eng.breakerPicks.count(bv)) continue;
            line.push_back(bv);
            bool conforming =
                std::find(bexp.options.begin(), bexp.options.end(), bv) != bexp.options.end();
            if (conforming) {
                RegularPlayEngine next = eng;
                next.advance(bv);
                explore(std::move(next));
            } else {
                tactical(eng.makerPicks, eng.breakerPicks, bv, 0);
            }
            line.pop_back();
        }
    }

    // Breaker has deviated: Maker wins by an immediate completion or a
    // double threat. `deviation` is Breaker's off-script pick; plies counts
    // Maker moves since the deviation.
    void tactical(VertexSet M, VertexSet B, const Vertex& breakerPick, int plies) {
        note();
        B.insert(breakerPick);
        auto singles = live_singletons(red.board, M, B);
        if (!singles.empty()) {
            M.insert(singles.front());
            line.push_back(singles.front());
            if (completes_edge(red.board, M)) {
                ++rep.leaves;
                rep.maxPliesAfterDeviation = std::max(rep.maxPliesAfterDeviation, plies + 1);
            } else {
                rep.fail("singleton pick failed to complete an edge", line);
            }
            line.pop_back();
            return;
        }
        if (plies >= 1) {
            rep.fail("no immediate completion after the double-threat move", line);
            return;
        }
        // Lex-lowest vertex creating two distinct threats.
        for (const auto& v : red.board.vertices) {
            if (M.count(v) || B.count(v)) continue;
            VertexSet M2 = M;
            M2.insert(v);
            if (live_singletons(red.board, M2, B).size() < 2) continue;
            line.push_back(v);
            bool ok = true;
            for (const auto& bv : red.board.vertices) {
                if (M2.count(bv) || B.count(bv)) continue;
                line.push_back(bv);
                tactical(M2, B, bv, plies + 1);
                line.pop_back();
            }
            line.pop_back();
            return;
        }
        rep.fail("Breaker deviation with no double-threat reply", line);
    }
};

struct BreakerVerifier {
    const ReductionOutput& red;
    GeoOracle oracle;
    std::uint64_t budget;
    VerifyReport rep;
    std::vector<Vertex> line;
    std::set<std::string> seen;  // verified (M, B) states; orderings merge

    BreakerVerifier(const ReductionOutput& r, GeoOracle o, std::uint64_t b)
        : red(r), oracle(std::move(o)), budget(b) {}

    void note() {
        if (++rep.nodes > budget) throw BudgetExceeded("breaker verification budget exceeded");
    }

    Vertex breaker_choice_vertex(const RegularPlayEngine& eng) {
        GeoState st{eng.active, {}, GeoWinner::Bob};
        st.visited = eng.visited_nodes();
        ArcLabel a = oracle(st);
        const GadgetInstance& g = eng.gadget();
        return g.role(a == g.outArcs[0] ? "y4" : "y3");
    }

    // Validates a pairing (plus owed pairs) against the real updated board
    // and closes the branch as a Breaker-win leaf.
    void pairing_leaf(const Pairing& pairing, const std::vector<Edge>& owed, const VertexSet& M,
                      const VertexSet& B) {
        std::vector<Edge> pairs = pairing.pairs;
        for (const auto& p : owed) pairs.push_back(p);
        Pairing full = make_pairing(std::move(pairs));
        Hypergraph updated = mb_update(red.board, M, B);
        auto chk = check_pairing(updated, full);
        if (chk.ok) ++rep.leaves;
        else rep.fail("leaf pairing invalid: " + chk.reason, line);
    }

    // One Maker move `m` arriving at fiction state `eng` with pending owed
    // pairs; on return the branch is fully handled.
    void handle_maker_move(RegularPlayEngine eng, std::vector<Edge> owed, VertexSet M, VertexSet B,
                           const Vertex& m) {
        note();
        M.insert(m);
        // Owed pair? Answer with the partner.
        for (std::size_t i = 0; i < owed.size(); ++i) {
            if (owed[i][0] == m || owed[i][1] == m) {
                Vertex reply = owed[i][0] == m ? owed[i][1] : owed[i][0];
                owed.erase(owed.begin() + i);
                B.insert(reply);
                line.push_back(reply);
                explore(std::move(eng), std::move(owed), std::move(M), std::move(B));
                line.pop_back();
                return;
            }
        }
        // Reinterpret against the fiction, rolling past skipped greedy pairs.
        while (true) {
            if (eng.ended()) {
                if (eng.status == RegularPlayEngine::Status::EndedMakerWinPending) {
                    rep.fail("regular play ended with a Maker singleton", line);
                    return;
                }
                VertexSet Mpre = M;
                Mpre.erase(m);
                auto pairing = assemble_global_pairing(red, eng, std::nullopt, eng.makerPicks,
                                                       eng.breakerPicks, {});
                if (!pairing) {
                    rep.fail("end-of-play pairing assembly failed", line);
                    return;
                }
                pairing_leaf(*pairing, owed, Mpre, B);
                return;
            }
            auto exp = eng.expected();
            if (exp.mover != Player::Maker) throw std::logic_error("fiction out of turn");
            if (exp.tag == StepTag::Greedy) {
                Vertex x = exp.options[0];
                eng.advance(x);
                auto fexp = eng.expected();
                if (fexp.tag != StepTag::Forced)
                    throw std::logic_error("greedy move not followed by a forced reply");
                Vertex y = fexp.options[0];
                eng.advance(y);
                if (m == x) {  // conforming: real reply = y
                    B.insert(y);
                    line.push_back(y);
                    explore(std::move(eng), std::move(owed), std::move(M), std::move(B));
                    line.pop_back();
                    return;
                }
                if (m == y) {  // reversed roles: Breaker takes x, same effect
                    B.insert(x);
                    line.push_back(x);
                    explore(std::move(eng), std::move(owed), std::move(M), std::move(B));
                    line.pop_back();
                    return;
                }
                owed.push_back(make_edge({x, y}));  // skipped pair, kept in hand
                continue;
            }
            // Non-greedy Maker step: conform or punish.
            if (std::find(exp.options.begin(), exp.options.end(), m) != exp.options.end()) {
                eng.advance(m);
                auto bexp = eng.expected();
                Vertex reply = bexp.tag == StepTag::BreakerChoice ? breaker_choice_vertex(eng)
                                                                  : bexp.options[0];
                eng.advance(reply);
                B.insert(reply);
                line.push_back(reply);
                explore(std::move(eng), std::move(owed), std::move(M), std::move(B));
                line.pop_back();
                return;
            }
            auto plan = punish(red, eng, m);
            if (!plan) {
                rep.fail("punishment pairing assembly failed for deviant " + m, line);
                return;
            }
            B.insert(plan->breakerReply);
            line.push_back(plan->breakerReply);
            pairing_leaf(plan->globalPairing, owed, M, B);
            line.pop_back();
            return;
        }
    }

    // Maker to move: fan out over all real-unpicked vertices.
    void explore(RegularPlayEngine eng, std::vector<Edge> owed, VertexSet M, VertexSet B) {
        note();
        {
            std::string key;
            for (const auto& v : M) key += v + ",";
            key += "|";
            for (const auto& v : B) key += v + ",";
            if (!seen.insert(std::move(key)).second) return;
        }
        if (eng.ended()) {
            if (eng.status == RegularPlayEngine::Status::EndedMakerWinPending) {
                rep.fail("regular play ended with a Maker singleton", line);
                return;
            }
            auto pairing = assemble_global_pairing(red, eng, std::nullopt, eng.makerPicks,
                                                   eng.breakerPicks, {});
            if (!pairing) {
                rep.fail("end-of-play pairing assembly failed", line);
                return;
            }
            pairing_leaf(*pairing, owed, M, B);
            return;
        }
        for (const auto& v : red.board.vertices) {
            if (M.count(v) || B.count(v)) continue;
            line.push_back(v);
            handle_maker_move(eng, owed, M, B, v);
            line.pop_back();
        }
    }
};

}  // namespace detail

// Exhaustive check that the composite strategy of `side` wins every line
// against an arbitrary opponent on the rank-4 reduced board.
inline VerifyReport verify_mb_strategy(const ReductionOutput& red, Player side,
                                       const GeoOracle& oracle,
                                       std::uint64_t budget = 500'000'000) {
    if (side == Player::Maker) {
        detail::MakerVerifier v(red, oracle, budget);
        v.explore(RegularPlayEngine(red));
        return std::move(v.rep);
    }
    detail::BreakerVerifier v(red, oracle, budget);
    v.explore(RegularPlayEngine(red), {}, {}, {});
    return std::move(v.rep);
}

// ---------------------------------------------------------------------------
// Gadget claim checker.
// ---------------------------------------------------------------------------

struct ClaimCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ClaimReport {
    std::vector<ClaimCheck> checks;
    bool pass = true;
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
        if (!ok) pass = false;
    }
};

namespace detail {

inline GadgetInstance standalone_gadget(NodeType t) {
    switch (t) {
        case NodeType::B01: return gadget_instance(t, "v", {}, {"a"});
        case NodeType::B11:
        case NodeType::M11: return gadget_instance(t, "v", {"a"}, {"b"});
        case NodeType::B21:
        case NodeType::M21: return gadget_instance(t, "v", {"a", "b"}, {"c"});
        default: return gadget_instance(t, "v", {"a"}, {"b", "c"});
    }
}

inline bool is_clean_pair(const GadgetInstance& g, const Edge& p) {
    bool j0 = !g.interior.count(p[0]);
    bool j1 = !g.interior.count(p[1]);
    if (!j0 && !j1) return true;  // interior-interior
    if (j0 && j1) {
        // junction pair requires twinhood: same arc, p/q
        return p[0].substr(0, p[0].size() - 2) == p[1].substr(0, p[1].size() - 2);
    }
    return false;
}

inline Vertex junction_twin(const Vertex& v) {
    if (v.size() > 2 && v.compare(v.size() - 2, 2, ".p") == 0) return v.substr(0, v.size() - 1) + "q";
    if (v.size() > 2 && v.compare(v.size() - 2, 2, ".q") == 0) return v.substr(0, v.size() - 1) + "p";
    return {};
}

}  // namespace detail

// Mechanical verification of the gadget library: pairing families (validity
// plus clean/mixed classification), the input-pair law, the greedy/forced
// structure of every regular-play sequence, and end-of-sequence residues.
inline ClaimReport check_gadget_claims() {
    ClaimReport rep;
    struct Scenario {
        char entrySlot;
        char branchSlot;
    };
    for (NodeType t : {NodeType::B01, NodeType::B11, NodeType::M11, NodeType::B21, NodeType::M21,
                       NodeType::B12, NodeType::M12}) {
        GadgetInstance g = detail::standalone_gadget(t);
        std::string tn = to_string(t);
        Hypergraph board = make_board(g.vertices, g.edges);

        // (ii) input-pair law: every gadget edge containing one vertex of an
        // input pair contains the other.
        {
            bool ok = true;
            for (const auto& a : g.inArcs) {
                Vertex p = a + ".p", q = a + ".q";
                for (const auto& e : g.edges) {
                    bool hp = std::binary_search(e.begin(), e.end(), p);
                    bool hq = std::binary_search(e.begin(), e.end(), q);
                    if (hp != hq) ok = false;
                }
            }
            rep.add(tn + ": input-pair law", ok);
        }

        // (i) pairing families.
        if (t != NodeType::B01) {
            auto chk = check_pairing(board, g.basePairing);
            bool clean = true;
            for (const auto& p : g.basePairing.pairs)
                if (!detail::is_clean_pair(g, p)) clean = false;
            rep.add(tn + ": base pairing", chk.ok && clean, chk.reason);
            bool allOk = true;
            std::string why;
            for (const auto& v : g.vertices) {
                auto it = g.avoidPairing.find(v);
                if (it == g.avoidPairing.end()) {
                    allOk = false;
                    why = "missing family for " + v;
                    break;
                }
                const Pairing& pi = it->second;
                auto c = check_pairing(board, pi);
                if (!c.ok) { allOk = false; why = v + ": " + c.reason; break; }
                if (pi.uses(v)) { allOk = false; why = "family for " + v + " uses it"; break; }
                int mixed = 0;
                bool twinOk = true;
                for (const auto& p : pi.pairs) {
                    if (detail::is_clean_pair(g, p)) continue;
                    ++mixed;
                    // the mixed pair must combine the twin of v with an interior vertex
                    Vertex tw = detail::junction_twin(v);
                    bool hasTwin = p[0] == tw || p[1] == tw;
                    bool hasInterior = g.interior.count(p[0]) || g.interior.count(p[1]);
                    if (!hasTwin || !hasInterior) twinOk = false;
                }
                if (g.inputVertices.count(v)) {
                    if (mixed != 1 || !twinOk) {
                        allOk = false;
                        why = "input family for " + v + " lacks the twin-mixed shape";
                        break;
                    }
                } else if (mixed != 0) {
                    allOk = false;
                    why = "family for " + v + " is not clean";
                    break;
                }
            }
            rep.add(tn + ": avoidance pairings", allOk, why);
        }

        // (iii) + (iv): sequences and residues, across all entry/branch
        // combinations.
        std::vector<Scenario> scenarios;
        if (t == NodeType::M21) scenarios = {{'a', 0}, {'b', 0}};
        else if (t == NodeType::B12 || t == NodeType::M12) scenarios = {{0, 'b'}, {0, 'c'}};
        else scenarios = {{0, 0}};
        for (const auto& sc : scenarios) {
            VertexSet M, B;
            if (t != NodeType::B01)
                for (const auto& a : g.inArcs) {
                    // only the entry pair is Maker-picked at activation
                    if (t == NodeType::M21 || t == NodeType::B21) {
                        char slot = a == g.inArcs[0] ? 'a' : 'b';
                        char entry = sc.entrySlot ? sc.entrySlot : 'a';
                        if (slot != entry) continue;
                    }
                    M.insert(a + ".p");
                    M.insert(a + ".q");
                }
            auto steps = regular_sequence_roles(t, sc.entrySlot, sc.branchSlot);
            bool ok = true;
            std::string why;
            for (std::size_t i = 0; i < steps.size() && ok; ++i) {
                const Step& st = steps[i];
                Vertex v = g.role(st.token);
                if (st.tag == StepTag::Greedy) {
                    Vertex y = g.role(steps[i + 1].token);
                    Hypergraph u = mb_update(board, M, B);
                    auto pairs = greedy_pairs_mb(u);
                    if (std::find(pairs.begin(), pairs.end(), std::pair<Vertex, Vertex>{v, y}) ==
                        pairs.end()) {
                        ok = false;
                        why = "step " + std::to_string(i) + " (" + v + "," + y + ") not greedy";
                    }
                } else if (st.tag == StepTag::Forced) {
                    auto singles = detail::live_singletons(board, M, B);
                    if (singles.size() != 1 || singles[0] != v) {
                        ok = false;
                        why = "step " + std::to_string(i) + " reply " + v + " not forced";
                    }
                }
                (st.mover == Player::Maker ? M : B).insert(v);
            }
            std::string scn = tn;
            if (sc.entrySlot) scn += std::string(" entry ") + sc.entrySlot;
            if (sc.branchSlot) scn += std::string(" branch ") + sc.branchSlot;
            rep.add(scn + ": sequence greedy/forced", ok, why);

            // residues
            Hypergraph u = mb_update(board, M, B);
            std::vector<Vertex> wantV;
            std::vector<Edge> wantE;
            if (t == NodeType::B21) {
                char unused = (sc.entrySlot ? sc.entrySlot : 'a') == 'a' ? 'b' : 'a';
                ArcLabel ga = unused == 'a' ? g.inArcs[0] : g.inArcs[1];
                wantV = {ga + ".p", ga + ".q"};
            } else if (t == NodeType::M21) {
                char unused = (sc.entrySlot ? sc.entrySlot : 'a') == 'a' ? 'b' : 'a';
                ArcLabel ga = unused == 'a' ? g.inArcs[0] : g.inArcs[1];
                Vertex z = g.role(unused == 'a' ? "za" : "zb");
                wantV = {ga + ".p", ga + ".q", z};
                wantE = {make_edge({ga + ".p", ga + ".q", z})};
            } else if (t == NodeType::B12 || t == NodeType::M12) {
                char unused = sc.branchSlot == 'b' ? 'c' : 'b';
                ArcLabel ga = unused == 'b' ? g.outArcs[0] : g.outArcs[1];
                wantV = {ga + ".p", ga + ".q"};
                if (t == NodeType::M12) wantV.push_back(g.role(unused == 'b' ? "zb" : "zc"));
            }
            std::sort(wantV.begin(), wantV.end());
            bool rok = u.vertices == wantV && u.edges == canonical_family(std::move(wantE));
            rep.add(scn + ": residue", rok);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Maker-Maker claims.
// ---------------------------------------------------------------------------

// Simulates Maker-Maker regular play over every branch combination and
// checks: the size-(*) shape of blue edges from the fourth move on, the SP
// no-threat property with its one published exception, the two-family greedy
// conditions at every "g" step, and the end-state certificates (draw
// pairings for both players in the Breaker-pairing ending, a red singleton
// with no short blue edge in the Maker-win-pending ending).
inline VerifyReport verify_mm_claims(const ReductionOutput& red,
                                     std::uint64_t budget = 100'000'000) {
    VerifyReport rep;
    std::vector<Vertex> line;

    // Allowed size-3 blue shapes: {p_e, q_e, z_e} for an out-arc e of an M12.
    std::set<Edge> allowedTriples;
    for (const auto& [n, g] : red.gadgets) {
        if (g.type != NodeType::M12) continue;
        for (int k = 0; k < 2; ++k) {
            const ArcLabel& a = g.outArcs[k];
            allowedTriples.insert(
                make_edge({a + ".p", a + ".q", g.role(k == 0 ? "zb" : "zc")}));
        }
    }

    std::function<void(RegularPlayEngine)> walk = [&](RegularPlayEngine eng) {
        if (++rep.nodes > budget) throw BudgetExceeded("maker-maker claim budget exceeded");
        if (eng.ended()) {
            MMFamilies fam = mm_update(red.board, eng.makerPicks, eng.breakerPicks);
            for (const auto& e : fam.red)
                if (e.empty()) rep.fail("red edge filled during regular play", line);
            for (const auto& e : fam.blue)
                if (e.empty()) rep.fail("blue edge filled during regular play", line);
            if (eng.status == RegularPlayEngine::Status::EndedMakerWinPending) {
                bool singleton = false;
                for (const auto& e : fam.red)
                    if (e.size() == 1) singleton = true;
                if (!singleton) rep.fail("no red singleton at the winning ending", line);
                for (const auto& e : fam.blue)
                    if (e.size() <= 2) rep.fail("short blue edge at the winning ending", line);
            } else {
                auto pairing = assemble_global_pairing(red, eng, std::nullopt, eng.makerPicks,
                                                       eng.breakerPicks, {});
                if (!pairing) {
                    rep.fail("draw-pairing assembly failed", line);
                    return;
                }
                Hypergraph redBoard = mb_update(red.board, eng.makerPicks, eng.breakerPicks);
                auto cr = check_pairing(redBoard, *pairing);
                if (!cr.ok) rep.fail("SP draw pairing invalid: " + cr.reason, line);
                // FP draw pairing: the same pairs, plus the junction pair of
                // each surviving blue {p_e, q_e, z_e} edge.
                std::vector<Edge> fpPairs = pairing->pairs;
                for (const auto& e : fam.blue) {
                    if (e.size() != 3 || !allowedTriples.count(e)) continue;
                    Edge jp;
                    for (const auto& v : e) {
                        Vertex tw = detail::junction_twin(v);
                        if (!tw.empty() &&
                            std::binary_search(e.begin(), e.end(), tw) && v < tw)
                            jp = make_edge({v, tw});
                    }
                    if (!jp.empty() &&
                        std::find(fpPairs.begin(), fpPairs.end(), jp) == fpPairs.end())
                        fpPairs.push_back(jp);
                }
                Hypergraph blueBoard =
                    make_view(redBoard.vertices, canonical_family(std::vector<Edge>(fam.blue)));
                auto cb = check_pairing(blueBoard, make_pairing(std::move(fpPairs)));
                if (!cb.ok) rep.fail("FP draw pairing invalid: " + cb.reason, line);
                rep.leaves += 1;
            }
            return;
        }
        auto exp = eng.expected();
        MMFamilies fam = mm_update(red.board, eng.makerPicks, eng.breakerPicks);

        auto checkBlueShapes = [&](const std::vector<Edge>& blue) {
            for (const auto& e : blue) {
                if (e.size() == 4) continue;
                if (e.size() == 3 && allowedTriples.count(e)) continue;
                std::string key;
                for (const auto& v : e) key += (key.empty() ? "" : ",") + v;
                rep.fail("blue edge violates the shape property: {" + key + "}", line);
            }
        };

        for (std::size_t oi = 0; oi < exp.options.size(); ++oi) {
            const Vertex& v = exp.options[oi];
            if (exp.mover == Player::Breaker) {
                // SP no-threat condition.
                std::vector<Edge> holding;
                for (const auto& e : fam.blue)
                    if (std::binary_search(e.begin(), e.end(), v)) holding.push_back(e);
                bool zReply = eng.type() == NodeType::M12 && exp.tag == StepTag::Forced &&
                              (v == eng.gadget().role("z1") || v == eng.gadget().role("z2"));
                if (zReply) {
                    const GadgetInstance& g = eng.gadget();
                    Edge expect = v == g.role("z1")
                                      ? make_edge({g.role("z1"), g.role("pb"), g.role("qb"),
                                                   g.role("zb")})
                                      : make_edge({g.role("z2"), g.role("pc"), g.role("qc"),
                                                   g.role("zc")});
                    if (holding.size() != 1 || holding[0] != expect)
                        rep.fail("z-reply exception mismatch at " + v, line);
                } else if (!holding.empty()) {
                    rep.fail("SP regular move " + v + " appears in a blue edge", line);
                }
                if (exp.tag == StepTag::Forced) {
                    auto singles = detail::live_singletons(red.board, eng.makerPicks,
                                                           eng.breakerPicks);
                    if (std::find(singles.begin(), singles.end(), v) == singles.end())
                        rep.fail("forced SP reply " + v + " not backed by a red singleton", line);
                }
            } else if (exp.tag == StepTag::Greedy) {
                // Two-family greedy conditions: (x, y) greedy on red, no blue
                // edge contains y, no blue singleton.
                RegularPlayEngine probe = eng;
                probe.advance(v);
                Vertex y = probe.expected().options[0];
                Hypergraph redBoard = mb_update(red.board, eng.makerPicks, eng.breakerPicks);
                auto pairs = greedy_pairs_mb(redBoard);
                if (std::find(pairs.begin(), pairs.end(), std::pair<Vertex, Vertex>{v, y}) ==
                    pairs.end())
                    rep.fail("step " + v + " fails the red greedy condition", line);
                for (const auto& e : fam.blue) {
                    if (std::binary_search(e.begin(), e.end(), y) &&
                        !std::binary_search(e.begin(), e.end(), v))
                        rep.fail("blue edge holds " + y + " without " + v, line);
                    if (e.size() <= 1) rep.fail("blue singleton before a greedy move", line);
                }
            }
            RegularPlayEngine next = eng;
            next.advance(v);
            line.push_back(v);
            if (next.movesPlayed >= 3) {
                MMFamilies after = mm_update(red.board, next.makerPicks, next.breakerPicks);
                checkBlueShapes(after.blue);
            }
            walk(std::move(next));
            line.pop_back();
        }
    };
    walk(RegularPlayEngine(red));
    return rep;
}

// ---------------------------------------------------------------------------
// Uniformized start gadget: opening analysis.
// ---------------------------------------------------------------------------

// Checks the opening of the Maker-Maker game on the fully 4-uniform variant:
// the two greedy conditions for the start gadget's junction vertices, the
// exhaustive "at least three uniformizer vertices remain" argument over SP
// deviations, and red/blue family equality with the rank-4 board after the
// four conforming opening moves (with the uniformizers isolated).
inline VerifyReport verify_mm_uniform_opening(const ReductionOutput& uni,
                                              const ReductionOutput& rank4) {
    VerifyReport rep;
    std::vector<Vertex> line;
    const GadgetInstance& gs = uni.gadget(uni.instance.start);
    Vertex pa = gs.role("pa"), qa = gs.role("qa"), y1 = gs.role("y1"), y2 = gs.role("y2");
    const auto& z = uni.startUniformizers;
    if (z.size() != 10) {
        rep.fail("expected ten uniformizer vertices", line);
        return rep;
    }

    if (!uni.board.is_uniform(4)) rep.fail("board is not 4-uniform", line);

    // Greedy side conditions: every edge containing y1 contains pa (and the
    // mirror for y2 / qa).
    for (const auto& e : uni.board.edges) {
        if (std::binary_search(e.begin(), e.end(), y1) &&
            !std::binary_search(e.begin(), e.end(), pa))
            rep.fail("edge holds " + y1 + " without " + pa, line);
        if (std::binary_search(e.begin(), e.end(), y2) &&
            !std::binary_search(e.begin(), e.end(), qa))
            rep.fail("edge holds " + y2 + " without " + qa, line);
    }

    auto countUnpicked = [&](int from, int to, const VertexSet& F, const VertexSet& S) {
        int c = 0;
        for (int i = from; i < to; ++i)
            if (!F.count(z[i]) && !S.count(z[i])) ++c;
        return c;
    };

    // Round one: FP pa; any SP deviation y != y1; FP y1; any SP reply y'.
    for (const auto& y : uni.board.vertices) {
        if (y == pa || y == y1) continue;
        for (const auto& yp : uni.board.vertices) {
            if (yp == pa || yp == y1 || yp == y) continue;
            VertexSet F{pa, y1}, S{y, yp};
            if (countUnpicked(0, 5, F, S) < 3)
                rep.fail("fewer than three low uniformizers after deviation " + y + "," + yp,
                         line);
        }
    }
    // Round two: after the conforming first round, FP qa; SP deviation
    // y != y2; FP y2; SP reply y'.
    for (const auto& y : uni.board.vertices) {
        if (y == pa || y == y1 || y == qa || y == y2) continue;
        for (const auto& yp : uni.board.vertices) {
            if (yp == pa || yp == y1 || yp == qa || yp == y2 || yp == y) continue;
            VertexSet F{pa, qa, y2}, S{y1, y, yp};
            if (countUnpicked(5, 10, F, S) < 3)
                rep.fail("fewer than three high uniformizers after deviation " + y + "," + yp,
                         line);
        }
    }

    // Post-opening equality with the rank-4 board.
    VertexSet F{pa, qa}, S{y1, y2};
    MMFamilies uf = mm_update(uni.board, F, S);
    MMFamilies rf = mm_update(rank4.board, F, S);
    if (uf.red != rf.red || uf.blue != rf.blue)
        rep.fail("post-opening families differ from the rank-4 board", line);
    for (const auto& zi : z) {
        for (const auto& e : uf.red)
            if (std::binary_search(e.begin(), e.end(), zi))
                rep.fail("uniformizer " + zi + " not isolated (red)", line);
        for (const auto& e : uf.blue)
            if (std::binary_search(e.begin(), e.end(), zi))
                rep.fail("uniformizer " + zi + " not isolated (blue)", line);
    }
    rep.leaves = 1;
    return rep;
}

}  // namespace hypergames

#endif
