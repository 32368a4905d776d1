#ifndef HYPERGAMES_GEOGRAPHY_HPP
#define HYPERGAMES_GEOGRAPHY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "budget.hpp"

namespace hypergames {

using NodeId = std::string;
using ArcLabel = std::string;

struct Arc {
    NodeId tail;
    NodeId head;
    ArcLabel label;
    bool operator==(const Arc& o) const {
        return tail == o.tail && head == o.head && label == o.label;
    }
};

// A Geography instance: digraph plus start node. Two players move a token
// along arcs; whoever first moves it to an already-visited node loses.
struct GeoInstance {
    std::vector<NodeId> nodes;  // ordered as given
    std::vector<Arc> arcs;      // ordered as given
    NodeId start;

    bool has_node(const NodeId& n) const {
        for (const auto& m : nodes)
            if (m == n) return true;
        return false;
    }
    std::vector<const Arc*> out_arcs(const NodeId& n) const {
        std::vector<const Arc*> out;
        for (const auto& a : arcs)
            if (a.tail == n) out.push_back(&a);
        return out;
    }
    std::vector<const Arc*> in_arcs(const NodeId& n) const {
        std::vector<const Arc*> out;
        for (const auto& a : arcs)
            if (a.head == n) out.push_back(&a);
        return out;
    }
    const Arc* arc_by_label(const ArcLabel& l) const {
        for (const auto& a : arcs)
            if (a.label == l) return &a;
        return nullptr;
    }
};

// Structural well-formedness; throws on malformed input (distinct from the
// restricted-class validation below, which reports).
inline GeoInstance make_geo_instance(std::vector<NodeId> nodes, std::vector<Arc> arcs,
                                     NodeId start) {
    GeoInstance g{std::move(nodes), std::move(arcs), std::move(start)};
    std::set<NodeId> nodeSet(g.nodes.begin(), g.nodes.end());
    if (nodeSet.size() != g.nodes.size()) throw std::invalid_argument("duplicate node id");
    if (!nodeSet.count(g.start)) throw std::invalid_argument("start node missing");
    std::set<ArcLabel> labels;
    std::set<std::pair<NodeId, NodeId>> endpoints;
    int autoLabel = 0;
    for (auto& a : g.arcs) {
        if (!nodeSet.count(a.tail) || !nodeSet.count(a.head))
            throw std::invalid_argument("arc endpoint is not a node");
        if (a.tail == a.head) throw std::invalid_argument("self-loop at " + a.tail);
        if (a.label.empty()) a.label = "a" + std::to_string(autoLabel);
        ++autoLabel;
        if (!labels.insert(a.label).second)
            throw std::invalid_argument("duplicate arc label " + a.label);
        if (!endpoints.insert({a.tail, a.head}).second)
            throw std::invalid_argument("parallel duplicate arc " + a.tail + "->" + a.head);
    }
    return g;
}

struct GeoValidation {
    bool valid = false;
    std::vector<std::string> violations;
};

namespace detail {
// 2-coloring of the underlying undirected graph, start = 0; nullopt when not
// bipartite or not weakly connected.
inline std::optional<std::map<NodeId, int>> try_two_coloring(const GeoInstance& g) {
    std::map<NodeId, int> color;
    std::vector<NodeId> stack{g.start};
    color[g.start] = 0;
    while (!stack.empty()) {
        NodeId n = stack.back();
        stack.pop_back();
        for (const auto& a : g.arcs) {
            NodeId other;
            if (a.tail == n) other = a.head;
            else if (a.head == n) other = a.tail;
            else continue;
            auto it = color.find(other);
            if (it == color.end()) {
                color[other] = 1 - color[n];
                stack.push_back(other);
            } else if (it->second == color[n]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    if (color.size() != g.nodes.size()) return std::nullopt;  // disconnected
    return color;
}
}  // namespace detail

// The restricted class this workbench targets: weakly connected, bipartite,
// start with (in,out) = (0,1), every other node (1,1), (2,1) or (1,2).
inline GeoValidation validate_geo(const GeoInstance& g) {
    GeoValidation rep;
    auto deg = [&](const NodeId& n) {
        return std::pair<int, int>{(int)g.in_arcs(n).size(), (int)g.out_arcs(n).size()};
    };
    auto [sin, sout] = deg(g.start);
    if (sin != 0) rep.violations.push_back("start " + g.start + " has in-degree " + std::to_string(sin) + ", expected 0");
    if (sout != 1) rep.violations.push_back("start " + g.start + " has out-degree " + std::to_string(sout) + ", expected 1");
    for (const auto& n : g.nodes) {
        if (n == g.start) continue;
        auto [din, dout] = deg(n);
        bool ok = (din == 1 && dout == 1) || (din == 2 && dout == 1) || (din == 1 && dout == 2);
        if (!ok)
            rep.violations.push_back("node " + n + " has degree (" + std::to_string(din) + "," +
                                     std::to_string(dout) + "), expected (1,1), (2,1) or (1,2)");
    }
    auto color = detail::try_two_coloring(g);
    if (!color) {
        // distinguish the two failure modes for the report
        std::set<NodeId> seen{g.start};
        std::vector<NodeId> stack{g.start};
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            for (const auto& a : g.arcs) {
                NodeId other = a.tail == n ? a.head : (a.head == n ? a.tail : NodeId{});
                if (!other.empty() && seen.insert(other).second) stack.push_back(other);
            }
        }
        if (seen.size() != g.nodes.size())
            rep.violations.push_back("digraph is not weakly connected");
        else
            rep.violations.push_back("digraph is not bipartite");
    }
    rep.valid = rep.violations.empty();
    return rep;
}

// 2-coloring with start = 0; unique on a connected bipartite instance.
inline std::map<NodeId, int> two_coloring(const GeoInstance& g) {
    auto color = detail::try_two_coloring(g);
    if (!color) throw std::invalid_argument("instance is not connected bipartite");
    return *color;
}

// Node classification by color and degree profile. B-types share the start
// node's color (Breaker/SP hosts the choice or passage), M-types differ.
enum class NodeType { B01, B11, B21, B12, M11, M21, M12 };

inline const char* to_string(NodeType t) {
    switch (t) {
        case NodeType::B01: return "B01";
        case NodeType::B11: return "B11";
        case NodeType::B21: return "B21";
        case NodeType::B12: return "B12";
        case NodeType::M11: return "M11";
        case NodeType::M21: return "M21";
        default: return "M12";
    }
}

inline std::optional<NodeType> node_type_from_string(const std::string& s) {
    for (NodeType t : {NodeType::B01, NodeType::B11, NodeType::B21, NodeType::B12,
                       NodeType::M11, NodeType::M21, NodeType::M12})
        if (s == to_string(t)) return t;
    return std::nullopt;
}

inline std::map<NodeId, NodeType> classify_nodes(const GeoInstance& g) {
    auto val = validate_geo(g);
    if (!val.valid) throw std::invalid_argument("classify_nodes on invalid instance");
    auto color = two_coloring(g);
    std::map<NodeId, NodeType> types;
    for (const auto& n : g.nodes) {
        if (n == g.start) { types[n] = NodeType::B01; continue; }
        int din = (int)g.in_arcs(n).size();
        int dout = (int)g.out_arcs(n).size();
        bool sameColor = color[n] == 0;
        if (din == 1 && dout == 1) types[n] = sameColor ? NodeType::B11 : NodeType::M11;
        else if (din == 2 && dout == 1) types[n] = sameColor ? NodeType::B21 : NodeType::M21;
        else types[n] = sameColor ? NodeType::B12 : NodeType::M12;
    }
    return types;
}

enum class GeoWinner { Alice, Bob };

inline const char* to_string(GeoWinner w) { return w == GeoWinner::Alice ? "Alice" : "Bob"; }

// A token game state: the token's node, the visited set, and the mover.
struct GeoState {
    NodeId current;
    std::set<NodeId> visited;  // always contains current
    GeoWinner mover = GeoWinner::Bob;
};

struct GeoSolveReport {
    GeoWinner winner;
    std::uint64_t states = 0;
    std::vector<ArcLabel> principalLine;
};

namespace detail {
struct GeoSolver {
    const GeoInstance& g;
    std::vector<NodeId> order;              // fixed node order for bitmasks
    std::map<NodeId, int> index;
    std::map<NodeId, int> color;            // parity assertion
    std::unordered_map<std::uint64_t, bool> memo;  // (current, visited) -> mover wins
    std::uint64_t states = 0;
    std::uint64_t budget;

    GeoSolver(const GeoInstance& inst, std::uint64_t b) : g(inst), budget(b) {
        order = g.nodes;
        for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = (int)i;
        auto c = try_two_coloring(g);
        if (c) color = *c;
    }

    std::uint64_t key(int cur, std::uint64_t visited) const {
        return visited | (std::uint64_t(cur) << 40);
    }

    // Does the player to move from (cur, visited) win?
    bool mover_wins(int cur, std::uint64_t visited, bool moverIsBob) {
        auto k = key(cur, visited);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        if (++states > budget) throw BudgetExceeded("geography state budget exceeded");
        // Parity: on validated instances Bob moves exactly from nodes colored
        // like the start node.
        if (!color.empty() && (color.at(order[cur]) == 0) != moverIsBob)
            throw std::logic_error("geography parity violated at node " + order[cur]);
        bool win = false;
        for (const auto* a : g.out_arcs(order[cur])) {
            int h = index.at(a->head);
            if (visited & (1ull << h)) continue;  // moving there loses outright
            if (!mover_wins(h, visited | (1ull << h), !moverIsBob)) { win = true; break; }
        }
        // No winning move: either all arcs revisit (mover loses by moving) or
        // out-degree 0 (cannot move, loses by the totalizing rule).
        memo[k] = win;
        return win;
    }
};
}  // namespace detail

// Exact winner under optimal play; Bob moves the token away from the start.
inline GeoSolveReport solve_geo(const GeoInstance& g, std::uint64_t budget = 50'000'000) {
    if (g.nodes.size() > 40) throw std::invalid_argument("solve_geo: instance too large");
    detail::GeoSolver solver(g, budget);
    int s = solver.index.at(g.start);
    bool bobWins = solver.mover_wins(s, 1ull << s, true);
    GeoSolveReport rep;
    rep.winner = bobWins ? GeoWinner::Bob : GeoWinner::Alice;
    rep.states = solver.states;
    // principal line: replay greedily through the memo
    int cur = s;
    std::uint64_t visited = 1ull << s;
    bool moverIsBob = true;
    while (true) {
        const Arc* pick = nullptr;
        for (const auto* a : g.out_arcs(g.nodes[cur])) {
            int h = solver.index.at(a->head);
            if (visited & (1ull << h)) continue;
            if (!solver.mover_wins(h, visited | (1ull << h), !moverIsBob)) { pick = a; break; }
        }
        if (!pick) {
            // losing side: take the lowest-labeled unvisited arc if any
            for (const auto* a : g.out_arcs(g.nodes[cur])) {
                int h = solver.index.at(a->head);
                if (!(visited & (1ull << h)) && (!pick || a->label < pick->label)) pick = a;
            }
        }
        if (!pick) break;
        rep.principalLine.push_back(pick->label);
        cur = solver.index.at(pick->head);
        visited |= 1ull << cur;
        moverIsBob = !moverIsBob;
    }
    return rep;
}

// A Geography strategy: given a state, the arc to move along.
using GeoOracle = std::function<ArcLabel(const GeoState&)>;

// Oracle backed by the exact solver: picks a winning arc when one exists,
// otherwise the lowest-labeled arc to an unvisited node.
inline GeoOracle make_optimal_oracle(const GeoInstance& g, std::uint64_t budget = 50'000'000) {
    auto solver = std::make_shared<detail::GeoSolver>(g, budget);
    return [solver, g](const GeoState& st) -> ArcLabel {
        int cur = solver->index.at(st.current);
        std::uint64_t visited = 0;
        for (const auto& n : st.visited) visited |= 1ull << solver->index.at(n);
        bool moverIsBob = st.mover == GeoWinner::Bob;
        const Arc* fallback = nullptr;
        for (const auto* a : g.out_arcs(st.current)) {
            int h = solver->index.at(a->head);
            if (visited & (1ull << h)) continue;
            if (!fallback || a->label < fallback->label) fallback = a;
            if (!solver->mover_wins(h, visited | (1ull << h), !moverIsBob)) return a->label;
        }
        if (fallback) return fallback->label;
        throw std::logic_error("oracle asked to move with no unvisited out-neighbor");
    };
}

// DOT emission for visual inspection; nodes shaped by type, arcs labeled.
inline std::string to_dot(const GeoInstance& g) {
    std::map<NodeId, NodeType> types;
    if (validate_geo(g).valid) types = classify_nodes(g);
    std::ostringstream os;
    os << "digraph geography {\n";
    for (const auto& n : g.nodes) {
        std::string shape = "ellipse";
        std::string label = n;
        auto it = types.find(n);
        if (it != types.end()) {
            label += "\\n" + std::string(to_string(it->second));
            switch (it->second) {
                case NodeType::B01: shape = "doublecircle"; break;
                case NodeType::B11: case NodeType::B21: case NodeType::B12: shape = "box"; break;
                default: shape = "ellipse"; break;
            }
        }
        os << "  \"" << n << "\" [shape=" << shape << ", label=\"" << label << "\"];\n";
    }
    for (const auto& a : g.arcs)
        os << "  \"" << a.tail << "\" -> \"" << a.head << "\" [label=\"" << a.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace hypergames

#endif
