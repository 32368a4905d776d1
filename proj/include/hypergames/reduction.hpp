#ifndef HYPERGAMES_REDUCTION_HPP
#define HYPERGAMES_REDUCTION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "geography.hpp"
#include "hypergraph.hpp"

namespace hypergames {

// Role-level gadget template. Tokens: "pa","qa",... name junction slots
// (slot letters a,b,c are bound to concrete arcs per node type); "za","zb",
// "zc" are interior roles named after the arc in the corresponding slot; all
// other tokens are plain interior roles.
struct GadgetSpec {
    NodeType type;
    int inArity;
    int outArity;
    std::vector<std::string> interiorRoles;                 // plain tokens
    std::vector<std::vector<std::string>> edgeTemplates;    // token sets
    // pairing families: key "" = the base pairing, otherwise the avoided
    // token; each family is a list of token pairs.
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> pairings;
};

inline const GadgetSpec& gadget_spec(NodeType t) {
    using P = std::pair<std::string, std::string>;
    static const auto specs = [] {
        std::map<NodeType, GadgetSpec> m;

        {
            GadgetSpec s{NodeType::B01, 0, 1, {"y1", "y2"}, {{"pa", "y1"}, {"qa", "y2"}}, {}};
            m[s.type] = s;
        }
        for (NodeType t : {NodeType::B11, NodeType::M11}) {
            GadgetSpec s{t, 1, 1,
                         {"x1", "y1", "y2", "y3"},
                         {{"pa", "qa", "x1", "y1"}, {"pa", "qa", "pb", "y2"}, {"x1", "pb", "qb", "y3"}},
                         {}};
            std::vector<P> base{{"pa", "qa"}, {"pb", "qb"}};
            s.pairings[""] = base;
            for (auto z : {"x1", "y1", "y2", "y3"}) s.pairings[z] = base;
            s.pairings["pa"] = {{"qa", "y2"}, {"pb", "qb"}, {"x1", "y1"}};
            s.pairings["qa"] = {{"pa", "y2"}, {"pb", "qb"}, {"x1", "y1"}};
            s.pairings["pb"] = s.pairings["qb"] = {{"pa", "qa"}, {"x1", "y3"}};
            m[s.type] = s;
        }
        {
            GadgetSpec s{NodeType::B21, 2, 1,
                         {"x1", "y1", "y2", "y3"},
                         {{"pa", "qa", "x1", "y1"},
                          {"pb", "qb", "x1", "y1"},
                          {"pa", "qa", "pc", "y2"},
                          {"pb", "qb", "pc", "y2"},
                          {"x1", "pc", "qc", "y3"}},
                         {}};
            std::vector<P> base{{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}};
            s.pairings[""] = base;
            for (auto z : {"x1", "y1", "y2", "y3"}) s.pairings[z] = base;
            s.pairings["pa"] = {{"qa", "y2"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y1"}};
            s.pairings["qa"] = {{"pa", "y2"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y1"}};
            s.pairings["pb"] = {{"pa", "qa"}, {"qb", "y2"}, {"pc", "qc"}, {"x1", "y1"}};
            s.pairings["qb"] = {{"pa", "qa"}, {"pb", "y2"}, {"pc", "qc"}, {"x1", "y1"}};
            s.pairings["pc"] = s.pairings["qc"] = {{"pa", "qa"}, {"pb", "qb"}, {"x1", "y3"}};
            m[s.type] = s;
        }
        {
            GadgetSpec s{NodeType::M21, 2, 1,
                         {"x1", "y1", "y2"},  // za, zb added per-arc
                         {{"pa", "qa", "x1", "za"},
                          {"pb", "qb", "x1", "zb"},
                          {"pa", "qa", "pc", "y1"},
                          {"pb", "qb", "pc", "y1"},
                          {"x1", "pc", "qc", "y2"}},
                         {}};
            std::vector<P> base{{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}};
            s.pairings[""] = base;
            for (auto z : {"x1", "y1", "y2", "za", "zb"}) s.pairings[z] = base;
            s.pairings["pa"] = {{"qa", "y1"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "za"}};
            s.pairings["qa"] = {{"pa", "y1"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "za"}};
            s.pairings["pb"] = {{"pa", "qa"}, {"qb", "y1"}, {"pc", "qc"}, {"x1", "zb"}};
            s.pairings["qb"] = {{"pa", "qa"}, {"pb", "y1"}, {"pc", "qc"}, {"x1", "zb"}};
            s.pairings["pc"] = s.pairings["qc"] = {{"pa", "qa"}, {"pb", "qb"}, {"x1", "y2"}};
            m[s.type] = s;
        }
        {
            GadgetSpec s{NodeType::B12, 1, 2,
                         {"x1", "x2", "x3", "y1", "y2", "y3", "y4", "y5"},
                         {{"pa", "qa", "x1", "y1"},
                          {"pa", "qa", "x2", "y2"},
                          {"x1", "x2", "y3", "y4"},
                          {"x1", "x3", "pb", "y3"},
                          {"x2", "x3", "pc", "y4"},
                          {"pb", "qb", "x3", "y5"},
                          {"pc", "qc", "x3", "y5"}},
                         {}};
            std::vector<P> base{{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "y4"}};
            s.pairings[""] = base;
            for (auto z : {"x3", "y1", "y2", "y5"}) s.pairings[z] = base;
            s.pairings["x1"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x3", "y3"}, {"x2", "y4"}};
            s.pairings["x2"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y3"}, {"x3", "y4"}};
            s.pairings["y3"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "x3"}, {"x2", "y4"}};
            s.pairings["y4"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "x3"}};
            s.pairings["pa"] = {{"qa", "y1"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "y2"}, {"x3", "y4"}};
            s.pairings["qa"] = {{"pa", "y1"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "y2"}, {"x3", "y4"}};
            s.pairings["pb"] = s.pairings["qb"] =
                {{"pa", "qa"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "y4"}, {"x3", "y5"}};
            s.pairings["pc"] = s.pairings["qc"] =
                {{"pa", "qa"}, {"pb", "qb"}, {"x1", "y3"}, {"x2", "y4"}, {"x3", "y5"}};
            m[s.type] = s;
        }
        {
            GadgetSpec s{NodeType::M12, 1, 2,
                         {"x1", "x2", "y1", "y2", "y3", "z1", "z2"},  // zb, zc added per-arc
                         {{"pa", "qa", "y1", "x1"},
                          {"pa", "qa", "y2", "x2"},
                          {"x1", "x2", "z1", "z2"},
                          {"x1", "z1", "pb", "y3"},
                          {"x2", "z2", "y3", "pc"},
                          {"z1", "pb", "qb", "zb"},
                          {"z2", "pc", "qc", "zc"}},
                         {}};
            std::vector<P> base{{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "z1"}, {"x2", "z2"}};
            s.pairings[""] = base;
            for (auto z : {"y1", "y2", "y3", "zb", "zc"}) s.pairings[z] = base;
            s.pairings["x1"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"y3", "z1"}, {"x2", "z2"}};
            s.pairings["x2"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "z1"}, {"y3", "z2"}};
            s.pairings["z1"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "z2"}};
            s.pairings["z2"] = {{"pa", "qa"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "z1"}, {"x2", "y3"}};
            s.pairings["pa"] = {{"qa", "y1"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "z1"}, {"x2", "y2"}, {"y3", "z2"}};
            s.pairings["qa"] = {{"pa", "y1"}, {"pb", "qb"}, {"pc", "qc"}, {"x1", "z1"}, {"x2", "y2"}, {"y3", "z2"}};
            // Last pair of the p_b/q_b family: reads as {z1,zb}, the only pair
            // covering {z1,pb,qb,zb} once pb/qb are excluded.
            s.pairings["pb"] = s.pairings["qb"] =
                {{"pa", "qa"}, {"pc", "qc"}, {"x1", "y3"}, {"x2", "z2"}, {"z1", "zb"}};
            s.pairings["pc"] = s.pairings["qc"] =
                {{"pa", "qa"}, {"pb", "qb"}, {"x1", "z1"}, {"x2", "y3"}, {"z2", "zc"}};
            m[s.type] = s;
        }
        return m;
    }();
    return specs.at(t);
}

// One node's gadget, instantiated over concrete vertex ids.
struct GadgetInstance {
    NodeId node;
    NodeType type;
    std::vector<ArcLabel> inArcs;   // lexicographic (slot order a, b)
    std::vector<ArcLabel> outArcs;  // lexicographic (slot order b, c / a for B01)
    std::map<std::string, Vertex> roles;  // token -> concrete vertex
    std::vector<Vertex> vertices;         // sorted, junction + interior
    std::vector<Edge> edges;              // canonical
    VertexSet interior;
    VertexSet inputVertices;              // junction vertices of in-arcs

    const Vertex& role(const std::string& token) const {
        auto it = roles.find(token);
        if (it == roles.end())
            throw std::invalid_argument("gadget " + node + " has no role " + token);
        return it->second;
    }
    bool has_vertex(const Vertex& v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    // Base pairing and per-avoided-vertex pairings, instantiated.
    Pairing basePairing;
    std::map<Vertex, Pairing> avoidPairing;
};

namespace detail {
// Binds slot letters to concrete arcs for a node type.
inline std::map<char, ArcLabel> slot_arcs(NodeType t, const std::vector<ArcLabel>& in,
                                          const std::vector<ArcLabel>& out) {
    switch (t) {
        case NodeType::B01: return {{'a', out[0]}};
        case NodeType::B11:
        case NodeType::M11: return {{'a', in[0]}, {'b', out[0]}};
        case NodeType::B21:
        case NodeType::M21: return {{'a', in[0]}, {'b', in[1]}, {'c', out[0]}};
        default: return {{'a', in[0]}, {'b', out[0]}, {'c', out[1]}};  // B12 / M12
    }
}
}  // namespace detail

// Instantiates a node's gadget. In/out arc lists must be in slot order
// (callers sort by label). Interior vertices are "<node>.<role>", junction
// vertices "<arc>.p"/"<arc>.q"; the arc-indexed z roles of M21/M12 become
// "<node>.z<arc>".
inline GadgetInstance gadget_instance(NodeType t, const NodeId& node,
                                      std::vector<ArcLabel> inArcs,
                                      std::vector<ArcLabel> outArcs) {
    const GadgetSpec& spec = gadget_spec(t);
    if ((int)inArcs.size() != spec.inArity || (int)outArcs.size() != spec.outArity)
        throw std::invalid_argument("arc count mismatch for gadget of " + node);

    GadgetInstance g;
    g.node = node;
    g.type = t;
    g.inArcs = inArcs;
    g.outArcs = outArcs;
    auto slots = detail::slot_arcs(t, inArcs, outArcs);

    auto resolve = [&](const std::string& token) -> Vertex {
        if (token.size() == 2 && (token[0] == 'p' || token[0] == 'q') && slots.count(token[1]))
            return slots.at(token[1]) + (token[0] == 'p' ? ".p" : ".q");
        if (token.size() == 2 && token[0] == 'z' && slots.count(token[1]) &&
            (t == NodeType::M21 || t == NodeType::M12))
            return node + ".z" + slots.at(token[1]);
        return node + "." + token;
    };

    std::set<std::string> tokens;
    for (const auto& e : spec.edgeTemplates)
        for (const auto& tok : e) tokens.insert(tok);
    std::set<Vertex> seen;
    for (const auto& tok : tokens) {
        Vertex v = resolve(tok);
        if (!seen.insert(v).second)
            throw std::invalid_argument("vertex name collision in gadget of " + node + ": " + v);
        g.roles[tok] = v;
        bool junction = tok.size() == 2 && (tok[0] == 'p' || tok[0] == 'q') && slots.count(tok[1]);
        if (!junction) g.interior.insert(v);
    }
    for (const auto& a : inArcs) {
        g.inputVertices.insert(a + ".p");
        g.inputVertices.insert(a + ".q");
    }
    for (const auto& [tok, v] : g.roles) g.vertices.push_back(v);
    std::sort(g.vertices.begin(), g.vertices.end());

    for (const auto& e : spec.edgeTemplates) {
        Edge edge;
        for (const auto& tok : e) edge.push_back(g.roles.at(tok));
        g.edges.push_back(make_edge(std::move(edge)));
    }
    g.edges = canonical_family(std::move(g.edges));

    auto instantiate = [&](const std::vector<std::pair<std::string, std::string>>& fam) {
        std::vector<Edge> pairs;
        for (const auto& [a, b] : fam) pairs.push_back({g.roles.at(a), g.roles.at(b)});
        return make_pairing(std::move(pairs));
    };
    if (spec.pairings.count("")) g.basePairing = instantiate(spec.pairings.at(""));
    for (const auto& [tok, fam] : spec.pairings) {
        if (tok.empty()) continue;
        g.avoidPairing[g.roles.at(tok)] = instantiate(fam);
    }
    return g;
}

enum class ReductionVariant { Rank4, MBUniform, MMUniform };

inline const char* to_string(ReductionVariant v) {
    switch (v) {
        case ReductionVariant::Rank4: return "rank4";
        case ReductionVariant::MBUniform: return "mbUniform";
        default: return "mmUniform";
    }
}

inline std::optional<ReductionVariant> variant_from_string(const std::string& s) {
    if (s == "rank4") return ReductionVariant::Rank4;
    if (s == "mbUniform" || s == "mb-uniform") return ReductionVariant::MBUniform;
    if (s == "mmUniform" || s == "mm-uniform") return ReductionVariant::MMUniform;
    return std::nullopt;
}

struct ReductionOutput {
    Hypergraph board;
    ReductionVariant variant = ReductionVariant::Rank4;
    std::map<ArcLabel, std::pair<Vertex, Vertex>> arcToJunction;
    std::map<NodeId, GadgetInstance> gadgets;
    std::map<NodeId, NodeType> types;
    GeoInstance instance;
    std::vector<Vertex> startUniformizers;  // the ten fresh vertices (mmUniform)

    const GadgetInstance& gadget(const NodeId& n) const { return gadgets.at(n); }
    // Partner of a junction vertex ("a.p" <-> "a.q"); empty for interior.
    Vertex twin(const Vertex& v) const {
        if (v.size() > 2 && v.compare(v.size() - 2, 2, ".p") == 0)
            return v.substr(0, v.size() - 1) + "q";
        if (v.size() > 2 && v.compare(v.size() - 2, 2, ".q") == 0)
            return v.substr(0, v.size() - 1) + "p";
        return {};
    }
    bool is_junction(const Vertex& v) const { return arcToJunction.count(junction_arc(v)) > 0; }
    ArcLabel junction_arc(const Vertex& v) const {
        if (v.size() > 2 && (v.compare(v.size() - 2, 2, ".p") == 0 ||
                             v.compare(v.size() - 2, 2, ".q") == 0)) {
            ArcLabel a = v.substr(0, v.size() - 2);
            if (arcToJunction.count(a)) return a;
        }
        return {};
    }
    // The unique gadget owning an interior vertex; empty NodeId if junction
    // or unknown.
    NodeId interior_owner(const Vertex& v) const {
        auto dot = v.find('.');
        if (dot == std::string::npos) return {};
        NodeId n = v.substr(0, dot);
        auto it = gadgets.find(n);
        if (it != gadgets.end() && it->second.interior.count(v)) return n;
        return {};
    }
};

// Compiles a validated Geography instance into the gadget hypergraph.
inline ReductionOutput reduce(const GeoInstance& inst, ReductionVariant variant) {
    auto val = validate_geo(inst);
    if (!val.valid) {
        std::string msg = "instance fails validation:";
        for (const auto& v : val.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    ReductionOutput out;
    out.variant = variant;
    out.instance = inst;
    out.types = classify_nodes(inst);

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (const auto& n : inst.nodes) {
        std::vector<ArcLabel> in, outA;
        for (const auto* a : inst.in_arcs(n)) in.push_back(a->label);
        for (const auto* a : inst.out_arcs(n)) outA.push_back(a->label);
        std::sort(in.begin(), in.end());
        std::sort(outA.begin(), outA.end());
        GadgetInstance g = gadget_instance(out.types.at(n), n, in, outA);
        for (const auto& v : g.vertices) vertices.push_back(v);
        for (const auto& e : g.edges) edges.push_back(e);
        out.gadgets.emplace(n, std::move(g));
    }
    for (const auto& a : inst.arcs) out.arcToJunction[a.label] = {a.label + ".p", a.label + ".q"};

    // Interior vertices must be globally unique; junction vertices appear in
    // exactly the two endpoint gadgets (deduplicated here).
    std::sort(vertices.begin(), vertices.end());
    {
        std::map<Vertex, int> mult;
        for (const auto& v : vertices) ++mult[v];
        for (const auto& [v, c] : mult) {
            bool junction = false;
            for (const auto& [lbl, pq] : out.arcToJunction)
                if (pq.first == v || pq.second == v) { junction = true; break; }
            if ((junction && c != 2) || (!junction && c != 1))
                throw std::logic_error("vertex multiplicity violation at " + v);
        }
    }

    if (variant == ReductionVariant::MMUniform) {
        // Replace the start gadget's two size-2 edges {pa,y1}, {qa,y2} by
        // twenty size-4 edges over ten fresh vertices: {pa,y1,zi,zj} for
        // 1<=i<j<=5 and {qa,y2,zi,zj} for 6<=i<j<=10.
        GadgetInstance& gs = out.gadgets.at(inst.start);
        const Vertex pa = gs.role("pa"), qa = gs.role("qa");
        const Vertex y1 = gs.role("y1"), y2 = gs.role("y2");
        std::vector<Vertex> z;
        for (int i = 1; i <= 10; ++i) z.push_back(inst.start + ".z" + std::to_string(i));
        out.startUniformizers = z;
        std::vector<Edge> fresh;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) fresh.push_back(make_edge({pa, y1, z[i], z[j]}));
        for (int i = 5; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j) fresh.push_back(make_edge({qa, y2, z[i], z[j]}));

        auto without = [&](std::vector<Edge> fam) {
            Edge e1 = make_edge({pa, y1}), e2 = make_edge({qa, y2});
            fam.erase(std::remove_if(fam.begin(), fam.end(),
                                     [&](const Edge& e) { return e == e1 || e == e2; }),
                      fam.end());
            return fam;
        };
        edges = without(std::move(edges));
        gs.edges = without(std::move(gs.edges));
        for (const auto& e : fresh) {
            edges.push_back(e);
            gs.edges.push_back(e);
        }
        gs.edges = canonical_family(std::move(gs.edges));
        for (const auto& v : z) {
            vertices.push_back(v);
            gs.vertices.push_back(v);
            gs.interior.insert(v);
        }
        std::sort(gs.vertices.begin(), gs.vertices.end());
        std::sort(vertices.begin(), vertices.end());
    }

    out.board = make_board(std::move(vertices), std::move(edges));
    if (variant == ReductionVariant::MBUniform) out.board = uniformize_mb(out.board, 4);
    return out;
}

}  // namespace hypergames

#endif
