// Command-line workbench: validate Geography instances, solve them, reduce
// them to hypergraph games, solve those, and verify the strategic claims.
//
// Exit codes: 0 pass/solve, 1 claim failure or negative verification,
// 2 input error, 3 budget exhaustion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypergames/budget.hpp"
#include "hypergames/geography.hpp"
#include "hypergames/hypergraph.hpp"
#include "hypergames/json_io.hpp"
#include "hypergames/reduction.hpp"
#include "hypergames/solvers.hpp"
#include "hypergames/strategies.hpp"

namespace {

using namespace hypergames;

constexpr int kExitPass = 0;
constexpr int kExitClaimFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void emit(const json& j, const std::string& outPath) {
    if (outPath.empty())
        std::cout << dump_stable(j);
    else
        write_text(outPath, dump_stable(j));
}

GeoInstance load_geo(const std::string& path) {
    try {
        return geo_from_json(read_json_file(path));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Hypergraph load_board(const std::string& path) {
    try {
        return hypergraph_from_json(read_json_file(path));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

GeoInstance load_valid_geo(const std::string& path) {
    GeoInstance g = load_geo(path);
    GeoValidation val = validate_geo(g);
    if (!val.valid) {
        std::ostringstream os;
        os << path << ": instance violates the restricted-class conditions:";
        for (const auto& v : val.violations) os << "\n  " << v;
        throw InputError(os.str());
    }
    return g;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_validate(const std::string& in) {
    GeoInstance g = load_geo(in);
    GeoValidation val = validate_geo(g);
    if (!val.valid) {
        std::cerr << "invalid instance:\n";
        for (const auto& v : val.violations) std::cerr << "  " << v << "\n";
        return kExitInput;
    }
    json j;
    j["valid"] = true;
    json types = json::object();
    for (const auto& [n, t] : classify_nodes(g)) types[n] = to_string(t);
    j["types"] = std::move(types);
    emit(j, "");
    return kExitPass;
}

int cmd_solve_geo(const std::string& in, std::uint64_t budget) {
    GeoInstance g = load_valid_geo(in);
    GeoSolveReport rep = solve_geo(g, budget);
    json j;
    j["winner"] = to_string(rep.winner);
    j["states"] = rep.states;
    j["principalLine"] = rep.principalLine;
    emit(j, "");
    return kExitPass;
}

int cmd_reduce(const std::string& in, const std::string& variantName, const std::string& out,
               const std::string& metaOut, const std::string& dotOut) {
    auto variant = variant_from_string(variantName);
    if (!variant) throw InputError("unknown variant: " + variantName);
    GeoInstance g = load_valid_geo(in);
    ReductionOutput r = reduce(g, *variant);
    emit(to_json(r.board), out);
    if (!metaOut.empty()) write_text(metaOut, dump_stable(reduction_meta_json(r)));
    if (!dotOut.empty()) write_text(dotOut, to_dot(g));
    return kExitPass;
}

int cmd_solve(const std::string& in, const std::string& convention, std::uint64_t budget,
              int workers) {
    Hypergraph board = load_board(in);
    SolveOptions opt;
    opt.budget = budget;
    opt.workers = workers;
    json j;
    j["convention"] = convention;
    if (convention == "mb") {
        MBSolveReport rep = solve_mb(board, opt);
        j["outcome"] = to_string(rep.outcome);
        j["nodes"] = rep.nodes;
        j["principalVariation"] = rep.principalVariation;
    } else if (convention == "mm") {
        MMSolveReport rep = solve_mm(board, opt);
        j["outcome"] = to_string(rep.outcome);
        j["nodes"] = rep.nodes;
        j["principalVariation"] = rep.principalVariation;
    } else {
        throw InputError("unknown convention: " + convention);
    }
    emit(j, "");
    return kExitPass;
}

int cmd_pair(const std::string& in, std::uint64_t budget) {
    Hypergraph board = load_board(in);
    PairingSearchResult res = find_pairing(board, budget);
    json j;
    j["nodes"] = res.nodes;
    j["complete"] = res.complete;
    if (res.pairing) {
        PairingCheck chk = check_pairing(board, *res.pairing);
        if (!chk.ok) throw std::logic_error("search returned a non-pairing: " + chk.reason);
        j["found"] = true;
        j["pairing"] = res.pairing->pairs;
        emit(j, "");
        return kExitPass;
    }
    j["found"] = false;
    emit(j, "");
    if (res.complete) return kExitClaimFail;  // proven: no pairing exists
    return kExitBudget;
}

struct VerifyRun {
    json claims = json::array();
    bool allPass = true;

    void add(const std::string& name, bool pass, const std::string& detail,
             const std::vector<Vertex>& counterexample = {}, std::uint64_t nodes = 0,
             std::uint64_t leaves = 0) {
        json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty()) c["detail"] = detail;
        if (!pass) c["counterexample"] = counterexample;
        if (nodes) c["nodes"] = nodes;
        if (leaves) c["leaves"] = leaves;
        claims.push_back(std::move(c));
        if (!pass) allPass = false;
    }
    void add(const std::string& name, const VerifyReport& rep) {
        std::string detail;
        for (const auto& f : rep.failures) {
            if (!detail.empty()) detail += "; ";
            detail += f;
        }
        add(name, rep.pass, detail, rep.counterexample, rep.nodes, rep.leaves);
    }
};

int cmd_verify(const std::string& in, const std::string& suite, std::uint64_t budget,
               int workers) {
    if (suite != "gadgets" && suite != "mb" && suite != "mm" && suite != "all")
        throw InputError("unknown suite: " + suite);
    auto t0 = std::chrono::steady_clock::now();
    VerifyRun run;

    if (suite == "gadgets" || suite == "all") {
        ClaimReport rep = check_gadget_claims();
        for (const auto& c : rep.checks) run.add("gadgets/" + c.name, c.pass, c.detail);
    }

    if (suite == "mb" || suite == "mm" || suite == "all") {
        GeoInstance g = load_valid_geo(in);
        GeoSolveReport geo = solve_geo(g, budget);
        run.add("geography-winner", true, to_string(geo.winner));
        ReductionOutput rank4 = reduce(g, ReductionVariant::Rank4);
        GeoOracle oracle = make_optimal_oracle(g, budget);

        if (suite == "mb" || suite == "all") {
            Player side = geo.winner == GeoWinner::Alice ? Player::Maker : Player::Breaker;
            VerifyReport rep = verify_mb_strategy(rank4, side, oracle, budget);
            run.add(std::string("mb-strategy/") +
                        (side == Player::Maker ? "maker" : "breaker"),
                    rep);
            // Desk-scale outcome equivalence against the exact solver.
            SolveOptions opt;
            opt.budget = budget;
            opt.workers = workers;
            MBSolveReport mb = solve_mb(rank4.board, opt);
            bool agree = (mb.outcome == MBOutcome::MakerWin) == (geo.winner == GeoWinner::Alice);
            run.add("mb-outcome-equivalence", agree,
                    std::string(to_string(geo.winner)) + " vs " + to_string(mb.outcome),
                    mb.principalVariation, mb.nodes);
        }

        if (suite == "mm" || suite == "all") {
            VerifyReport rep = verify_mm_claims(rank4, budget);
            run.add("mm-claims", rep);
            ReductionOutput uni = reduce(g, ReductionVariant::MMUniform);
            run.add("mm-uniform-opening", verify_mm_uniform_opening(uni, rank4));
            SolveOptions opt;
            opt.budget = budget;
            opt.workers = workers;
            MMSolveReport mm = solve_mm(rank4.board, opt);
            bool agree = geo.winner == GeoWinner::Alice ? mm.outcome == MMOutcome::FPWin
                                                        : mm.outcome == MMOutcome::Draw;
            run.add("mm-outcome-equivalence", agree,
                    std::string(to_string(geo.winner)) + " vs " + to_string(mm.outcome),
                    mm.principalVariation, mm.nodes);
        }
    }

    json j;
    j["suite"] = suite;
    j["pass"] = run.allPass;
    j["claims"] = std::move(run.claims);
    j["wallClockMs"] = ms_since(t0);
    emit(j, "");
    return run.allPass ? kExitPass : kExitClaimFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for Geography reductions and positional games"};
    app.require_subcommand(1);

    int workers = 1;
    app.add_option("--workers", workers, "Worker threads for exact solving")
        ->default_val(1)
        ->check(CLI::PositiveNumber);

    std::string in, out, metaOut, dotOut, variant = "rank4", convention, suite = "all";
    std::uint64_t budget = 200'000'000;

    auto* validate = app.add_subcommand("validate", "Check a Geography instance");
    validate->add_option("-i,--input", in)->required();

    auto* solveGeo = app.add_subcommand("solve-geo", "Solve a Geography instance exactly");
    solveGeo->add_option("-i,--input", in)->required();
    solveGeo->add_option("--budget", budget);

    auto* reduceCmd = app.add_subcommand("reduce", "Reduce Geography to a hypergraph game");
    reduceCmd->add_option("-i,--input", in)->required();
    reduceCmd->add_option("--variant", variant)
        ->check(CLI::IsMember({"rank4", "mb-uniform", "mm-uniform"}));
    reduceCmd->add_option("-o,--output", out);
    reduceCmd->add_option("--meta", metaOut);
    reduceCmd->add_option("--dot", dotOut);

    auto* solve = app.add_subcommand("solve", "Solve a hypergraph game exactly");
    solve->add_option("-i,--input", in)->required();
    solve->add_option("--convention", convention)
        ->required()
        ->check(CLI::IsMember({"mb", "mm"}));
    solve->add_option("--budget", budget);

    auto* verify = app.add_subcommand("verify", "Verify strategic claims on an instance");
    verify->add_option("-i,--input", in);
    verify->add_option("--suite", suite)->check(CLI::IsMember({"gadgets", "mb", "mm", "all"}));
    verify->add_option("--budget", budget);

    auto* pair = app.add_subcommand("pair", "Search for a pairing of a hypergraph");
    pair->add_option("-i,--input", in)->required();
    pair->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(in);
        if (solveGeo->parsed()) return cmd_solve_geo(in, budget);
        if (reduceCmd->parsed()) return cmd_reduce(in, variant, out, metaOut, dotOut);
        if (solve->parsed()) return cmd_solve(in, convention, budget, workers);
        if (verify->parsed()) {
            if (in.empty() && suite != "gadgets")
                throw InputError("--input is required for suite " + suite);
            return cmd_verify(in, suite, budget, workers);
        }
        if (pair->parsed()) return cmd_pair(in, budget);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hypergames::BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
