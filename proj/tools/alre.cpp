// Command-line front end: parse instances, dispatch solvers, verify witness
// sequences, run hardness constructions and the neighborhood-diversity / ILP
// exports, plus the built-in property selftest.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "alre/easy.hpp"
#include "alre/fpt.hpp"
#include "alre/io.hpp"
#include "alre/nd.hpp"
#include "alre/oracle.hpp"
#include "alre/reductions.hpp"
#include "alre/selftest.hpp"

namespace {

using namespace alre;

constexpr int exit_reachable = 0;
constexpr int exit_unreachable = 1;
constexpr int exit_malformed = 2;
constexpr int exit_resource = 3;
constexpr int exit_internal = 4;

struct SolveReport {
    Outcome outcome;
    std::string solver;
};

bool easy_applies(const Instance& inst) {
    if (!inst.variant.independent) return false;
    if (inst.variant.global) return true;
    return inst.rule.kind == MoveKind::ts;
}

SolveReport dispatch_easy(const Instance& inst) {
    if (!inst.variant.independent)
        throw misuse_error("easy solver: only independent offensive variants are supported");
    if (inst.variant.global) return {solve_gidp_oa(inst), "easy-gidp-oa"};
    if (inst.rule.kind != MoveKind::ts)
        throw misuse_error("easy solver: independent non-global needs rule ts");
    return {solve_idp_oa_ts(inst), "easy-idp-oa-ts"};
}

SolveReport dispatch_fpt(const Instance& inst, std::optional<long> bound) {
    if (inst.variant.base == AllianceBase::powerful) return {solve_pa_k(inst), "fpt-pa-k"};
    if (inst.variant.global && inst.variant.base == AllianceBase::offensive &&
        !inst.variant.independent)
        return {solve_goa_k(inst), "fpt-goa-k"};
    if (inst.variant.global && inst.variant.base == AllianceBase::defensive)
        return {solve_gda_k(inst), "fpt-gda-k"};
    std::optional<long> ell = bound ? bound : inst.move_bound;
    if (inst.rule.kind == MoveKind::ts) {
        if (!ell) throw misuse_error("fpt solver: token sliding needs a move bound (--max-moves)");
        return {solve_ts_budgeted(inst, *ell), "fpt-ts-budgeted"};
    }
    Variant plain_def{AllianceBase::defensive, false, false};
    if (inst.variant == plain_def && ell) {
        if (inst.rule.kind == MoveKind::tar)
            return {solve_da_tar_pruned(inst, *ell), "fpt-da-tar-pruned"};
        return {solve_da_tj_pruned(inst, *ell), "fpt-da-tj-pruned"};
    }
    throw misuse_error("fpt solver: no parameterized algorithm for variant '" +
                       inst.variant.to_string() + "' under rule '" + inst.rule.to_string() +
                       "' (offensive jumping without a bound is open)");
}

SolveReport dispatch(const Instance& inst, const std::string& solver, std::optional<long> bound,
                     const SearchLimits& limits) {
    if (solver == "oracle") return {solve_exact(inst, limits), "oracle"};
    if (solver == "easy") return dispatch_easy(inst);
    if (solver == "fpt") return dispatch_fpt(inst, bound);
    if (solver == "nd") {
        std::optional<long> ell = bound ? bound : inst.move_bound;
        if (ell) return {solve_nd_ell(inst, *ell, limits), "nd-ell"};
        return {solve_nd_k(inst, limits), "nd-k"};
    }
    if (solver != "auto") throw misuse_error("unknown solver '" + solver + "'");
    if (easy_applies(inst)) return dispatch_easy(inst);
    std::optional<long> ell = bound ? bound : inst.move_bound;
    if (inst.variant.base == AllianceBase::powerful || inst.variant.global)
        return dispatch_fpt(inst, bound);
    Variant plain_def{AllianceBase::defensive, false, false};
    if (inst.variant == plain_def && ell && inst.rule.kind != MoveKind::ts)
        return dispatch_fpt(inst, bound);
    if (inst.rule.kind == MoveKind::ts && ell) return dispatch_fpt(inst, bound);
    if (inst.variant.base == AllianceBase::offensive &&
        !(y_set(inst.graph, inst.start) == y_set(inst.graph, inst.target))) {
        // offensive jumping/addition has no parameterized algorithm, but
        // distinct Y-sets settle the instance without any search
        inst.validate();
        return {Outcome{}, "oracle-y-exit"};
    }
    if (nd_partition(inst.graph).count() <= 5 && inst.graph.vertex_count() > 8) {
        if (ell) return {solve_nd_ell(inst, *ell, limits), "nd-ell"};
        return {solve_nd_k(inst, limits), "nd-k"};
    }
    return {solve_exact(inst, limits), "oracle"};
}

int cmd_solve(const std::string& input, const std::string& solver, std::optional<long> max_moves,
              const std::string& emit, bool json_out, std::uint64_t state_budget) {
    Instance inst = parse_instance(read_file(input));
    if (max_moves) {
        if (!inst.move_bound || *max_moves < *inst.move_bound) inst.move_bound = *max_moves;
    }
    SearchLimits limits;
    limits.state_budget = state_budget;
    SolveReport rep = dispatch(inst, solver, max_moves, limits);
    const Outcome& out = rep.outcome;
    if (json_out) {
        nlohmann::ordered_json j;
        j["verdict"] = out.reachable ? "reachable" : "unreachable";
        j["moves"] = out.reachable ? nlohmann::json(*out.min_moves) : nlohmann::json(nullptr);
        j["config_count"] =
            out.reachable ? nlohmann::json(*out.min_moves + 1) : nlohmann::json(nullptr);
        j["solver"] = rep.solver;
        j["budget_used"] = out.stats.visited;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (out.reachable ? "reachable" : "unreachable") << "\n";
        if (out.reachable) {
            std::cout << "moves: " << *out.min_moves << "\n";
            std::cout << "configurations: " << (*out.min_moves + 1) << "\n";
        }
        std::cout << "solver: " << rep.solver << "\n";
        std::cout << "budget-used: " << out.stats.visited << "\n";
    }
    if (!emit.empty()) {
        if (!out.witness) throw misuse_error("no witness to emit (instance unreachable)");
        write_file(emit, format_sequence(*out.witness));
    }
    return out.reachable ? exit_reachable : exit_unreachable;
}

int cmd_verify(const std::string& input, const std::string& seq_path, bool json_out) {
    Instance inst = parse_instance(read_file(input));
    Sequence seq = parse_sequence(read_file(seq_path), inst.graph.vertex_count());
    auto violation = validate_sequence(inst, seq);
    if (json_out) {
        nlohmann::ordered_json j;
        j["valid"] = !violation.has_value();
        if (violation) {
            j["index"] = violation->index;
            j["reason"] = to_string(violation->reason);
        } else {
            j["moves"] = seq.moves();
        }
        std::cout << j.dump(2) << "\n";
    } else if (violation) {
        std::cout << "invalid: " << to_string(violation->reason) << " at configuration "
                  << violation->index << "\n";
    } else {
        std::cout << "valid: " << seq.moves() << " moves, " << seq.configs.size()
                  << " configurations\n";
    }
    return violation ? exit_unreachable : exit_reachable;
}

int cmd_reduce(const std::string& target, const std::string& input, const std::string& output) {
    ReductionSpec spec = ReductionSpec::parse(target);
    DsInstance seed = parse_ds_instance(read_file(input));
    ReducedInstance red = reduce(spec, seed);
    write_file(output, format_instance(red.instance));
    std::cout << "reduced: " << red.instance.graph.vertex_count() << " vertices, "
              << red.instance.graph.edge_count() << " edges, variant "
              << red.instance.variant.to_string() << ", rule " << red.instance.rule.to_string()
              << "\n";
    return exit_reachable;
}

int cmd_nd(const std::string& input, bool partition, const std::string& ilp_out, long steps,
           const std::string& mode) {
    Instance inst = parse_instance(read_file(input));
    NdPartition p = nd_partition(inst.graph);
    if (partition) {
        std::cout << "nd: " << p.count() << "\n";
        for (int c = 0; c < p.count(); ++c) {
            std::cout << "class " << (c + 1) << (p.clique_flag[c] ? " (clique):" : " (independent):");
            for (int v : p.classes[c]) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    if (!ilp_out.empty()) {
        IlpMode m = mode == "literal" ? IlpMode::literal : IlpMode::validated;
        if (mode != "literal" && mode != "validated")
            throw misuse_error("nd: --mode must be literal or validated");
        IlpModel model = encode_ilp(inst, steps, m);
        write_file(ilp_out, export_lp(model));
        std::cout << "ilp: " << model.vars.size() << " variables, " << model.cons.size()
                  << " constraints";
        for (const auto& note : model.notes) std::cout << "\n  note: " << note;
        std::cout << "\n";
    }
    return exit_reachable;
}

int cmd_transform(const std::string& input, const std::string& seq_path, bool to_tar, bool to_tj,
                  const std::string& out_path) {
    if (to_tar == to_tj)
        throw misuse_error("transform: pass exactly one of --tj-to-tar / --tar-to-tj");
    Instance inst = parse_instance(read_file(input));
    Sequence seq = parse_sequence(read_file(seq_path), inst.graph.vertex_count());
    Sequence result;
    if (inst.variant.independent) {
        result = idp_oa_tar_tj_bridge(inst.graph, seq,
                                      to_tar ? BridgeDirection::tj_to_tar
                                             : BridgeDirection::tar_to_tj);
    } else if (to_tar) {
        result = tj_to_tar(inst.graph, inst.variant, seq);
    } else {
        int k = seq.configs.empty() ? 0 : seq.configs.front().count();
        result = tar_to_tj(inst.graph, inst.variant, k, seq);
    }
    std::string text = format_sequence(result);
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    return exit_reachable;
}

int cmd_selftest(int max_n) {
    selftest::Options opt;
    opt.max_n = max_n;
    auto failures = selftest::run_all(opt);
    if (failures.empty()) {
        std::cout << "selftest: all property sweeps passed (max-n " << max_n << ")\n";
        return exit_reachable;
    }
    for (const auto& f : failures) std::cerr << "selftest: " << f << "\n";
    std::cerr << "selftest: " << failures.size() << " violation(s)\n";
    return exit_unreachable;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alliance reconfiguration toolkit"};
    app.require_subcommand(1);

    std::string input, solver = "auto", emit, seq_path, target, output, ilp_out, mode = "validated";
    std::optional<long> max_moves;
    bool json_out = false, partition = false, to_tar = false, to_tj = false;
    long steps = 2;
    int max_n = 5;
    std::uint64_t state_budget = 10'000'000;

    auto* solve = app.add_subcommand("solve", "decide reachability and emit a witness");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--solver", solver, "auto|oracle|fpt|easy|nd");
    solve->add_option("--max-moves", max_moves, "move budget");
    solve->add_option("--emit-sequence", emit, "write the witness sequence here");
    solve->add_option("--state-budget", state_budget, "search state budget (default 1e7)");
    solve->add_flag("--json", json_out, "machine-readable report");

    auto* verify = app.add_subcommand("verify", "check a witness sequence");
    verify->add_option("--input", input, "instance file")->required();
    verify->add_option("--sequence", seq_path, "sequence file")->required();
    verify->add_flag("--json", json_out, "machine-readable report");

    auto* red = app.add_subcommand("reduce", "build a hardness-construction instance");
    red->add_option("--target", target,
                    "da-ts|oa-ts|da-tj|oa-tj|g-oa-tj-bip|g-oa-chordal|idp-oa-tj|pa-tj|g-pa-tj")
        ->required();
    red->add_option("--input", input, "dominating-set instance file")->required();
    red->add_option("--output", output, "write the alliance instance here")->required();

    auto* nd = app.add_subcommand("nd", "neighborhood-diversity partition and ILP export");
    nd->add_option("--input", input, "instance file")->required();
    nd->add_flag("--partition", partition, "print the type partition");
    nd->add_option("--ilp-out", ilp_out, "write the LP-format model here");
    nd->add_option("--steps", steps, "configuration count for the model");
    nd->add_option("--mode", mode, "literal|validated");

    auto* tr = app.add_subcommand("transform", "convert witnesses between jump and add/remove");
    tr->add_option("--input", input, "instance file (for graph and variant)")->required();
    tr->add_option("--sequence", seq_path, "sequence file")->required();
    tr->add_flag("--tj-to-tar", to_tar, "jumps to additions/removals");
    tr->add_flag("--tar-to-tj", to_tj, "additions/removals to jumps");
    tr->add_option("--out", output, "output file (stdout when omitted)");

    auto* st = app.add_subcommand("selftest", "run the built-in property sweep");
    st->add_option("--max-n", max_n, "largest sweep graph size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return exit_malformed;
    }

    try {
        if (solve->parsed())
            return cmd_solve(input, solver, max_moves, emit, json_out, state_budget);
        if (verify->parsed()) return cmd_verify(input, seq_path, json_out);
        if (red->parsed()) return cmd_reduce(target, input, output);
        if (nd->parsed()) return cmd_nd(input, partition, ilp_out, steps, mode);
        if (tr->parsed()) return cmd_transform(input, seq_path, to_tar, to_tj, output);
        if (st->parsed()) return cmd_selftest(max_n);
    } catch (const malformed_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_malformed;
    } catch (const misuse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_malformed;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_malformed;
}
