// dynq: incremental graph-query maintenance engine.
//
// Subcommands:
//   run    — replay a modification script against a maintained query
//   check  — randomized oracle-equivalence suites
//   bench  — per-modification latency, incremental vs recompute (CSV)

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dynq/cfl.hpp"
#include "dynq/checks.hpp"
#include "dynq/dist.hpp"
#include "dynq/rpq.hpp"
#include "dynq/tc.hpp"
#include "dynq/errors.hpp"
#include "dynq/oracle.hpp"
#include "dynq/script.hpp"
#include "dynq/sync.hpp"

namespace {

dynq::DistRegime parse_regime(const std::string& name) {
    if (name == "insert-only") return dynq::DistRegime::InsertOnly;
    if (name == "acyclic") return dynq::DistRegime::Acyclic;
    if (name == "undirected") return dynq::DistRegime::Undirected;
    throw dynq::ParseError("unknown regime '" + name + "'");
}

struct RunOptions {
    std::vector<std::string> graph_files;
    std::string script_file;
    std::string program;
    std::string dfa_file, grammar_file, sync_file, ecrpq_file, neps_file;
    std::string regime = "acyclic";
    int lmax = 0;
};

dynq::EngineConfig build_config(const RunOptions& opt) {
    dynq::EngineConfig config;
    config.program = opt.program;
    for (const auto& f : opt.graph_files) config.graphs.push_back(dynq::load_graph(f));
    if (!opt.dfa_file.empty()) config.dfa = dynq::load_dfa(opt.dfa_file);
    if (!opt.ecrpq_file.empty()) config.ecrpq = dynq::load_ecrpq(opt.ecrpq_file);
    if (!opt.neps_file.empty()) config.neps = dynq::load_neps(opt.neps_file);
    if (!opt.grammar_file.empty()) config.grammar = dynq::load_grammar(opt.grammar_file);
    if (!opt.sync_file.empty()) dynq::require_valid_sync(dynq::load_sync(opt.sync_file));
    config.lmax = opt.lmax;
    config.regime = parse_regime(opt.regime);
    return config;
}

int cmd_run(const RunOptions& opt) {
    auto config = build_config(opt);
    auto engine = dynq::make_engine(config);
    std::ifstream script(opt.script_file);
    if (!script) throw dynq::ParseError("cannot open script file " + opt.script_file);
    dynq::ScriptResult result = dynq::execute_script(*engine, script, std::cout);
    if (result.exit_code != 0) std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
}

int cmd_check(uint64_t seed, int trials, int max_nodes, const std::vector<std::string>& only) {
    dynq::CheckParams params{seed, trials, max_nodes};
    std::vector<std::string> suites = only.empty() ? dynq::suite_names() : only;
    int passed = 0, total = 0;
    for (const auto& name : suites) {
        dynq::SuiteResult r = dynq::run_suite(name, params);
        total += r.trials;
        passed += r.trials - r.failures;
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " " << (r.trials - r.failures)
                  << "/" << r.trials;
        if (!r.ok()) std::cout << "  " << r.detail;
        std::cout << "\n";
    }
    std::cout << (passed == total ? "OK " : "FAILED ") << passed << "/" << total << "\n";
    return passed == total ? 0 : 1;
}

// Latency comparison: replay random modifications through the
// maintained states and recompute the same answers from scratch.
int cmd_bench(uint64_t seed, int trials, int max_nodes) {
    using clock = std::chrono::steady_clock;
    std::cout << "program,trial,step,n,incremental_ns,recompute_ns\n";
    auto emit = [](const char* program, int trial, int step, int n, clock::duration inc,
                   clock::duration full) {
        std::cout << program << "," << trial << "," << step << "," << n << ","
                  << std::chrono::duration_cast<std::chrono::nanoseconds>(inc).count() << ","
                  << std::chrono::duration_cast<std::chrono::nanoseconds>(full).count()
                  << "\n";
    };
    const int n = std::max(3, max_nodes);
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + trial);
        auto next_dag_edge = [&](const dynq::LabeledGraph& g, dynq::Modification& m) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u >= v) continue;
                m = {dynq::ModKind::Insert, static_cast<int>(rng() % 2), u, v};
                return true;
            }
            (void)g;
            return false;
        };

        {  // tc
            dynq::LabeledGraph g(n, {"a", "b"}, true);
            dynq::TcState tc(n);
            for (int step = 0; step < 20; ++step) {
                dynq::Modification m{};
                if (!next_dag_edge(g, m)) break;
                auto t0 = clock::now();
                tc.apply(g, m);
                auto t1 = clock::now();
                g.apply(m);
                auto t2 = clock::now();
                auto fresh = dynq::oracle_reach(g);
                auto t3 = clock::now();
                (void)fresh;
                emit("tc", trial, step, n, t1 - t0, t3 - t2);
            }
        }
        {  // rpq
            dynq::Dfa dfa = dynq::compile_regex("(a|b)*a");
            dynq::LabeledGraph g(n, {"a", "b"}, true);
            dynq::RpqState state(dfa, n);
            for (int step = 0; step < 20; ++step) {
                int sym = static_cast<int>(rng() % 2);
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                auto t0 = clock::now();
                state.insert(g.symbol_name(sym), u, v);
                auto t1 = clock::now();
                g.apply({dynq::ModKind::Insert, sym, u, v});
                auto t2 = clock::now();
                auto fresh = dynq::oracle_rpq(g, dfa);
                auto t3 = clock::now();
                (void)fresh;
                emit("rpq", trial, step, n, t1 - t0, t3 - t2);
            }
        }
        {  // cfl
            dynq::LabeledGraph g(n, {"a", "b"}, true);
            dynq::CnfGrammar grammar =
                dynq::to_cnf_text("start S\nrule S -> a S b\nrule S -> eps\n");
            dynq::CflState state(grammar, n);
            for (int step = 0; step < 20; ++step) {
                dynq::Modification m{};
                if (!next_dag_edge(g, m)) break;
                if (g.has_edge(m.u, m.sym, m.v)) continue;
                auto t0 = clock::now();
                state.apply(g, m);
                auto t1 = clock::now();
                g.apply(m);
                auto t2 = clock::now();
                auto fresh = dynq::oracle_cfl(g, grammar);
                auto t3 = clock::now();
                (void)fresh;
                emit("cfl", trial, step, n, t1 - t0, t3 - t2);
            }
        }
        {  // dist-acyclic
            dynq::LabeledGraph g(n, {"a", "b"}, true);
            dynq::AcyDistState state(n);
            for (int step = 0; step < 20; ++step) {
                dynq::Modification m{};
                if (!next_dag_edge(g, m)) break;
                if (g.has_union_edge(m.u, m.v)) continue;
                auto t0 = clock::now();
                state.apply(g, m);
                auto t1 = clock::now();
                g.apply(m);
                auto t2 = clock::now();
                auto fresh = dynq::oracle_length_sets(g, n - 1);
                auto t3 = clock::now();
                (void)fresh;
                emit("dist-acyclic", trial, step, n, t1 - t0, t3 - t2);
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental graph-query maintenance engine"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "replay a modification script");
    run->add_option("--graph", run_opt.graph_files,
                    "graph file (repeatable for factors/copies)")
        ->required();
    run->add_option("--script", run_opt.script_file, "script file")->required();
    run->add_option("--program", run_opt.program, "query program")
        ->required()
        ->check(CLI::IsMember(dynq::program_names()));
    run->add_option("--dfa", run_opt.dfa_file, "DFA or regex file (rpq)");
    run->add_option("--grammar", run_opt.grammar_file, "grammar file (cfl)");
    run->add_option("--sync", run_opt.sync_file,
                    "sync-automaton file (loaded and padding-validated)");
    run->add_option("--ecrpq", run_opt.ecrpq_file, "ECRPQ query file (ecrpq, crpq)");
    run->add_option("--neps", run_opt.neps_file, "NEPS rule file (neps)");
    run->add_option("--lmax", run_opt.lmax, "length bound override (default n^2)");
    run->add_option("--regime", run_opt.regime, "factor regime for product/neps")
        ->check(CLI::IsMember({"insert-only", "acyclic", "undirected"}));

    uint64_t seed = 42;
    int trials = 50, max_nodes = 8;
    std::vector<std::string> only;
    auto* check = app.add_subcommand("check", "randomized oracle-equivalence suites");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--trials", trials, "trials per suite");
    check->add_option("--max-nodes", max_nodes, "node-count cap");
    check->add_option("--suite", only, "suite filter (repeatable)")
        ->check(CLI::IsMember(dynq::suite_names()));

    uint64_t bseed = 42;
    int btrials = 3, bnodes = 8;
    auto* bench = app.add_subcommand("bench", "incremental vs recompute latency (CSV)");
    bench->add_option("--seed", bseed, "random seed");
    bench->add_option("--trials", btrials, "benchmark trials");
    bench->add_option("--max-nodes", bnodes, "node count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (check->parsed()) return cmd_check(seed, trials, max_nodes, only);
        if (bench->parsed()) return cmd_bench(bseed, btrials, bnodes);
    } catch (const dynq::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
