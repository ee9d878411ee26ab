#include "dynq/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dynq/cfl.hpp"
#include "dynq/ecrpq.hpp"
#include "dynq/errors.hpp"
#include "dynq/oracle.hpp"
#include "dynq/prod.hpp"
#include "dynq/rpq.hpp"
#include "dynq/script.hpp"
#include "dynq/tc.hpp"

namespace dynq {

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    int below(int k) { return k <= 1 ? 0 : static_cast<int>(gen() % k); }
    bool chance(int percent) { return below(100) < percent; }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<int>(v.size()))];
    }
};

std::vector<std::string> letters(int k) {
    static const std::vector<std::string> all = {"a", "b", "c", "d"};
    return {all.begin(), all.begin() + k};
}

std::string show_pairs(const std::set<std::pair<int, int>>& s) {
    std::ostringstream os;
    for (auto [x, y] : s) os << "(" << x << "," << y << ") ";
    return os.str();
}

SuiteResult make_result(const std::string& name) {
    SuiteResult r;
    r.name = name;
    return r;
}

std::set<std::pair<int, int>> matrix_pairs(const BitMatrix& m) {
    std::set<std::pair<int, int>> out;
    for (auto [x, y] : m.pairs()) out.insert({x, y});
    return out;
}

/// Random modification against the current graph; when `acyclic` the
/// proposal is screened with a reachability oracle, and with small
/// probability a cycle-forming insert is returned anyway together with
/// expect_reject = true so callers can exercise the error path.
struct ModPlan {
    Modification mod;
    bool expect_reject = false;
};

ModPlan propose_mod(Rng& rng, const LabeledGraph& g, bool allow_delete, bool acyclic) {
    const int n = g.n();
    std::vector<std::tuple<int, int, int>> present(g.edges().begin(), g.edges().end());
    for (int attempt = 0; attempt < 200; ++attempt) {
        bool do_delete = allow_delete && !present.empty() && rng.chance(40);
        if (do_delete) {
            auto [u, s, v] = rng.pick(present);
            return {Modification{ModKind::Delete, s, u, v}, false};
        }
        Modification m{ModKind::Insert, rng.below(g.alphabet_size()), rng.below(n),
                       rng.below(n)};
        if (acyclic) {
            BitMatrix reach = oracle_reach(g);
            bool closes_cycle = m.u == m.v || reach.test(m.v, m.u);
            if (closes_cycle) {
                if (rng.chance(25)) return {m, !g.has_union_edge(m.u, m.v)};
                continue;
            }
        }
        return {m, false};
    }
    if (!present.empty()) {
        auto [u, s, v] = present[0];
        return {Modification{ModKind::Delete, s, u, v}, false};
    }
    return {Modification{ModKind::Insert, 0, 0, 0}, acyclic};
}

// -----------------------------------------------------------------------
// graphstore: acyclic transitive closure

SuiteResult suite_tc(const CheckParams& p) {
    SuiteResult r = make_result("tc");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed + trial);
        int n = 2 + rng.below(std::max(1, p.max_nodes - 1));
        LabeledGraph g(n, letters(1), true);
        TcState tc(n);
        int mods = 10 + rng.below(31);
        for (int step = 0; step < mods; ++step) {
            ModPlan plan = propose_mod(rng, g, true, true);
            if (plan.expect_reject) {
                TcState before = tc;
                bool threw = false;
                try {
                    tc.apply(g, plan.mod);
                } catch (const CycleWouldForm&) {
                    threw = true;
                }
                if (!threw || !(before.relation() == tc.relation())) {
                    ++r.failures;
                    r.detail = "cycle guard failed to reject and roll back";
                    return r;
                }
                continue;
            }
            tc.apply(g, plan.mod);
            g.apply(plan.mod);
            if (!(tc.relation() == oracle_reach(g))) {
                ++r.failures;
                r.detail = "T diverged from oracle_reach at trial " + std::to_string(trial) +
                           " step " + std::to_string(step);
                return r;
            }
        }
    }
    return r;
}

// -----------------------------------------------------------------------
// dynrpq

Dfa random_dfa(Rng& rng, int max_states, int max_syms) {
    int states = 1 + rng.below(max_states);
    int k = 1 + rng.below(max_syms);
    auto alphabet = letters(k);
    std::map<std::pair<int, std::string>, int> trans;
    for (int q = 0; q < states; ++q)
        for (const auto& s : alphabet)
            if (rng.chance(85)) trans[{q, s}] = rng.below(states);
    std::set<int> finals;
    for (int q = 0; q < states; ++q)
        if (rng.chance(40)) finals.insert(q);
    return Dfa(states, alphabet, trans, rng.below(states), finals);
}

SuiteResult suite_rpq(const CheckParams& p) {
    SuiteResult r = make_result("rpq");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 31 + trial);
        int n = 2 + rng.below(std::max(1, p.max_nodes - 1));
        Dfa dfa = random_dfa(rng, 5, 3);
        LabeledGraph g(n, dfa.alphabet(), true);
        RpqState state(dfa, n);
        int mods = 5 + rng.below(26);
        for (int step = 0; step < mods; ++step) {
            Modification m{ModKind::Insert, rng.below(g.alphabet_size()), rng.below(n),
                           rng.below(n)};
            state.insert(g.symbol_name(m.sym), m.u, m.v);
            g.apply(m);
            if (matrix_pairs(state.query()) != oracle_rpq(g, dfa)) {
                ++r.failures;
                r.detail = "rpq_query diverged from oracle_rpq at trial " +
                           std::to_string(trial) + " step " + std::to_string(step);
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_rpq_locality(const CheckParams& p) {
    SuiteResult r = make_result("rpq-locality");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 77 + trial);
        int n = 4 + rng.below(std::max(1, p.max_nodes - 3));
        Dfa dfa = random_dfa(rng, 4, 2);
        const int Q = dfa.num_states();
        int x = rng.below(n), y = rng.below(n), u = rng.below(n), v = rng.below(n);
        std::set<int> window{x, y, u, v};

        RpqState s1(dfa, n), s2(dfa, n);
        for (int a = 0; a < Q; ++a)
            for (int b = 0; b < Q; ++b)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        bool bit = rng.chance(50);
                        s1.inject_pair(a, b, i, j, bit);
                        bool inside = window.count(i) && window.count(j);
                        s2.inject_pair(a, b, i, j, inside ? bit : rng.chance(50));
                    }
        const std::string sym =
            dfa.alphabet()[rng.below(static_cast<int>(dfa.alphabet().size()))];
        s1.insert(sym, u, v);
        s2.insert(sym, u, v);
        for (int a = 0; a < Q; ++a)
            for (int b = 0; b < Q; ++b)
                if (s1.pair(a, b, x, y) != s2.pair(a, b, x, y)) {
                    ++r.failures;
                    r.detail = "update of (x,y) depended on pairs outside {x,y,u,v}";
                    return r;
                }
    }
    return r;
}

// -----------------------------------------------------------------------
// dyncfl

CnfGrammar dyck1_grammar() {
    // Dyck-1 over a = open, b = close.
    return to_cnf_text(
        "start S\n"
        "rule S -> S S\n"
        "rule S -> a S b\n"
        "rule S -> a b\n"
        "rule S -> eps\n");
}

CnfGrammar anbn_grammar() {
    return to_cnf_text(
        "start S\n"
        "rule S -> a S b\n"
        "rule S -> eps\n");
}

CnfGrammar random_cnf(Rng& rng) {
    int vars = 2 + rng.below(5);  // <= 6 variables
    CnfGrammar g;
    g.num_variables = vars;
    g.start = 0;
    g.start_to_eps = rng.chance(40);
    for (int v = 0; v < vars; ++v) g.variable_names.push_back("V" + std::to_string(v));
    // The start symbol stays off right-hand sides so S -> eps is legal.
    auto nonstart = [&] { return 1 + rng.below(std::max(1, vars - 1)); };
    int nbin = 1 + rng.below(2 * vars);
    for (int i = 0; i < nbin; ++i) g.binary.push_back({rng.below(vars), nonstart(), nonstart()});
    auto alphabet = letters(2);
    int nterm = 1 + rng.below(vars + 2);
    for (int i = 0; i < nterm; ++i)
        g.terminal.push_back({rng.below(vars), alphabet[rng.below(2)]});
    return g;
}

SuiteResult suite_cfl(const CheckParams& p) {
    SuiteResult r = make_result("cfl");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 131 + trial);
        CnfGrammar grammar;
        switch (trial % 3) {
            case 0: grammar = dyck1_grammar(); break;
            case 1: grammar = anbn_grammar(); break;
            default: grammar = random_cnf(rng); break;
        }
        int n = 2 + rng.below(std::max(1, std::min(p.max_nodes, 8) - 1));
        LabeledGraph g(n, letters(2), true);
        CflState state(grammar, n);
        int mods = 5 + rng.below(21);
        for (int step = 0; step < mods; ++step) {
            ModPlan plan = propose_mod(rng, g, true, true);
            if (plan.expect_reject) {
                bool threw = false;
                try {
                    state.apply(g, plan.mod);
                } catch (const CycleWouldForm&) {
                    threw = true;
                }
                if (!threw) {
                    ++r.failures;
                    r.detail = "cfl cycle guard failed";
                    return r;
                }
                continue;
            }
            state.apply(g, plan.mod);
            g.apply(plan.mod);
            if (matrix_pairs(state.query()) != oracle_cfl(g, grammar)) {
                ++r.failures;
                r.detail = "cfl_query diverged from oracle_cfl at trial " +
                           std::to_string(trial) + " step " + std::to_string(step) +
                           " (grammar kind " + std::to_string(trial % 3) + ")";
                return r;
            }
            if (!(state.tc().relation() == oracle_reach(g))) {
                ++r.failures;
                r.detail = "cfl T diverged from oracle_reach";
                return r;
            }
        }
    }
    return r;
}

/// Defining-semantics check of one stored tuple: some pair of path
/// labels (s1, s2) between its endpoints with X =>* s1 Y s2.
bool cfl_tuple_realizable(
    const CnfGrammar& gr, int X, int Y, const std::vector<int>& t,
    const std::vector<std::tuple<int, int, std::vector<std::string>>>& paths) {
    std::vector<const std::vector<std::string>*> left, right;
    for (const auto& [a, b, w] : paths) {
        if (a == t[0] && b == t[1]) left.push_back(&w);
        if (a == t[2] && b == t[3]) right.push_back(&w);
    }
    for (const auto* s1 : left)
        for (const auto* s2 : right) {
            std::vector<CnfGrammar::Token> toks;
            for (const auto& c : *s1) toks.push_back({false, -1, c});
            toks.push_back({true, Y, ""});
            for (const auto& c : *s2) toks.push_back({false, -1, c});
            if (gr.derives_sentential(X, toks)) return true;
        }
    return false;
}

SuiteResult suite_cfl_soundness(const CheckParams& p) {
    SuiteResult r = make_result("cfl-soundness");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 733 + trial);
        CnfGrammar grammar = trial % 2 ? dyck1_grammar() : random_cnf(rng);
        int n = 2 + rng.below(4);  // kept small: the check enumerates paths
        LabeledGraph g(n, letters(2), true);
        CflState state(grammar, n);
        int mods = 4 + rng.below(8);
        for (int step = 0; step < mods; ++step) {
            ModPlan plan = propose_mod(rng, g, true, true);
            if (plan.expect_reject) continue;
            state.apply(g, plan.mod);
            g.apply(plan.mod);
        }
        auto paths = oracle_dag_path_labels(g);
        for (int X = 0; X < grammar.num_variables; ++X)
            for (int Y = 0; Y < grammar.num_variables; ++Y) {
                bool bad = false;
                state.relation(X, Y).for_each_tuple([&](int a, int b, int c, int d) {
                    if (bad) return;
                    if (!cfl_tuple_realizable(grammar, X, Y, {a, b, c, d}, paths)) bad = true;
                });
                if (bad) {
                    ++r.failures;
                    r.detail = "stored CFL tuple violates its defining semantics (trial " +
                               std::to_string(trial) + ")";
                    return r;
                }
            }
    }
    return r;
}

// -----------------------------------------------------------------------
// dyndist

SuiteResult suite_dist_ins(const CheckParams& p) {
    SuiteResult r = make_result("dist-ins");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 311 + trial);
        int n = 2 + rng.below(std::max(1, std::min(p.max_nodes, 8) - 1));
        int lmax = 6 + rng.below(15);  // <= 20
        LabeledGraph g(n, letters(1), true);
        InsDistState state(n, lmax);
        int mods = 4 + rng.below(15);
        for (int step = 0; step < mods; ++step) {
            int u = rng.below(n), v = rng.below(n);
            if (!g.has_union_edge(u, v)) state.insert(u, v);
            g.apply({ModKind::Insert, 0, u, v});
            if (state.length_triples() != oracle_length_sets(g, lmax)) {
                ++r.failures;
                r.detail = "insdist diverged from oracle_length_sets at trial " +
                           std::to_string(trial);
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_dist_acyclic(const CheckParams& p) {
    SuiteResult r = make_result("dist-acyclic");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 313 + trial);
        int n = 2 + rng.below(std::max(1, std::min(p.max_nodes, 8) - 1));
        LabeledGraph g(n, letters(1), true);
        AcyDistState state(n);
        int mods = 8 + rng.below(23);
        for (int step = 0; step < mods; ++step) {
            ModPlan plan = propose_mod(rng, g, true, true);
            if (plan.expect_reject) {
                bool threw = false;
                try {
                    state.apply(g, plan.mod);
                } catch (const CycleWouldForm&) {
                    threw = true;
                }
                if (!threw) {
                    ++r.failures;
                    r.detail = "acydist cycle guard failed";
                    return r;
                }
                continue;
            }
            state.apply(g, plan.mod);
            g.apply(plan.mod);
            if (state.length_triples() != oracle_length_sets(g, n - 1)) {
                ++r.failures;
                r.detail = "acydist diverged from oracle at trial " + std::to_string(trial) +
                           " step " + std::to_string(step);
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_dist_undirected(const CheckParams& p) {
    SuiteResult r = make_result("dist-undirected");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 317 + trial);
        int n = 2 + rng.below(std::max(1, std::min(p.max_nodes, 8) - 1));
        LabeledGraph g(n, letters(1), false);
        UndirDistState state = undir_init(g);
        int mods = 8 + rng.below(23);
        for (int step = 0; step < mods; ++step) {
            ModPlan plan = propose_mod(rng, g, true, false);
            if (plan.mod.kind == ModKind::Insert && plan.mod.u == plan.mod.v) continue;
            try {
                g.apply(plan.mod);
            } catch (const DeleteAbsentEdge&) {
                continue;
            }
            state.recompute(g);
            auto walks = oracle_length_sets(g, 2 * n + 2);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int l = 0; l <= 2 * n + 2; ++l) {
                        bool expect = walks.count({x, y, l}) > 0;
                        if (state.has_length(x, y, l) != expect) {
                            ++r.failures;
                            r.detail = "undirected parity rule wrong for (" +
                                       std::to_string(x) + "," + std::to_string(y) + "," +
                                       std::to_string(l) + ") at trial " +
                                       std::to_string(trial);
                            return r;
                        }
                        if (expect && l > 0 && l + 2 <= 2 * n + 2 &&
                            !state.has_length(x, y, l + 2)) {
                            ++r.failures;
                            r.detail = "undirected walk lengths not closed under +2";
                            return r;
                        }
                    }
        }
    }
    return r;
}

SuiteResult suite_anbncn(const CheckParams& p) {
    SuiteResult r = make_result("anbncn");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 331 + trial);
        // Labeled chains a^i b^j c^k; every third trial is balanced.
        int reps = 1 + rng.below(5);
        int i = reps;
        int j = trial % 3 == 0 ? reps : 1 + rng.below(5);
        int k = trial % 3 == 0 ? reps : 1 + rng.below(5);
        int n = i + j + k + 1;
        LabeledGraph g(n, letters(3), true);
        AnbncnState state(g, DistRegime::Acyclic, 0);
        auto insert = [&](int sym, int u, int v) {
            state.apply({ModKind::Insert, sym, u, v});
            g.apply({ModKind::Insert, sym, u, v});
        };
        int at = 0;
        for (int t = 0; t < i; ++t, ++at) insert(0, at, at + 1);
        for (int t = 0; t < j; ++t, ++at) insert(1, at, at + 1);
        for (int t = 0; t < k; ++t, ++at) insert(2, at, at + 1);
        if (rng.chance(40) && g.has_edge(i, 1, i + 1)) {
            state.apply({ModKind::Delete, 1, i, i + 1});
            g.apply({ModKind::Delete, 1, i, i + 1});
        }
        auto paths = oracle_dag_path_labels(g);
        std::set<std::pair<int, int>> expected;
        for (const auto& [x, y, w] : paths) {
            size_t len = w.size();
            if (len % 3 != 0) continue;
            size_t third = len / 3;
            bool ok = true;
            for (size_t idx = 0; idx < len; ++idx) {
                const char* want = idx < third ? "a" : idx < 2 * third ? "b" : "c";
                if (w[idx] != want) ok = false;
            }
            if (ok) expected.insert({x, y});
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (state.query(x, y) != (expected.count({x, y}) > 0)) {
                    ++r.failures;
                    r.detail = "a^n b^n c^n answer wrong for (" + std::to_string(x) + "," +
                               std::to_string(y) + ") expected {" + show_pairs(expected) + "}";
                    return r;
                }
    }
    return r;
}

SuiteResult suite_parikh(const CheckParams& p) {
    SuiteResult r = make_result("parikh");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 337 + trial);
        int k = 1 + trial % 3;
        int n = 2 + rng.below(std::max(1, std::min(p.max_nodes, 6) - 1));
        int lmax = 5 + rng.below(8);  // <= 12
        LabeledGraph g(n, letters(k), true);
        ParikhState state(n, k, lmax);
        int mods = 4 + rng.below(8);
        for (int step = 0; step < mods; ++step) {
            Modification m{ModKind::Insert, rng.below(k), rng.below(n), rng.below(n)};
            bool fresh = !g.has_edge(m.u, m.sym, m.v);
            g.apply(m);
            if (fresh) state.insert(m.sym, m.u, m.v);
            if (state.vector_triples() != oracle_parikh(g, lmax)) {
                ++r.failures;
                r.detail = "parikh state diverged from oracle_parikh at trial " +
                           std::to_string(trial) + " step " + std::to_string(step);
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_parikh_insdist(const CheckParams& p) {
    SuiteResult r = make_result("parikh-insdist");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 347 + trial);
        int n = 2 + rng.below(5);
        int lmax = 5 + rng.below(10);
        LabeledGraph g(n, letters(1), true);
        ParikhState parikh(n, 1, lmax);
        InsDistState dist(n, lmax);
        int mods = 4 + rng.below(10);
        for (int step = 0; step < mods; ++step) {
            int u = rng.below(n), v = rng.below(n);
            if (!g.has_union_edge(u, v)) {
                parikh.insert(0, u, v);
                dist.insert(u, v);
            }
            g.apply({ModKind::Insert, 0, u, v});
            std::set<std::tuple<int, int, int>> flat;
            for (const auto& [x, y, vec] : parikh.vector_triples()) flat.insert({x, y, vec[0]});
            if (flat != dist.length_triples()) {
                ++r.failures;
                r.detail = "k = 1 parikh disagrees with insdist";
                return r;
            }
        }
    }
    return r;
}

// -----------------------------------------------------------------------
// dynecrpq

SyncAutomaton eqlen_relation(const std::vector<std::string>& alphabet) {
    SyncAutomaton a;
    a.arity = 2;
    a.num_states = 1;
    a.start = 0;
    a.finals = {0};
    for (const auto& s1 : alphabet)
        for (const auto& s2 : alphabet) a.transitions.push_back({0, {s1, s2}, 0});
    return a;
}

SyncAutomaton equal_labels_relation(const std::vector<std::string>& alphabet) {
    SyncAutomaton a;
    a.arity = 2;
    a.num_states = 1;
    a.start = 0;
    a.finals = {0};
    for (const auto& s : alphabet) a.transitions.push_back({0, {s, s}, 0});
    return a;
}

SyncAutomaton prefix_relation(const std::vector<std::string>& alphabet) {
    // tape 1 is a prefix of tape 2
    SyncAutomaton a;
    a.arity = 2;
    a.num_states = 2;
    a.start = 0;
    a.finals = {0, 1};
    for (const auto& s : alphabet) {
        a.transitions.push_back({0, {s, s}, 0});
        a.transitions.push_back({0, {"", s}, 1});
        a.transitions.push_back({1, {"", s}, 1});
    }
    return a;
}

SyncAutomaton random_unary_relation(Rng& rng, const std::vector<std::string>& alphabet) {
    SyncAutomaton a;
    a.arity = 1;
    a.num_states = 1 + rng.below(2);
    a.start = 0;
    for (int q = 0; q < a.num_states; ++q)
        if (rng.chance(60)) a.finals.push_back(q);
    if (a.finals.empty()) a.finals.push_back(rng.below(a.num_states));
    for (int q = 0; q < a.num_states; ++q)
        for (const auto& s : alphabet)
            if (rng.chance(70)) a.transitions.push_back({q, {s}, rng.below(a.num_states)});
    return a;
}

EcrpqQuery random_ecrpq_query(Rng& rng, int m, const std::vector<std::string>& alphabet) {
    EcrpqQuery q;
    for (int i = 0; i < m; ++i) {
        std::string x = "x" + std::to_string(i), y = "y" + std::to_string(i);
        q.node_vars.push_back(x);
        q.node_vars.push_back(y);
        q.atoms.push_back({x, "p" + std::to_string(i), y});
    }
    if (m == 2 && rng.chance(40)) q.atoms[1].x = q.atoms[0].y;  // shared endpoint
    EcrpqQuery::RelationAtom rel;
    if (m == 2) {
        switch (rng.below(3)) {
            case 0: rel.automaton = eqlen_relation(alphabet); break;
            case 1: rel.automaton = equal_labels_relation(alphabet); break;
            default: rel.automaton = prefix_relation(alphabet); break;
        }
        rel.paths = {q.atoms[0].path, q.atoms[1].path};
    } else {
        rel.automaton = random_unary_relation(rng, alphabet);
        rel.paths = {q.atoms[0].path};
    }
    q.relations.push_back(std::move(rel));
    std::vector<std::string> candidates;
    for (const auto& a : q.atoms) {
        candidates.push_back(a.x);
        candidates.push_back(a.y);
    }
    for (const auto& c : candidates)
        if (rng.chance(60)) q.head.push_back(c);
    if (q.head.empty()) q.head.push_back(candidates[0]);
    int rows = rng.below(3);
    const int k = static_cast<int>(alphabet.size());
    for (int h = 0; h < rows; ++h) {
        ConstraintRow row;
        for (int i = 0; i < m * k; ++i) row.coeffs.push_back(rng.below(4) - 1);
        row.bound = rng.below(5) - 2;
        q.constraints.push_back(row);
    }
    return q;
}

EcrpqOracleQuery oracle_query_of(const EcrpqPlan& plan) {
    EcrpqOracleQuery q;
    q.plan = plan.automaton;
    q.head_slots = plan.head_slots;
    q.shared = plan.shared;
    q.constraints = plan.constraints;
    q.alphabet = plan.alphabet;
    return q;
}

SuiteResult suite_ecrpq(const CheckParams& p) {
    SuiteResult r = make_result("ecrpq");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 353 + trial);
        int m = 1 + trial % 2;
        auto alphabet = letters(2);
        EcrpqQuery query = random_ecrpq_query(rng, m, alphabet);
        std::vector<LabeledGraph> copies;
        int n = 3 + rng.below(std::max(1, std::min(p.max_nodes, 5) - 2));
        for (int i = 0; i < m; ++i) copies.emplace_back(n, alphabet, true);
        EcrpqPlan plan = ecrpq_compile(query, alphabet);
        EcrpqState state(plan, copies);
        auto oq = oracle_query_of(plan);
        int mods = 6 + rng.below(13);
        for (int step = 0; step < mods; ++step) {
            int copy = rng.below(m);
            ModPlan mp = propose_mod(rng, copies[copy], true, true);
            if (mp.expect_reject) {
                bool threw = false;
                try {
                    state.update(copy, mp.mod);
                } catch (const CycleWouldForm&) {
                    threw = true;
                }
                if (!threw) {
                    ++r.failures;
                    r.detail = "ecrpq cycle guard failed";
                    return r;
                }
                continue;
            }
            state.update(copy, mp.mod);
            copies[copy].apply(mp.mod);
            if (state.eval() != oracle_ecrpq(oq, copies)) {
                ++r.failures;
                r.detail = "ecrpq_eval diverged from oracle_ecrpq at trial " +
                           std::to_string(trial) + " step " + std::to_string(step);
                return r;
            }
        }
    }
    return r;
}

/// Realizability of one stored relation tuple: per-copy label words with
/// the stored counts plus a plan run p -> q over them, pads allowed only
/// after a word is exhausted.
bool ecrpq_tuple_realizable(const EcrpqPlan& plan, const std::vector<LabeledGraph>& copies,
                            int p, int q, const EcrpqTuple& t) {
    const int m = plan.arity();
    const int k = static_cast<int>(plan.alphabet.size());
    std::vector<std::vector<std::vector<std::string>>> words(m);
    for (int i = 0; i < m; ++i) {
        for (const auto& [a, b, w] : oracle_dag_path_labels(copies[i])) {
            if (a != t.xs[i] || b != t.ys[i]) continue;
            std::vector<int> counts(k, 0);
            for (const auto& c : w)
                for (int s = 0; s < k; ++s)
                    if (plan.alphabet[s] == c) ++counts[s];
            if (counts == t.counts[i]) words[i].push_back(w);
        }
        if (words[i].empty()) return false;
    }
    std::vector<int> pick(m, 0);
    for (;;) {
        std::vector<const std::vector<std::string>*> w(m);
        std::vector<int> len(m);
        for (int i = 0; i < m; ++i) {
            w[i] = &words[i][pick[i]];
            len[i] = static_cast<int>(w[i]->size());
        }
        int64_t pspace = plan.automaton.num_states;
        std::vector<int64_t> stride(m);
        for (int i = 0; i < m; ++i) {
            stride[i] = pspace;
            pspace *= len[i] + 1;
        }
        std::vector<char> seen(pspace, 0);
        std::vector<int64_t> work{p};
        seen[p] = 1;
        bool found = false;
        while (!work.empty() && !found) {
            int64_t key = work.back();
            work.pop_back();
            int st = static_cast<int>(key % plan.automaton.num_states);
            std::vector<int> pos(m);
            bool done = true;
            for (int i = 0; i < m; ++i) {
                pos[i] = static_cast<int>(key / stride[i] % (len[i] + 1));
                if (pos[i] != len[i]) done = false;
            }
            if (done && st == q) {
                found = true;
                break;
            }
            for (const auto& tr : plan.automaton.transitions) {
                if (tr.from != st) continue;
                bool ok = true;
                bool all_pad = true;
                int64_t next = key - st + tr.to;
                for (int i = 0; i < m && ok; ++i) {
                    const std::string& c = tr.column[i];
                    if (SyncAutomaton::is_pad(c)) continue;
                    all_pad = false;
                    if (pos[i] >= len[i] || (*w[i])[pos[i]] != c)
                        ok = false;
                    else
                        next += stride[i];
                }
                if (!ok || all_pad) continue;
                if (!seen[next]) {
                    seen[next] = 1;
                    work.push_back(next);
                }
            }
        }
        if (found) return true;
        int i = m - 1;
        while (i >= 0 && ++pick[i] == static_cast<int>(words[i].size())) pick[i--] = 0;
        if (i < 0) break;
    }
    return false;
}

SuiteResult suite_ecrpq_soundness(const CheckParams& p) {
    SuiteResult r = make_result("ecrpq-soundness");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 359 + trial);
        int m = 1 + trial % 2;
        auto alphabet = letters(2);
        EcrpqQuery query = random_ecrpq_query(rng, m, alphabet);
        std::vector<LabeledGraph> copies;
        for (int i = 0; i < m; ++i) copies.emplace_back(4, alphabet, true);
        EcrpqPlan plan = ecrpq_compile(query, alphabet);
        EcrpqState state(plan, copies);
        int mods = 5 + rng.below(6);
        for (int step = 0; step < mods; ++step) {
            int copy = rng.below(m);
            ModPlan mp = propose_mod(rng, copies[copy], true, true);
            if (mp.expect_reject) continue;
            state.update(copy, mp.mod);
            copies[copy].apply(mp.mod);
        }
        for (int pp = 0; pp < plan.automaton.num_states; ++pp)
            for (int qq = 0; qq < plan.automaton.num_states; ++qq)
                for (const auto& t : state.relation(pp, qq))
                    if (!ecrpq_tuple_realizable(plan, copies, pp, qq, t)) {
                        ++r.failures;
                        r.detail = "stored ECRPQ tuple not realizable (trial " +
                                   std::to_string(trial) + ")";
                        return r;
                    }
    }
    return r;
}

// -----------------------------------------------------------------------
// crpq

SuiteResult suite_crpq(const CheckParams& p, bool doubling) {
    SuiteResult r = make_result(doubling ? "crpq-doubling" : "crpq");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 367 + trial);
        int m = 1 + trial % 2;
        int n = 2 + rng.below(std::max(1, std::min(p.max_nodes, 6) - 1));
        auto alphabet = letters(2);
        const int k = 2;
        LabeledGraph g(n, alphabet, true);

        CrpqQuery query;
        std::vector<std::string> vars = {"w", "x", "y", "z"};
        for (int j = 0; j < m; ++j)
            query.atoms.push_back({vars[rng.below(4)], vars[rng.below(4)],
                                   random_dfa(rng, 2, 2)});
        for (const auto& a : query.atoms) {
            if (rng.chance(60)) query.head.push_back(a.x);
            if (rng.chance(60)) query.head.push_back(a.y);
        }
        if (query.head.empty()) query.head.push_back(query.atoms[0].x);
        int rows = rng.below(3);
        for (int h = 0; h < rows; ++h) {
            ConstraintRow row;
            for (int i = 0; i < m * k; ++i) row.coeffs.push_back(rng.below(4) - 1);
            row.bound = rng.below(5) - 2;
            query.constraints.push_back(row);
        }

        int lmax = 6 + rng.below(3);
        CrpqState state(query, g, lmax);
        CrpqState doubled;
        if (doubling) doubled = CrpqState(query, g, 2 * lmax);
        std::set<std::vector<int>> prev_answers;
        int mods = 5 + rng.below(doubling ? 8 : 11);
        for (int step = 0; step < mods; ++step) {
            Modification mod{ModKind::Insert, rng.below(k), rng.below(n), rng.below(n)};
            bool fresh = !g.has_edge(mod.u, mod.sym, mod.v);
            g.apply(mod);
            if (fresh) {
                state.insert(mod.sym, mod.u, mod.v);
                if (doubling) doubled.insert(mod.sym, mod.u, mod.v);
            }
            if (doubling) continue;

            // Independent oracle: explicit product graphs, the parikh DP,
            // then direct assignment enumeration.
            std::set<std::vector<int>> expected;
            {
                std::vector<std::map<std::pair<int, int>, std::vector<std::vector<int>>>>
                    lists(m);
                for (int j = 0; j < m; ++j) {
                    const Dfa& dfa = query.atoms[j].dfa;
                    int Q = dfa.num_states();
                    LabeledGraph product(n * Q, alphabet, true);
                    for (const auto& [u, s, v] : g.edges())
                        for (int q = 0; q < Q; ++q) {
                            int qq = dfa.step(q, g.symbol_name(s));
                            Modification pm{ModKind::Insert, s, u * Q + q, v * Q + qq};
                            if (!product.has_edge(pm.u, pm.sym, pm.v)) product.apply(pm);
                        }
                    for (const auto& [px, py, vec] : oracle_parikh(product, lmax)) {
                        if (px % Q != dfa.start() || !dfa.is_final(py % Q)) continue;
                        lists[j][{px / Q, py / Q}].push_back(vec);
                    }
                }
                std::vector<std::string> dvars;
                auto var_id = [&](const std::string& v) {
                    for (size_t i = 0; i < dvars.size(); ++i)
                        if (dvars[i] == v) return static_cast<int>(i);
                    dvars.push_back(v);
                    return static_cast<int>(dvars.size() - 1);
                };
                std::vector<std::pair<int, int>> atom_vars;
                for (const auto& a : query.atoms)
                    atom_vars.push_back({var_id(a.x), var_id(a.y)});
                std::vector<int> head_ids;
                for (const auto& h : query.head) head_ids.push_back(var_id(h));
                std::vector<int> assign(dvars.size(), 0);
                for (;;) {
                    bool ok = true;
                    std::vector<std::vector<std::vector<int>>*> ls(m);
                    for (int j = 0; j < m && ok; ++j) {
                        auto it = lists[j].find(
                            {assign[atom_vars[j].first], assign[atom_vars[j].second]});
                        if (it == lists[j].end())
                            ok = false;
                        else
                            ls[j] = &it->second;
                    }
                    if (ok) {
                        std::vector<int> pick(m, 0);
                        bool found = false;
                        for (;;) {
                            std::vector<int64_t> ell;
                            for (int j = 0; j < m; ++j)
                                for (int s = 0; s < k; ++s)
                                    ell.push_back((*ls[j])[pick[j]][s]);
                            if (constraints_hold(query.constraints, ell)) {
                                found = true;
                                break;
                            }
                            int j = m - 1;
                            while (j >= 0 && ++pick[j] == static_cast<int>(ls[j]->size()))
                                pick[j--] = 0;
                            if (j < 0) break;
                        }
                        if (found) {
                            std::vector<int> head;
                            for (int hv : head_ids) head.push_back(assign[hv]);
                            expected.insert(head);
                        }
                    }
                    int i = static_cast<int>(dvars.size()) - 1;
                    while (i >= 0 && ++assign[i] == n) assign[i--] = 0;
                    if (i < 0) break;
                }
            }
            auto answers = state.eval();
            if (answers != expected) {
                ++r.failures;
                r.detail = "crpq_eval diverged from the bounded oracle at trial " +
                           std::to_string(trial) + " step " + std::to_string(step);
                return r;
            }
            for (const auto& a : prev_answers)
                if (!answers.count(a)) {
                    ++r.failures;
                    r.detail = "crpq answers lost a tuple under insertion";
                    return r;
                }
            prev_answers = std::move(answers);
        }
        if (doubling && state.eval() != doubled.eval()) {
            ++r.failures;
            r.detail = "crpq answers changed when the witness bound doubled (trial " +
                       std::to_string(trial) + ")";
            return r;
        }
    }
    return r;
}

// -----------------------------------------------------------------------
// products and NEPS

LabeledGraph random_factor(Rng& rng, int n, bool directed, bool acyclic, int edge_target) {
    LabeledGraph g(n, letters(1), directed);
    for (int e = 0; e < edge_target; ++e) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v && (!directed || acyclic)) continue;
        if (acyclic) {
            BitMatrix reach = oracle_reach(g);
            if (u == v || reach.test(v, u)) continue;
        }
        if (!g.has_edge(u, 0, v)) g.apply({ModKind::Insert, 0, u, v});
    }
    return g;
}

SuiteResult suite_product(const CheckParams& p) {
    SuiteResult r = make_result("product");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 373 + trial);
        DistRegime regime = trial % 3 == 0   ? DistRegime::InsertOnly
                            : trial % 3 == 1 ? DistRegime::Acyclic
                                             : DistRegime::Undirected;
        int m = 2 + rng.below(2);
        bool directed = regime != DistRegime::Undirected;
        bool acyclic = regime == DistRegime::Acyclic;
        std::vector<LabeledGraph> factors;
        int64_t bound = 1;
        for (int i = 0; i < m; ++i) {
            int n = 2 + rng.below(3);
            factors.push_back(random_factor(rng, n, directed, acyclic, 2 + rng.below(4)));
            bound *= n;
        }
        std::vector<FactorDistState> states;
        for (const auto& f : factors) states.emplace_back(f, regime, static_cast<int>(bound));

        int steps = 3 + rng.below(5);
        for (int step = 0; step < steps; ++step) {
            int fi = rng.below(m);
            ModPlan mp =
                propose_mod(rng, factors[fi], regime != DistRegime::InsertOnly, acyclic);
            if (mp.expect_reject) continue;
            if (!directed && mp.mod.kind == ModKind::Insert && mp.mod.u == mp.mod.v) continue;
            if (regime == DistRegime::InsertOnly && mp.mod.kind == ModKind::Delete) continue;
            try {
                states[fi].apply(mp.mod);
                factors[fi].apply(mp.mod);
            } catch (const EngineError&) {
                continue;
            }
            ExplicitProduct oracle(factors, {}, false);
            for (int64_t a = 0; a < oracle.node_count(); ++a)
                for (int64_t b = 0; b < oracle.node_count(); ++b) {
                    auto xs = oracle.decode(a), ys = oracle.decode(b);
                    if (product_reach(states, xs, ys) != oracle.reachable(xs, ys)) {
                        ++r.failures;
                        r.detail =
                            "product_reach diverged from the explicit product (trial " +
                            std::to_string(trial) + ")";
                        return r;
                    }
                }
        }
    }
    return r;
}

SuiteResult suite_product_labeled(const CheckParams& p) {
    SuiteResult r = make_result("product-labeled");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 379 + trial);
        const int m = 2;
        std::vector<LabeledGraph> factors;
        for (int i = 0; i < m; ++i) {
            int n = 2 + rng.below(3);
            LabeledGraph g(n, letters(2), true);
            int edges = 2 + rng.below(4);
            for (int e = 0; e < edges; ++e) {
                int u = rng.below(n), v = rng.below(n), s = rng.below(2);
                if (u == v) continue;
                BitMatrix reach = oracle_reach(g);
                if (reach.test(v, u)) continue;
                if (!g.has_edge(u, s, v)) g.apply({ModKind::Insert, s, u, v});
            }
            factors.push_back(std::move(g));
        }
        LabeledProductState state(factors);
        for (int step = 0; step < 3; ++step) {
            int fi = rng.below(m);
            ModPlan mp = propose_mod(rng, factors[fi], true, true);
            if (mp.expect_reject) continue;
            state.update(fi, mp.mod);
            factors[fi].apply(mp.mod);
        }
        ExplicitProduct oracle(factors, {}, true);
        for (int64_t a = 0; a < oracle.node_count(); ++a)
            for (int64_t b = 0; b < oracle.node_count(); ++b) {
                auto xs = oracle.decode(a), ys = oracle.decode(b);
                if (state.reach(xs, ys) != oracle.reachable(xs, ys)) {
                    ++r.failures;
                    r.detail =
                        "labeled product reach diverged (trial " + std::to_string(trial) + ")";
                    return r;
                }
            }
    }
    return r;
}

SuiteResult suite_palindrome(const CheckParams& p) {
    SuiteResult r = make_result("palindrome");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 383 + trial);
        int n = 2 + rng.below(4);
        LabeledGraph g(n, letters(2), true);
        PalindromeState state(g);
        int mods = 4 + rng.below(7);
        for (int step = 0; step < mods; ++step) {
            ModPlan mp = propose_mod(rng, g, true, true);
            if (mp.expect_reject) continue;
            state.apply(mp.mod);
            g.apply(mp.mod);
            auto paths = oracle_dag_path_labels(g);
            std::set<std::pair<int, int>> expected;
            for (const auto& [x, y, w] : paths) {
                bool pal = true;
                for (size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
                    if (w[i] != w[j - 1]) pal = false;
                if (pal) expected.insert({x, y});
            }
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (state.query(x, y) != (expected.count({x, y}) > 0)) {
                        ++r.failures;
                        r.detail = "palindrome answer wrong for (" + std::to_string(x) + "," +
                                   std::to_string(y) + ") at trial " + std::to_string(trial);
                        return r;
                    }
        }
    }
    return r;
}

SuiteResult suite_neps(const CheckParams& p) {
    SuiteResult r = make_result("neps");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 389 + trial);
        DistRegime regime = trial % 3 == 0   ? DistRegime::InsertOnly
                            : trial % 3 == 1 ? DistRegime::Acyclic
                                             : DistRegime::Undirected;
        bool directed = regime != DistRegime::Undirected;
        bool acyclic = regime == DistRegime::Acyclic;
        int m = 1 + rng.below(3);
        NepsSpec spec;
        spec.factors = m;
        int k = 1 + rng.below(3);
        for (int j = 0; j < k; ++j) {
            std::vector<int> rule;
            for (int i = 0; i < m; ++i) rule.push_back(rng.below(2));
            spec.rules.push_back(rule);
        }
        std::vector<LabeledGraph> factors;
        for (int i = 0; i < m; ++i)
            factors.push_back(
                random_factor(rng, 2 + rng.below(3), directed, acyclic, 1 + rng.below(4)));
        NepsState state(spec, factors, regime);

        int steps = 3 + rng.below(6);
        for (int step = 0; step < steps; ++step) {
            if (rng.chance(30)) {
                int rule = rng.below(k), bit = rng.below(m);
                state.update(
                    NepsModification{NepsModification::Kind::RuleFlip, 0, {}, rule, bit});
                spec.flip(rule, bit);
            } else {
                int fi = rng.below(m);
                ModPlan mp =
                    propose_mod(rng, factors[fi], regime != DistRegime::InsertOnly, acyclic);
                if (mp.expect_reject) continue;
                if (!directed && mp.mod.kind == ModKind::Insert && mp.mod.u == mp.mod.v)
                    continue;
                if (regime == DistRegime::InsertOnly && mp.mod.kind == ModKind::Delete)
                    continue;
                try {
                    state.update(NepsModification{NepsModification::Kind::Factor, fi, mp.mod});
                    factors[fi].apply(mp.mod);
                } catch (const EngineError&) {
                    continue;
                }
            }
            ExplicitProduct oracle(factors, spec.rules, false);
            for (int64_t a = 0; a < oracle.node_count(); ++a)
                for (int64_t b = 0; b < oracle.node_count(); ++b) {
                    auto xs = oracle.decode(a), ys = oracle.decode(b);
                    if (state.reach(xs, ys) != oracle.reachable(xs, ys)) {
                        ++r.failures;
                        r.detail = "neps_reach diverged from the explicit product (trial " +
                                   std::to_string(trial) + ", regime " +
                                   std::to_string(static_cast<int>(regime)) + ")";
                        return r;
                    }
                }
        }
    }
    return r;
}

SuiteResult suite_gf2(const CheckParams& p) {
    SuiteResult r = make_result("gf2");
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 397 + trial);
        int rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        Gf2Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng.chance(50)) m.set(i, j, true);
        std::set<std::vector<int>> span;
        for (int mask = 0; mask < (1 << rows); ++mask) {
            std::vector<int> acc(cols, 0);
            for (int i = 0; i < rows; ++i)
                if (mask & (1 << i))
                    for (int j = 0; j < cols; ++j) acc[j] ^= m.get(i, j);
            span.insert(acc);
        }
        int rank = gf2_rank(m);
        if (span.size() != (size_t(1) << rank)) {
            ++r.failures;
            r.detail = "rank does not match the row-span size";
            return r;
        }
        Gf2Matrix m2 = m;
        int target = rng.below(rows);
        for (int i = 0; i < rows; ++i)
            if (i != target && rng.chance(50)) m2.xor_row(target, i);
        if (gf2_rank(m2) != rank) {
            ++r.failures;
            r.detail = "rank changed under a row-combination replacement";
            return r;
        }
    }
    return r;
}

// -----------------------------------------------------------------------
// cli determinism and rollback

SuiteResult suite_determinism(const CheckParams& p) {
    SuiteResult r = make_result("determinism");
    const std::vector<std::string> programs = {"tc", "cfl", "dist-acyclic", "palindrome"};
    for (int trial = 0; trial < p.trials; ++trial) {
        ++r.trials;
        Rng rng(p.seed * 401 + trial);
        int n = 3 + rng.below(4);
        LabeledGraph g(n, letters(2), true);
        std::ostringstream script;
        LabeledGraph sim(n, letters(2), true);
        int lines = 6 + rng.below(10);
        for (int i = 0; i < lines; ++i) {
            if (rng.chance(30)) {
                script << "query\n";
                continue;
            }
            ModPlan mp = propose_mod(rng, sim, true, true);
            if (mp.expect_reject) continue;
            const char* kind = mp.mod.kind == ModKind::Insert ? "ins" : "del";
            script << kind << " " << sim.symbol_name(mp.mod.sym) << " " << mp.mod.u << " "
                   << mp.mod.v << "\n";
            sim.apply(mp.mod);
        }
        script << "query\n";
        EngineConfig config;
        config.program = programs[trial % programs.size()];
        if (config.program == "cfl") config.grammar = anbn_grammar();
        config.graphs = {g};
        std::string out1, out2;
        {
            auto engine = make_engine(config);
            std::istringstream in(script.str());
            std::ostringstream os;
            execute_script(*engine, in, os);
            out1 = os.str();
        }
        {
            auto engine = make_engine(config);
            std::istringstream in(script.str());
            std::ostringstream os;
            execute_script(*engine, in, os);
            out2 = os.str();
        }
        if (out1 != out2) {
            ++r.failures;
            r.detail = "script replay produced different bytes";
            return r;
        }
        // A failing line must leave the emitted prefix intact.
        std::string bad = script.str() + "del b 0 0\nquery\n";
        auto engine = make_engine(config);
        std::istringstream in(bad);
        std::ostringstream os;
        ScriptResult res = execute_script(*engine, in, os);
        if (res.exit_code != 2 || os.str() != out1) {
            ++r.failures;
            r.detail = "failing line did not preserve the emitted prefix";
            return r;
        }
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"tc",
                                                   "rpq",
                                                   "rpq-locality",
                                                   "cfl",
                                                   "cfl-soundness",
                                                   "dist-ins",
                                                   "dist-acyclic",
                                                   "dist-undirected",
                                                   "anbncn",
                                                   "parikh",
                                                   "parikh-insdist",
                                                   "crpq",
                                                   "crpq-doubling",
                                                   "ecrpq",
                                                   "ecrpq-soundness",
                                                   "product",
                                                   "product-labeled",
                                                   "palindrome",
                                                   "neps",
                                                   "gf2",
                                                   "determinism"};
    return names;
}

SuiteResult run_suite(const std::string& name, const CheckParams& params) {
    if (name == "tc") return suite_tc(params);
    if (name == "rpq") return suite_rpq(params);
    if (name == "rpq-locality") return suite_rpq_locality(params);
    if (name == "cfl") return suite_cfl(params);
    if (name == "cfl-soundness") return suite_cfl_soundness(params);
    if (name == "dist-ins") return suite_dist_ins(params);
    if (name == "dist-acyclic") return suite_dist_acyclic(params);
    if (name == "dist-undirected") return suite_dist_undirected(params);
    if (name == "anbncn") return suite_anbncn(params);
    if (name == "parikh") return suite_parikh(params);
    if (name == "parikh-insdist") return suite_parikh_insdist(params);
    if (name == "crpq") return suite_crpq(params, false);
    if (name == "crpq-doubling") return suite_crpq(params, true);
    if (name == "ecrpq") return suite_ecrpq(params);
    if (name == "ecrpq-soundness") return suite_ecrpq_soundness(params);
    if (name == "product") return suite_product(params);
    if (name == "product-labeled") return suite_product_labeled(params);
    if (name == "palindrome") return suite_palindrome(params);
    if (name == "neps") return suite_neps(params);
    if (name == "gf2") return suite_gf2(params);
    if (name == "determinism") return suite_determinism(params);
    throw ParseError("unknown suite '" + name + "'");
}

}  // namespace dynq
