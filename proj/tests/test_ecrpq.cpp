#include <doctest.h>

#include <random>

#include "dynq/ecrpq.hpp"
#include "dynq/errors.hpp"
#include "dynq/oracle.hpp"
#include "dynq/rpq.hpp"

using namespace dynq;

namespace {

const std::vector<std::string> kAB = {"a", "b"};

std::vector<std::string> chars(const std::string& w) {
    std::vector<std::string> out;
    for (char c : w) out.emplace_back(1, c);
    return out;
}

SyncAutomaton eqlen() {
    SyncAutomaton a;
    a.arity = 2;
    a.num_states = 1;
    a.start = 0;
    a.finals = {0};
    for (const auto& s1 : kAB)
        for (const auto& s2 : kAB) a.transitions.push_back({0, {s1, s2}, 0});
    return a;
}

SyncAutomaton unary_regex(const std::string& expr) {
    Dfa dfa = compile_regex(expr);
    SyncAutomaton a;
    a.arity = 1;
    a.num_states = dfa.num_states();
    a.start = dfa.start();
    for (int f : dfa.finals()) a.finals.push_back(f);
    for (int p = 0; p < dfa.num_states(); ++p)
        for (const auto& s : kAB) a.transitions.push_back({p, {s}, dfa.step(p, s)});
    return a;
}

EcrpqQuery one_atom_query(SyncAutomaton rel) {
    EcrpqQuery q;
    q.node_vars = {"x", "y"};
    q.head = {"x", "y"};
    q.atoms.push_back({"x", "p", "y"});
    EcrpqQuery::RelationAtom r;
    r.automaton = std::move(rel);
    r.paths = {"p"};
    q.relations.push_back(std::move(r));
    return q;
}

EcrpqQuery two_atom_query(std::vector<EcrpqQuery::RelationAtom> rels) {
    EcrpqQuery q;
    q.node_vars = {"x1", "y1", "x2", "y2"};
    q.head = {"x1", "y1", "x2", "y2"};
    q.atoms.push_back({"x1", "p1", "y1"});
    q.atoms.push_back({"x2", "p2", "y2"});
    q.relations = std::move(rels);
    return q;
}

LabeledGraph chain_of(int n, const std::string& sym, int count) {
    LabeledGraph g(n, kAB, true);
    int s = sym == "a" ? 0 : 1;
    for (int i = 0; i < count; ++i) g.apply({ModKind::Insert, s, i, i + 1});
    return g;
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

}  // namespace

TEST_CASE("ecrpq_compile: one unary relation is the automaton itself") {
    EcrpqPlan plan = ecrpq_compile(one_atom_query(unary_regex("a*")), kAB);
    CHECK(plan.arity() == 1);
    CHECK(plan.automaton.accepts_tuple({chars("aaa")}));
    CHECK(plan.automaton.accepts_tuple({{}}));
    CHECK(!plan.automaton.accepts_tuple({chars("ab")}));
}

TEST_CASE("ecrpq_compile: a single binary relation survives unchanged") {
    EcrpqQuery::RelationAtom r;
    r.automaton = eqlen();
    r.paths = {"p1", "p2"};
    EcrpqPlan plan = ecrpq_compile(two_atom_query({std::move(r)}), kAB);
    CHECK(plan.automaton.accepts_tuple({chars("ab"), chars("ba")}));
    CHECK(!plan.automaton.accepts_tuple({chars("ab"), chars("b")}));
}

TEST_CASE("ecrpq_compile: synchronized product of two relations") {
    EcrpqQuery::RelationAtom r1;
    r1.automaton = eqlen();
    r1.paths = {"p1", "p2"};
    EcrpqQuery::RelationAtom r2;
    r2.automaton = unary_regex("a*");
    r2.paths = {"p1"};
    EcrpqPlan plan = ecrpq_compile(two_atom_query({std::move(r1), std::move(r2)}), kAB);

    // brute force on all tuple words up to length 4
    SyncAutomaton eq = eqlen();
    Dfa astar = compile_regex("a*");
    std::vector<std::string> words = {""};
    for (size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() == 4) continue;
        words.push_back(words[i] + "a");
        words.push_back(words[i] + "b");
    }
    for (const auto& w1 : words)
        for (const auto& w2 : words) {
            bool expect = eq.accepts_tuple({chars(w1), chars(w2)}) &&
                          astar.accepts_word(chars(w1));
            CHECK(plan.automaton.accepts_tuple({chars(w1), chars(w2)}) == expect);
        }
    CHECK(plan.automaton.accepts_tuple({chars("aa"), chars("bb")}));
    CHECK(!plan.automaton.accepts_tuple({chars("ab"), chars("bb")}));
}

TEST_CASE("ecrpq state on equal-length chains") {
    EcrpqQuery::RelationAtom r;
    r.automaton = eqlen();
    r.paths = {"p1", "p2"};
    EcrpqQuery q = two_atom_query({std::move(r)});
    EcrpqPlan plan = ecrpq_compile(q, kAB);

    SUBCASE("both chains of length 2: endpoints answered") {
        std::vector<LabeledGraph> copies = {chain_of(3, "a", 2), chain_of(3, "b", 2)};
        EcrpqState state(plan, copies);
        auto ans = state.eval();
        CHECK(ans.count({0, 2, 0, 2}));
        CHECK(ans == oracle_ecrpq(oracle_query_of(plan), copies));
    }
    SUBCASE("chain lengths 2 vs 3: endpoints not answered") {
        std::vector<LabeledGraph> copies = {chain_of(4, "a", 2), chain_of(4, "b", 3)};
        EcrpqState state(plan, copies);
        auto ans = state.eval();
        CHECK(!ans.count({0, 2, 0, 3}));
        CHECK(ans == oracle_ecrpq(oracle_query_of(plan), copies));
    }
    SUBCASE("deleting the only witness removes the answer") {
        std::vector<LabeledGraph> copies = {chain_of(3, "a", 2), chain_of(3, "b", 2)};
        EcrpqState state(plan, copies);
        CHECK(state.eval().count({0, 2, 0, 2}));
        state.update(0, {ModKind::Delete, 0, 1, 2});
        copies[0].apply({ModKind::Delete, 0, 1, 2});
        CHECK(!state.eval().count({0, 2, 0, 2}));
        CHECK(state.eval() == oracle_ecrpq(oracle_query_of(plan), copies));
    }
}

TEST_CASE("ecrpq eval: epsilon witnesses and constraints") {
    EcrpqQuery::RelationAtom r;
    r.automaton = eqlen();  // start state is final: accepts the empty tuple
    r.paths = {"p1", "p2"};
    EcrpqQuery q = two_atom_query({std::move(r)});

    SUBCASE("empty copies, trivial constraint: all diagonal assignments") {
        EcrpqPlan plan = ecrpq_compile(q, kAB);
        std::vector<LabeledGraph> copies = {LabeledGraph(2, kAB, true),
                                            LabeledGraph(2, kAB, true)};
        EcrpqState state(plan, copies);
        auto ans = state.eval();
        CHECK(ans.size() == 4);  // (x1,x1,x2,x2) for all x1, x2
        CHECK(ans.count({0, 0, 1, 1}));
        CHECK(!ans.count({0, 1, 0, 0}));
    }
    SUBCASE("a constraint demanding an occurrence empties the answers") {
        ConstraintRow row;
        row.coeffs = {1, 0, 0, 0};  // l_{1,a} >= 1
        row.bound = 1;
        q.constraints.push_back(row);
        EcrpqPlan plan = ecrpq_compile(q, kAB);
        std::vector<LabeledGraph> copies = {LabeledGraph(2, kAB, true),
                                            LabeledGraph(2, kAB, true)};
        EcrpqState state(plan, copies);
        CHECK(state.eval().empty());
    }
}

TEST_CASE("ecrpq guards") {
    EcrpqPlan plan = ecrpq_compile(one_atom_query(unary_regex("a*")), kAB);
    std::vector<LabeledGraph> copies = {chain_of(3, "a", 2)};
    EcrpqState state(plan, copies);
    CHECK_THROWS_AS(state.update(0, {ModKind::Insert, 0, 2, 0}), CycleWouldForm);
    CHECK_THROWS_AS(state.update(0, {ModKind::Delete, 1, 0, 1}), DeleteAbsentEdge);
    CHECK_THROWS_AS(state.update(3, {ModKind::Insert, 0, 0, 1}), ParseError);
}

TEST_CASE("crpq: a*b* with equal symbol counts") {
    CrpqQuery q;
    q.atoms.push_back({"x", "y", compile_regex("a*b*")});
    q.head = {"x", "y"};
    ConstraintRow r1{{1, -1}, 0};  // l_a - l_b >= 0
    ConstraintRow r2{{-1, 1}, 0};  // l_b - l_a >= 0
    q.constraints = {r1, r2};

    LabeledGraph g(4, kAB, true);
    CrpqState state(q, g, 10);
    state.insert(0, 0, 1);
    g.apply({ModKind::Insert, 0, 0, 1});
    state.insert(1, 1, 2);
    g.apply({ModKind::Insert, 1, 1, 2});
    auto ans = state.eval();
    CHECK(ans.count({0, 2}));  // ab has one of each
    CHECK(ans.count({0, 0}));  // epsilon
    CHECK(!ans.count({0, 1}));

    // aab breaks the balance
    state.insert(0, 2, 3);
    g.apply({ModKind::Insert, 0, 2, 3});
    ans = state.eval();
    CHECK(!ans.count({0, 3}));
}

TEST_CASE("crpq with no constraints equals the rpq answers") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        Dfa dfa = compile_regex(trial % 2 ? "(ab)*" : "a*b");
        CrpqQuery q;
        q.atoms.push_back({"x", "y", dfa});
        q.head = {"x", "y"};
        LabeledGraph g(n, kAB, true);
        CrpqState state(q, g, n * n);
        RpqState rpq(dfa, n);
        for (int step = 0; step < 10; ++step) {
            Modification m{ModKind::Insert, static_cast<int>(rng() % 2),
                           static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
            bool fresh = !g.has_edge(m.u, m.sym, m.v);
            g.apply(m);
            if (fresh) state.insert(m.sym, m.u, m.v);
            rpq.insert(g.symbol_name(m.sym), m.u, m.v);

            std::set<std::vector<int>> expected;
            for (auto [x, y] : rpq.query().pairs()) expected.insert({x, y});
            REQUIRE(state.eval() == expected);
        }
    }
}

TEST_CASE("crpq zero-atom queries") {
    LabeledGraph g(2, kAB, true);
    CrpqQuery q;  // no atoms, no constraints
    CrpqState state(q, g, 4);
    std::set<std::vector<int>> just_empty_tuple;
    just_empty_tuple.insert(std::vector<int>{});
    CHECK(state.eval() == just_empty_tuple);

    CrpqQuery q2;
    ConstraintRow impossible{{}, 1};  // empty sum >= 1
    q2.constraints = {impossible};
    CrpqState state2(q2, g, 4);
    CHECK(state2.eval().empty());
}

TEST_CASE("crpq answers are monotone under insertions") {
    CrpqQuery q;
    q.atoms.push_back({"x", "y", compile_regex("(a|b)*")});
    q.head = {"x", "y"};
    LabeledGraph g(4, kAB, true);
    CrpqState state(q, g, 8);
    std::mt19937_64 rng(61);
    std::set<std::vector<int>> prev;
    for (int step = 0; step < 10; ++step) {
        Modification m{ModKind::Insert, static_cast<int>(rng() % 2),
                       static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
        bool fresh = !g.has_edge(m.u, m.sym, m.v);
        g.apply(m);
        if (fresh) state.insert(m.sym, m.u, m.v);
        auto cur = state.eval();
        for (const auto& t : prev) REQUIRE(cur.count(t));
        prev = std::move(cur);
    }
}
