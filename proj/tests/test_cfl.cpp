#include <doctest.h>

#include <random>

#include "dynq/cfl.hpp"
#include "dynq/errors.hpp"
#include "dynq/oracle.hpp"

using namespace dynq;

namespace {

CnfGrammar dyck() {
    return to_cnf_text("start S\nrule S -> S S\nrule S -> a S b\nrule S -> eps\n");
}

CnfGrammar anbn() { return to_cnf_text("start S\nrule S -> a S b\nrule S -> eps\n"); }

int var(const CnfGrammar& g, const std::string& name) {
    for (int i = 0; i < g.num_variables; ++i)
        if (g.variable_names[i] == name) return i;
    REQUIRE(false);
    return -1;
}

std::set<std::pair<int, int>> pairs(const BitMatrix& m) {
    std::set<std::pair<int, int>> out;
    for (auto [x, y] : m.pairs()) out.insert({x, y});
    return out;
}

void apply(CflState& s, LabeledGraph& g, ModKind kind, int sym, int u, int v) {
    Modification m{kind, sym, u, v};
    s.apply(g, m);
    g.apply(m);
}

}  // namespace

TEST_CASE("cfl_init: only epsilon chunks exist on the empty graph") {
    CnfGrammar g = dyck();
    CflState s(g, 2);
    for (int X = 0; X < g.num_variables; ++X) {
        int count = 0;
        s.relation(X, X).for_each_tuple([&](int a, int b, int c, int d) {
            CHECK(a == b);
            CHECK(c == d);
            ++count;
        });
        CHECK(count == 4);
        for (int Y = 0; Y < g.num_variables; ++Y) {
            if (Y == X) continue;
            int other = 0;
            s.relation(X, Y).for_each_tuple([&](int, int, int, int) { ++other; });
            CHECK(other == 0);
        }
    }
    CHECK(pairs(s.query()) == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});

    CnfGrammar no_eps = to_cnf_text("start S\nrule S -> a\n");
    CflState s2(no_eps, 2);
    CHECK(pairs(s2.query()).empty());
}

TEST_CASE("derived relation with one variable is the stored relation") {
    CnfGrammar g = dyck();
    CflState s(g, 3);
    LabeledGraph graph(3, {"a", "b"}, true);
    apply(s, graph, ModKind::Insert, 0, 0, 1);
    apply(s, graph, ModKind::Insert, 1, 1, 2);
    for (int X = 0; X < g.num_variables; ++X)
        for (int Y = 0; Y < g.num_variables; ++Y) {
            std::set<std::vector<int>> direct;
            s.relation(X, Y).for_each_tuple(
                [&](int a, int b, int c, int d) { direct.insert({a, b, c, d}); });
            CHECK(s.derived(X, {Y}) == direct);
        }
    CHECK_THROWS_AS(s.derived(0, {0, 0, 0, 0}), ArityUnsupported);
}

TEST_CASE("derived relation example: S -> A B over a two-edge chain") {
    CnfGrammar g = to_cnf_text("start S\nrule S -> A B\nrule A -> a\nrule B -> b\n");
    CflState s(g, 3);
    LabeledGraph graph(3, {"a", "b"}, true);
    apply(s, graph, ModKind::Insert, 0, 0, 1);
    apply(s, graph, ModKind::Insert, 1, 1, 2);
    auto rel = s.derived(var(g, "S"), {var(g, "A"), var(g, "B")});
    // S => A B with all epsilon gaps: (0,0,1,1,2,2)
    CHECK(rel.count({0, 0, 1, 1, 2, 2}));
}

TEST_CASE("derived k = 2 matches the brute-force definition on a DAG") {
    std::mt19937_64 rng(37);
    CnfGrammar g = dyck();
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 5;
        CflState s(g, n);
        LabeledGraph graph(n, {"a", "b"}, true);
        for (int e = 0; e < 6; ++e) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u >= v) continue;
            int sym = static_cast<int>(rng() % 2);
            if (graph.has_edge(u, sym, v)) continue;
            apply(s, graph, ModKind::Insert, sym, u, v);
        }
        auto paths = oracle_dag_path_labels(graph);
        // label words grouped by endpoints
        std::map<std::pair<int, int>, std::vector<std::vector<std::string>>> words;
        for (const auto& [a, b, w] : paths) words[{a, b}].push_back(w);

        for (int X = 0; X < g.num_variables; ++X)
            for (int Y1 = 0; Y1 < g.num_variables; ++Y1)
                for (int Y2 = 0; Y2 < g.num_variables; ++Y2) {
                    auto got = s.derived(X, {Y1, Y2});
                    std::set<std::vector<int>> expected;
                    for (int x1 = 0; x1 < n; ++x1)
                        for (int y1 = 0; y1 < n; ++y1)
                            for (int x2 = 0; x2 < n; ++x2)
                                for (int y2 = 0; y2 < n; ++y2)
                                    for (int x3 = 0; x3 < n; ++x3)
                                        for (int y3 = 0; y3 < n; ++y3) {
                                            auto i1 = words.find({x1, y1});
                                            auto i2 = words.find({x2, y2});
                                            auto i3 = words.find({x3, y3});
                                            if (i1 == words.end() || i2 == words.end() ||
                                                i3 == words.end())
                                                continue;
                                            bool found = false;
                                            for (const auto& s1 : i1->second)
                                                for (const auto& s2 : i2->second)
                                                    for (const auto& s3 : i3->second) {
                                                        if (found) break;
                                                        std::vector<CnfGrammar::Token> toks;
                                                        for (const auto& c : s1)
                                                            toks.push_back({false, -1, c});
                                                        toks.push_back({true, Y1, ""});
                                                        for (const auto& c : s2)
                                                            toks.push_back({false, -1, c});
                                                        toks.push_back({true, Y2, ""});
                                                        for (const auto& c : s3)
                                                            toks.push_back({false, -1, c});
                                                        if (g.derives_sentential(X, toks))
                                                            found = true;
                                                    }
                                            if (found)
                                                expected.insert({x1, y1, x2, y2, x3, y3});
                                        }
                    REQUIRE(got == expected);
                }
    }
}

TEST_CASE("a^n b^n chain: insert then delete") {
    CnfGrammar g = anbn();
    CflState s(g, 5);
    LabeledGraph graph(5, {"a", "b"}, true);
    apply(s, graph, ModKind::Insert, 0, 0, 1);
    apply(s, graph, ModKind::Insert, 0, 1, 2);
    apply(s, graph, ModKind::Insert, 1, 2, 3);
    apply(s, graph, ModKind::Insert, 1, 3, 4);
    auto q = pairs(s.query());
    CHECK(q.count({0, 4}));  // aabb
    CHECK(q.count({1, 3}));  // ab
    for (int x = 0; x < 5; ++x) CHECK(q.count({x, x}));
    CHECK(q == oracle_cfl(graph, g));

    apply(s, graph, ModKind::Delete, 1, 2, 3);
    q = pairs(s.query());
    CHECK(q == std::set<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(q == oracle_cfl(graph, g));
}

TEST_CASE("dyck on parallel chains survives deleting one branch") {
    CnfGrammar g = dyck();
    CflState s(g, 4);
    LabeledGraph graph(4, {"a", "b"}, true);
    // two witnesses for (0,3): a:0->1, b:1->3 and a:0->2, b:2->3
    apply(s, graph, ModKind::Insert, 0, 0, 1);
    apply(s, graph, ModKind::Insert, 1, 1, 3);
    apply(s, graph, ModKind::Insert, 0, 0, 2);
    apply(s, graph, ModKind::Insert, 1, 2, 3);
    CHECK(pairs(s.query()).count({0, 3}));
    apply(s, graph, ModKind::Delete, 0, 0, 1);
    CHECK(pairs(s.query()).count({0, 3}));  // the other chain still works
    CHECK(pairs(s.query()) == oracle_cfl(graph, g));
    apply(s, graph, ModKind::Delete, 0, 0, 2);
    CHECK(!pairs(s.query()).count({0, 3}));
    CHECK(pairs(s.query()) == oracle_cfl(graph, g));
}

TEST_CASE("insert-then-delete returns the whole state") {
    CnfGrammar g = dyck();
    CflState s(g, 4);
    LabeledGraph graph(4, {"a", "b"}, true);
    apply(s, graph, ModKind::Insert, 0, 0, 1);
    apply(s, graph, ModKind::Insert, 1, 1, 2);
    CflState before = s;
    apply(s, graph, ModKind::Insert, 0, 2, 3);
    apply(s, graph, ModKind::Delete, 0, 2, 3);
    for (int X = 0; X < g.num_variables; ++X)
        for (int Y = 0; Y < g.num_variables; ++Y)
            CHECK(s.relation(X, Y) == before.relation(X, Y));
    CHECK(s.tc().relation() == before.tc().relation());
    CHECK(s.query() == before.query());
}

TEST_CASE("cfl guards: cycles rejected, absent deletes rejected") {
    CnfGrammar g = anbn();
    CflState s(g, 3);
    LabeledGraph graph(3, {"a", "b"}, true);
    apply(s, graph, ModKind::Insert, 0, 0, 1);
    CHECK_THROWS_AS(s.apply(graph, {ModKind::Insert, 1, 1, 0}), CycleWouldForm);
    CHECK_THROWS_AS(s.apply(graph, {ModKind::Delete, 1, 0, 1}), DeleteAbsentEdge);
}

TEST_CASE("cfl random churn tracks the oracle") {
    std::mt19937_64 rng(41);
    CnfGrammar grammars[2] = {dyck(), anbn()};
    for (int trial = 0; trial < 20; ++trial) {
        const CnfGrammar& g = grammars[trial % 2];
        const int n = 5;
        CflState s(g, n);
        LabeledGraph graph(n, {"a", "b"}, true);
        for (int step = 0; step < 14; ++step) {
            bool do_delete = !graph.edges().empty() && rng() % 10 < 4;
            if (do_delete) {
                auto edges = std::vector<std::tuple<int, int, int>>(graph.edges().begin(),
                                                                    graph.edges().end());
                auto [u, sym, v] = edges[rng() % edges.size()];
                apply(s, graph, ModKind::Delete, sym, u, v);
            } else {
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u >= v) continue;  // keep it acyclic
                apply(s, graph, ModKind::Insert, static_cast<int>(rng() % 2), u, v);
            }
            REQUIRE(pairs(s.query()) == oracle_cfl(graph, g));
            REQUIRE(s.tc().relation() == oracle_reach(graph));
        }
    }
}
