#include <doctest.h>

#include <random>

#include "dynq/errors.hpp"
#include "dynq/oracle.hpp"
#include "dynq/prod.hpp"

using namespace dynq;

namespace {

LabeledGraph chain(int n, bool directed = true) {
    LabeledGraph g(n, {"a"}, directed);
    for (int i = 0; i + 1 < n; ++i) g.apply({ModKind::Insert, 0, i, i + 1});
    return g;
}

LabeledGraph cycle(int n) {
    LabeledGraph g(n, {"a"}, true);
    for (int i = 0; i < n; ++i) g.apply({ModKind::Insert, 0, i, (i + 1) % n});
    return g;
}

}  // namespace

TEST_CASE("product_reach on two equal chains") {
    std::vector<FactorDistState> factors;
    factors.emplace_back(chain(3), DistRegime::Acyclic, 0);
    factors.emplace_back(chain(3), DistRegime::Acyclic, 0);
    CHECK(product_reach(factors, {0, 0}, {2, 2}));
    CHECK(product_reach(factors, {0, 1}, {1, 2}));
    CHECK(!product_reach(factors, {2, 2}, {0, 0}));
}

TEST_CASE("product_reach on mismatched chains") {
    std::vector<FactorDistState> factors;
    factors.emplace_back(chain(3), DistRegime::Acyclic, 0);
    factors.emplace_back(chain(4), DistRegime::Acyclic, 0);
    CHECK(!product_reach(factors, {0, 0}, {2, 3}));  // lengths 2 vs 3
}

TEST_CASE("product_reach on C2 x C3 reaches everything") {
    std::vector<LabeledGraph> graphs = {cycle(2), cycle(3)};
    std::vector<FactorDistState> factors;
    for (const auto& g : graphs) factors.emplace_back(g, DistRegime::InsertOnly, 6);
    ExplicitProduct oracle(graphs, {}, false);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto xs = oracle.decode(a), ys = oracle.decode(b);
            CHECK(product_reach(factors, xs, ys));
            CHECK(oracle.reachable(xs, ys));
        }
}

TEST_CASE("product_reach checks the factor bound") {
    std::vector<FactorDistState> factors;
    factors.emplace_back(cycle(3), DistRegime::InsertOnly, 4);  // need 9
    factors.emplace_back(cycle(3), DistRegime::InsertOnly, 4);
    CHECK_THROWS_AS(product_reach(factors, {0, 0}, {1, 1}), BoundExceeded);
}

TEST_CASE("labeled product of identical chains") {
    LabeledGraph g1(3, {"a", "b"}, true);
    g1.apply({ModKind::Insert, 0, 0, 1});
    g1.apply({ModKind::Insert, 1, 1, 2});
    LabeledProductState state({g1, g1});
    CHECK(state.reach({0, 0}, {2, 2}));
    CHECK(state.reach({0, 0}, {1, 1}));
    CHECK(!state.reach({0, 1}, {1, 2}));  // reads a vs b
}

TEST_CASE("labeled product: ab vs ba never meets") {
    LabeledGraph g1(3, {"a", "b"}, true);
    g1.apply({ModKind::Insert, 0, 0, 1});
    g1.apply({ModKind::Insert, 1, 1, 2});
    LabeledGraph g2(3, {"a", "b"}, true);
    g2.apply({ModKind::Insert, 1, 0, 1});
    g2.apply({ModKind::Insert, 0, 1, 2});
    LabeledProductState state({g1, g2});
    CHECK(!state.reach({0, 0}, {2, 2}));
    CHECK(state.reach({0, 1}, {1, 2}));  // both read a? no: g1 reads a, g2 reads a on 1->2
}

TEST_CASE("palindrome queries on small DAGs") {
    SUBCASE("single edge") {
        LabeledGraph g(2, {"a", "b"}, true);
        g.apply({ModKind::Insert, 0, 0, 1});
        CHECK(palindrome_query_acyclic(g, 0, 1));  // "a"
        CHECK(palindrome_query_acyclic(g, 0, 0));  // epsilon
        CHECK(!palindrome_query_acyclic(g, 1, 0));
    }
    SUBCASE("chain ab") {
        LabeledGraph g(3, {"a", "b"}, true);
        g.apply({ModKind::Insert, 0, 0, 1});
        g.apply({ModKind::Insert, 1, 1, 2});
        CHECK(!palindrome_query_acyclic(g, 0, 2));
    }
    SUBCASE("chain aba") {
        LabeledGraph g(4, {"a", "b"}, true);
        g.apply({ModKind::Insert, 0, 0, 1});
        g.apply({ModKind::Insert, 1, 1, 2});
        g.apply({ModKind::Insert, 0, 2, 3});
        CHECK(palindrome_query_acyclic(g, 0, 3));
        // brute-force enumeration agrees on every pair
        auto paths = oracle_dag_path_labels(g);
        std::set<std::pair<int, int>> expected;
        for (const auto& [x, y, w] : paths) {
            bool pal = true;
            for (size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
                if (w[i] != w[j - 1]) pal = false;
            if (pal) expected.insert({x, y});
        }
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                CHECK(palindrome_query_acyclic(g, x, y) == (expected.count({x, y}) > 0));
    }
}

TEST_CASE("palindrome state follows modifications") {
    LabeledGraph g(4, {"a", "b"}, true);
    PalindromeState state(g);
    state.apply({ModKind::Insert, 0, 0, 1});
    state.apply({ModKind::Insert, 1, 1, 2});
    CHECK(!state.query(0, 2));  // ab
    state.apply({ModKind::Insert, 0, 2, 3});
    CHECK(state.query(0, 3));  // aba
    state.apply({ModKind::Delete, 1, 1, 2});
    CHECK(!state.query(0, 3));
}

TEST_CASE("neps cartesian rules walk the grid corner to corner") {
    NepsSpec spec;
    spec.factors = 2;
    spec.rules = {{1, 0}, {0, 1}};
    std::vector<LabeledGraph> factors = {chain(3), chain(3)};
    NepsState state(spec, factors, DistRegime::InsertOnly, 9);
    CHECK(state.reach({0, 0}, {2, 2}));
    CHECK(state.reach({0, 0}, {2, 0}));
    CHECK(!state.reach({2, 2}, {0, 0}));
}

TEST_CASE("neps undirected single-edge factors under rule (1,1)") {
    LabeledGraph e(2, {"a"}, false);
    e.apply({ModKind::Insert, 0, 0, 1});
    NepsSpec spec;
    spec.factors = 2;
    spec.rules = {{1, 1}};
    NepsState state(spec, {e, e}, DistRegime::Undirected);
    CHECK(state.reach({0, 0}, {1, 1}));   // d = (1,1), x = 1 solves
    CHECK(!state.reach({0, 0}, {1, 0}));  // d = (1,0) unsolvable
    Gf2Matrix b = state.constraint_matrix({0, 0});
    CHECK(b.rows() == 2);
    CHECK(b.cols() == 1);
    CHECK(b.get(0, 0));
    CHECK(b.get(1, 0));
}

TEST_CASE("neps acyclic regime with mismatched chains") {
    NepsSpec spec;
    spec.factors = 2;
    spec.rules = {{1, 1}};
    std::vector<LabeledGraph> factors = {chain(3), chain(4)};
    NepsState state(spec, factors, DistRegime::Acyclic);
    CHECK(!state.reach({0, 0}, {2, 3}));
    CHECK(state.reach({0, 0}, {2, 2}));
}

TEST_CASE("neps rule flips change the move structure") {
    NepsSpec spec;
    spec.factors = 2;
    spec.rules = {{1, 1}};
    std::vector<LabeledGraph> factors = {chain(3), chain(3)};
    NepsState state(spec, factors, DistRegime::Acyclic);
    CHECK(!state.reach({0, 0}, {1, 0}));  // synchronized only
    state.update(NepsModification{NepsModification::Kind::RuleFlip, 0, {}, 0, 1});
    // rule is now (1,0): factor 0 moves alone
    CHECK(state.reach({0, 0}, {1, 0}));
    ExplicitProduct oracle(factors, {{1, 0}}, false);
    for (int64_t a = 0; a < oracle.node_count(); ++a)
        for (int64_t b = 0; b < oracle.node_count(); ++b) {
            auto xs = oracle.decode(a), ys = oracle.decode(b);
            CHECK(state.reach(xs, ys) == oracle.reachable(xs, ys));
        }
}

TEST_CASE("neps factor updates delegate to the distance program") {
    NepsSpec spec;
    spec.factors = 2;
    spec.rules = {{1, 1}};
    std::vector<LabeledGraph> factors = {LabeledGraph(3, {"a"}, true),
                                         LabeledGraph(3, {"a"}, true)};
    NepsState state(spec, factors, DistRegime::InsertOnly, 9);
    CHECK(!state.reach({0, 0}, {1, 1}));
    state.update(
        NepsModification{NepsModification::Kind::Factor, 0, {ModKind::Insert, 0, 0, 1}, 0, 0});
    state.update(
        NepsModification{NepsModification::Kind::Factor, 1, {ModKind::Insert, 0, 0, 1}, 0, 0});
    CHECK(state.reach({0, 0}, {1, 1}));
}

TEST_CASE("complexity guards reject the NP-hard configurations") {
    NepsSpec many_rules;
    many_rules.factors = 1;
    for (int i = 0; i < 9; ++i) many_rules.rules.push_back({1});
    CHECK_THROWS_AS(NepsState(many_rules, {chain(2)}, DistRegime::InsertOnly),
                    ComplexityGuard);

    NepsSpec spec;
    spec.factors = 9;
    spec.rules = {std::vector<int>(9, 1)};
    std::vector<LabeledGraph> factors(9, chain(2));
    CHECK_THROWS_AS(NepsState(spec, factors, DistRegime::InsertOnly), ComplexityGuard);
}

TEST_CASE("gf2 rank examples") {
    Gf2Matrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.set(i, i, true);
    CHECK(gf2_rank(id3) == 3);

    CHECK(gf2_rank(Gf2Matrix(3, 3)) == 0);

    Gf2Matrix m(3, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 0, true);
    m.set(1, 1, true);
    m.set(2, 1, true);
    CHECK(gf2_rank(m) == 2);
    // row-span enumeration: 2^rank distinct vectors
    std::set<std::pair<bool, bool>> span;
    for (int mask = 0; mask < 8; ++mask) {
        bool c0 = false, c1 = false;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) {
                c0 ^= m.get(i, 0);
                c1 ^= m.get(i, 1);
            }
        span.insert({c0, c1});
    }
    CHECK(span.size() == 4);
}

TEST_CASE("gf2 solvability via augmented rank") {
    Gf2Matrix b(2, 1);
    b.set(0, 0, true);
    b.set(1, 0, true);
    CHECK(gf2_solvable(b, {1, 1}));
    CHECK(!gf2_solvable(b, {1, 0}));
    CHECK(gf2_solvable(b, {0, 0}));
}
