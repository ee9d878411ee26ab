#ifndef DYNQ_CFL_HPP
#define DYNQ_CFL_HPP

#include <set>
#include <vector>

#include "dynq/bits.hpp"
#include "dynq/grammar.hpp"
#include "dynq/graph.hpp"
#include "dynq/tc.hpp"

namespace dynq {

/**
 * 4-ary relation over graph nodes holding "context chunks": a tuple
 * (a, b, c, d) stands for a left path a -> b, a rule hole, and a right
 * path c -> d.  Stored as one inner bitset over (b, c) per outer pair
 * (a, d), which makes context composition a masked union.
 */
class Rel4 {
public:
    Rel4() = default;
    explicit Rel4(int n) : n_(n), inner_(static_cast<size_t>(n) * n, Bitset(n * n)) {}

    int n() const { return n_; }
    bool test(int a, int b, int c, int d) const { return inner_[a * n_ + d].test(b * n_ + c); }
    void set(int a, int b, int c, int d) { inner_[a * n_ + d].set(b * n_ + c); }
    const Bitset& inner(int a, int d) const { return inner_[a * n_ + d]; }
    Bitset& inner(int a, int d) { return inner_[a * n_ + d]; }

    bool operator==(const Rel4& o) const { return n_ == o.n_ && inner_ == o.inner_; }

    Rel4& operator|=(const Rel4& o) {
        for (size_t i = 0; i < inner_.size(); ++i) inner_[i] |= o.inner_[i];
        return *this;
    }

    template <typename F>
    void for_each_tuple(F&& f) const {
        for (int a = 0; a < n_; ++a)
            for (int d = 0; d < n_; ++d)
                inner_[a * n_ + d].for_each([&](int bc) { f(a, bc / n_, bc % n_, d); });
    }

    /// Plugs the hole of P with a Q-chunk:
    /// out(a,b,c,d) = exists m,m': P(a,m,m',d) and Q(m,b,c,m').
    static Rel4 compose(const Rel4& p, const Rel4& q);

    /// out(a,b,c,d) = exists t: bin(a,t) and s(t,b,c,d).
    static Rel4 glue_left(const BitMatrix& bin, const Rel4& s);

    /// out(a,b,c,d) = exists t: s(a,b,c,t) and bin(t,d).
    static Rel4 glue_right(const Rel4& s, const BitMatrix& bin);

    /// out(a,d) = exists (e,e') in edges: s(a,e,e',d).
    static BitMatrix plug(const Rel4& s, const Bitset& edges);

private:
    int n_ = 0;
    std::vector<Bitset> inner_;
};

/**
 * Maintenance of a fixed context-free path query on acyclic graphs
 * under insertions and deletions.  One 4-ary relation per ordered
 * variable pair: (x1,y1,x2,y2) is in R_{X->Y} iff X derives a
 * sentential form s1 Y s2 with an s1-path x1 -> y1 and an s2-path
 * x2 -> y2.  All relations, the transitive closure T and the answer Q
 * are updated simultaneously from the pre-state.
 */
class CflState {
public:
    CflState() = default;
    CflState(const CnfGrammar& grammar, int n);

    int n() const { return n_; }
    const CnfGrammar& grammar() const { return grammar_; }
    const TcState& tc() const { return tc_; }
    const Rel4& relation(int X, int Y) const { return rel_[X * vars_ + Y]; }
    const BitMatrix& query() const { return answer_; }

    /// Applies one edge modification.  g_before is the graph before the
    /// change; throws CycleWouldForm / DeleteAbsentEdge with the state
    /// unchanged.
    void apply(const LabeledGraph& g_before, const Modification& m);

    /// Derived relation R_{X -> Y1..Yk} (k <= 3) materialized from the
    /// stored binary-hole relations, as tuples (x1,y1,...,x_{k+1},y_{k+1}).
    /// Meant for small domains; throws ArityUnsupported for k > 3.
    std::set<std::vector<int>> derived(int X, const std::vector<int>& Ys) const;

private:
    void insert_edge(const LabeledGraph& g_before, int sym, int u, int v);
    void delete_edge(const LabeledGraph& g_before, int sym, int u, int v);
    void refresh_query(const LabeledGraph& g_after);
    BitMatrix preterm_plug(int Z, const std::vector<Bitset>& mask_by_var) const;

    CnfGrammar grammar_;
    int n_ = 0;
    int vars_ = 0;
    std::vector<Rel4> rel_;  // indexed X * vars_ + Y
    TcState tc_;
    BitMatrix answer_;
};

CflState cfl_init(const CnfGrammar& grammar, int n);
CflState cfl_update(const CflState& s, const LabeledGraph& g_before, const Modification& m);

}  // namespace dynq

#endif
