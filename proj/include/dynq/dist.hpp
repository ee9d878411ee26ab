#ifndef DYNQ_DIST_HPP
#define DYNQ_DIST_HPP

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "dynq/bits.hpp"
#include "dynq/graph.hpp"
#include "dynq/tc.hpp"

namespace dynq {

/**
 * All path lengths up to a bound, on general directed graphs under
 * insertions.  A holds (x,y,t,l) iff there are t (not necessarily
 * distinct) walks x -> y whose lengths sum to l, with t,l <= lmax.
 * The length-l query reads the t = 1 slice.
 */
class InsDistState {
public:
    InsDistState() = default;
    InsDistState(int n, int lmax);

    int n() const { return n_; }
    int lmax() const { return lmax_; }

    bool holds(int x, int y, int t, int l) const;
    bool has_length(int x, int y, int l) const;  // throws BoundExceeded for l > lmax

    /// Unlabeled edge insertion (u,v), computed from the pre-state by
    /// the quantified composition over non-users, users and cycles
    /// through the new edge.
    void insert(int u, int v);

    std::set<std::tuple<int, int, int>> length_triples() const;  // t = 1 projection

private:
    int n_ = 0;
    int lmax_ = 0;
    // grid_[x][y][t] = bitset over l
    std::vector<std::vector<std::vector<Bitset>>> grid_;
};

InsDistState insdist_init(int n, int lmax);
InsDistState insdist_insert(const InsDistState& s, int u, int v);

/**
 * All path lengths on acyclic graphs under insertions and deletions:
 * D(x,y,l) iff a path of length l exists.  Reuses the acyclic
 * transitive-closure program for the witness-edge deletion rule.
 */
class AcyDistState {
public:
    AcyDistState() = default;
    explicit AcyDistState(int n);

    int n() const { return n_; }
    const TcState& tc() const { return tc_; }
    bool has_length(int x, int y, int l) const;
    std::set<std::tuple<int, int, int>> length_triples() const;

    void apply(const LabeledGraph& g_before, const Modification& m);

private:
    void insert_union(int u, int v);
    void delete_union(const BitMatrix& old_edges, int u, int v);

    int n_ = 0;
    TcState tc_;
    std::vector<Bitset> d_;  // d_[x * n + y] = bitset over l, width n
};

AcyDistState acydist_init(int n);
AcyDistState acydist_update(const AcyDistState& s, const LabeledGraph& g_before,
                            const Modification& m);

/**
 * All walk lengths on undirected graphs under insertions and deletions,
 * via the parity rule: a length-m walk x..y exists iff m is odd and
 * m >= d_o(x,y), or m is even and m >= d_e(x,y); closed walks of
 * positive length additionally need a non-isolated endpoint.  The base
 * distances d_o/d_e are recomputed per modification by BFS on G x K2.
 */
class UndirDistState {
public:
    UndirDistState() = default;
    explicit UndirDistState(int n);

    int n() const { return n_; }
    static constexpr int kInf = -1;
    int d_odd(int x, int y) const { return d_odd_[x * n_ + y]; }
    int d_even(int x, int y) const { return d_even_[x * n_ + y]; }
    bool isolated(int x) const { return isolated_[x]; }
    bool connected(int x, int y) const;

    bool has_length(int x, int y, int l) const;

    /// Recomputes d_o, d_e and the isolated flags for the given graph
    /// (the post-modification graph).
    void recompute(const LabeledGraph& g_after);

private:
    int n_ = 0;
    std::vector<int> d_odd_, d_even_;  // kInf = unreachable
    std::vector<char> isolated_;
};

UndirDistState undir_init(const LabeledGraph& g);
UndirDistState undir_update(const UndirDistState& s, const LabeledGraph& g_after);

/**
 * Parikh distances under insertions: S(x,y,t,vec) iff t walks x -> y
 * jointly contain vec[i] occurrences of symbol i.  Vectors are bounded
 * componentwise and in total by lmax.  Internally vectors index a
 * padded-radix bitset so that vector addition becomes a shift.
 */
class ParikhState {
public:
    ParikhState() = default;
    ParikhState(int n, int k, int lmax);

    int n() const { return n_; }
    int k() const { return k_; }
    int lmax() const { return lmax_; }

    bool holds(int x, int y, int t, const std::vector<int>& vec) const;
    bool has_vector(int x, int y, const std::vector<int>& vec) const;  // t = 1

    /// Insertion of an edge (u,v) labeled with symbol index sym.
    void insert(int sym, int u, int v);

    std::set<std::tuple<int, int, std::vector<int>>> vector_triples() const;  // t = 1

private:
    int radix_ = 0;
    int space_ = 0;  // radix^k
    Bitset valid_;   // indices whose digits are <= lmax and sum <= lmax
    int offset_of(int sym) const;
    int encode(const std::vector<int>& vec) const;
    std::vector<int> decode(int idx) const;

    int n_ = 0, k_ = 0, lmax_ = 0;
    // grid_[x][y][t] = bitset over vector index
    std::vector<std::vector<std::vector<Bitset>>> grid_;
};

ParikhState parikh_init(int n, int k, int lmax);
ParikhState parikh_insert(const ParikhState& s, int sym, int u, int v);

/// Distance-state regimes shared by the product and NEPS machinery.
enum class DistRegime { InsertOnly, Acyclic, Undirected };

/// One factor graph together with the distance program matching the
/// regime.  has_length answers bounded length queries; apply routes a
/// modification to the right update procedure.
class FactorDistState {
public:
    FactorDistState() = default;
    FactorDistState(const LabeledGraph& g, DistRegime regime, int lmax);

    const LabeledGraph& graph() const { return graph_; }
    DistRegime regime() const { return regime_; }
    int lmax_bound() const;  // largest l answerable exactly (-1 = unbounded)
    bool has_length(int x, int y, int l) const;
    const UndirDistState& undirected() const;

    void apply(const Modification& m);

private:
    LabeledGraph graph_;
    DistRegime regime_ = DistRegime::InsertOnly;
    InsDistState ins_;
    AcyDistState acy_;
    UndirDistState und_;
};

/**
 * The shipped non-context-free example query a^n b^n c^n: answers
 * (x,y) such that some path x -> y is labeled a^n b^n c^n, maintained
 * through per-symbol distance states.
 */
class AnbncnState {
public:
    AnbncnState() = default;
    AnbncnState(const LabeledGraph& g, DistRegime regime, int lmax);

    void apply(const Modification& m);
    bool query(int x, int y) const;

private:
    LabeledGraph graph_;
    DistRegime regime_ = DistRegime::Acyclic;
    int lmax_ = 0;
    std::vector<FactorDistState> per_symbol_;  // one per alphabet symbol, order a,b,c
};

}  // namespace dynq

#endif
