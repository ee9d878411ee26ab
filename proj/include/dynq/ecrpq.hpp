#ifndef DYNQ_ECRPQ_HPP
#define DYNQ_ECRPQ_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dynq/dfa.hpp"
#include "dynq/dist.hpp"
#include "dynq/graph.hpp"
#include "dynq/queryspec.hpp"
#include "dynq/sync.hpp"
#include "dynq/tc.hpp"

namespace dynq {

/**
 * Normalized ECRPQ: a single synchronous automaton of arity m (one tape
 * per path atom), obtained as the synchronized product of the query's
 * relation automata, plus the endpoint-variable structure and the
 * linear constraint system.
 */
struct EcrpqPlan {
    SyncAutomaton automaton;              // arity = atom count
    std::vector<std::string> alphabet;    // symbol order for counts
    std::vector<std::pair<int, bool>> head_slots;            // (atom, is_y)
    std::vector<std::tuple<int, bool, int, bool>> shared;    // endpoint equalities
    std::vector<ConstraintRow> constraints;

    int arity() const { return automaton.arity; }
};

/// Synchronized-product compilation; tapes not constrained by any
/// relation read Sigma and the padding symbol freely, tracked by
/// per-tape finished bits so the padding discipline survives.
EcrpqPlan ecrpq_compile(const EcrpqQuery& q, const std::vector<std::string>& alphabet);

/// One maintained tuple of an ECRPQ pair relation.
struct EcrpqTuple {
    std::vector<int> xs, ys;               // per-copy endpoints
    std::vector<std::vector<int>> counts;  // per-copy symbol counts

    auto tie() const { return std::tie(xs, ys, counts); }
    bool operator<(const EcrpqTuple& o) const { return tie() < o.tie(); }
    bool operator==(const EcrpqTuple& o) const { return tie() == o.tie(); }
};

/**
 * ECRPQ maintenance over m disjoint acyclic copies.  R_{p,q} holds
 * (x⃗, y⃗, l⃗_1..l⃗_m) iff the plan automaton can go from p to q reading
 * a tuple of copy paths x_i -> y_i with the given per-copy symbol
 * counts.  Insertions extend the relations from a pre-state snapshot by
 * prefix/step/suffix composition around the new edge; deletions are
 * answered by an acyclic fixpoint recomputation.
 */
class EcrpqState {
public:
    EcrpqState() = default;
    EcrpqState(const EcrpqPlan& plan, const std::vector<LabeledGraph>& copies);

    const EcrpqPlan& plan() const { return plan_; }
    const std::vector<LabeledGraph>& copies() const { return copies_; }
    const std::set<EcrpqTuple>& relation(int p, int q) const;

    /// Modification of copy i.  Throws CycleWouldForm / DeleteAbsentEdge
    /// with the state unchanged.
    void update(int copy, const Modification& m);

    /// Head tuples: accepting relation entries filtered by endpoint
    /// sharing and the linear constraints, projected to the head.
    std::set<std::vector<int>> eval() const;

private:
    void recompute();
    void insert_edge(int copy, int sym, int u, int v);

    EcrpqPlan plan_;
    std::vector<LabeledGraph> copies_;
    std::vector<TcState> tc_;
    std::map<std::pair<int, int>, std::set<EcrpqTuple>> rel_;
};

/// CRPQ with linear constraints: per-atom regular languages given as
/// DFAs, endpoints given as variable names.
struct CrpqQuery {
    struct Atom {
        std::string x, y;
        Dfa dfa;
    };
    std::vector<Atom> atoms;
    std::vector<std::string> head;
    std::vector<ConstraintRow> constraints;  // width = atoms * alphabet size
};

/**
 * Insertion-only CRPQ+LC maintenance on general graphs: one Parikh
 * state per atom over the product graph G x A_j.  Answers use the
 * bounded-witness semantics with per-path length at most lmax.
 */
class CrpqState {
public:
    CrpqState() = default;
    CrpqState(const CrpqQuery& q, const LabeledGraph& g, int lmax);

    int lmax() const { return lmax_; }

    /// Graph edge insertion; updates every per-atom product state.
    void insert(int sym, int u, int v);

    std::set<std::vector<int>> eval() const;

    /// Derived per-atom relation R^j_{s,f} at t=1: (x, y, vec) triples.
    std::set<std::tuple<int, int, std::vector<int>>> atom_relation(int atom) const;

private:
    CrpqQuery query_;
    int n_ = 0, k_ = 0, lmax_ = 0;
    std::vector<std::string> alphabet_;
    std::vector<ParikhState> product_;  // per atom, nodes (v, state)
};

}  // namespace dynq

#endif
