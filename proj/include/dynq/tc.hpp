#ifndef DYNQ_TC_HPP
#define DYNQ_TC_HPP

#include "dynq/bits.hpp"
#include "dynq/graph.hpp"

namespace dynq {

/**
 * Transitive-closure maintenance for graphs that stay acyclic.  T stores
 * the reflexive-transitive closure of the union graph (the diagonal is
 * always present); edge labels are ignored.  Updates use only the old T,
 * the old edge set and the modified pair, never a traversal.
 */
class TcState {
public:
    TcState() = default;
    /// Initial state for an empty graph on n nodes: T is the diagonal.
    explicit TcState(int n, bool acyclic_mode = true);

    int n() const { return static_cast<int>(t_.n()); }
    bool reaches(int x, int y) const { return t_.test(x, y); }
    const BitMatrix& relation() const { return t_; }

    /// True iff inserting u -> v would close a cycle: u = v, or v
    /// already reaches u by a path of length >= 1.
    bool cycle_check(int u, int v) const;

    /// Updates T for modification m applied to g_before.  Throws
    /// CycleWouldForm (state unchanged) when an insert would create a
    /// cycle in acyclic mode, DeleteAbsentEdge for a bad delete.
    void apply(const LabeledGraph& g_before, const Modification& m);

    /// Update for the unlabeled view: the union edge (u,v) appears or
    /// disappears.  `union_edges` must describe the union graph before
    /// the modification.
    void apply_union(const BitMatrix& union_edges, ModKind kind, int u, int v);

private:
    BitMatrix t_;
    bool acyclic_mode_ = true;
};

/// Union graph of g as an adjacency bit-matrix.
BitMatrix union_adjacency(const LabeledGraph& g);

/// Functional form of TcState::apply.
TcState tc_update(const TcState& s, const LabeledGraph& g_before, const Modification& m);

}  // namespace dynq

#endif
