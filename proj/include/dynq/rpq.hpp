#ifndef DYNQ_RPQ_HPP
#define DYNQ_RPQ_HPP

#include <string>
#include <vector>

#include "dynq/bits.hpp"
#include "dynq/dfa.hpp"

namespace dynq {

/**
 * Insertion-only maintenance of a fixed regular path query.  One pair
 * relation R_{p,q} per DFA state pair: (x,y) is in R_{p,q} iff some
 * path from x to y (the empty path when x = y) can be read by the DFA
 * from state p to state q.  The query relation is the union of R_{s,f}
 * over final states f.
 *
 * Updates are quantifier-free compositions of the old relations with
 * the inserted pair; the graph itself is never consulted.
 */
class RpqState {
public:
    RpqState() = default;
    RpqState(const Dfa& dfa, int n);

    int n() const { return n_; }
    const Dfa& dfa() const { return dfa_; }

    bool pair(int p, int q, int x, int y) const { return rel_[p * states_ + q].test(x, y); }
    const BitMatrix& relation(int p, int q) const { return rel_[p * states_ + q]; }

    /// Bounded-loop reachability formula: paths from u to v readable
    /// p -> q in the graph extended by a sigma-edge (u, v), touching u
    /// at most i times, decided from the stored relations only.
    bool phi_reach(const std::string& sigma, int i, int p, int q, int u, int v) const;

    /// Simultaneous update of every R_{p,q} for the insertion of a
    /// sigma-labeled edge (u, v).  Deletions are not maintainable here
    /// and are rejected by callers (UnsupportedModification).
    void insert(const std::string& sigma, int u, int v);

    /// Current answer set, the union of R_{start,f}.
    BitMatrix query() const;

    /// Test support: overwrite one membership bit.  Leaves the state
    /// outside the reachable-invariant space on purpose.
    void inject_pair(int p, int q, int x, int y, bool present);

private:
    std::vector<std::vector<char>> phi_tables(const std::string& sigma, int u, int v) const;

    Dfa dfa_;
    int n_ = 0;
    int states_ = 0;
    std::vector<BitMatrix> rel_;  // indexed p * states_ + q
};

RpqState rpq_init(const Dfa& dfa, int n);
RpqState rpq_insert(const RpqState& s, const std::string& sigma, int u, int v);

}  // namespace dynq

#endif
