#ifndef DYNQ_ORACLE_HPP
#define DYNQ_ORACLE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dynq/bits.hpp"
#include "dynq/dfa.hpp"
#include "dynq/grammar.hpp"
#include "dynq/graph.hpp"
#include "dynq/queryspec.hpp"
#include "dynq/sync.hpp"

namespace dynq {

/// Enumeration limits for the oracles that materialize product spaces
/// or enumerate paths.
struct OracleBudget {
    int64_t max_path_length = 64;
    int64_t max_enumeration = 4'000'000;
};

/// Reflexive-transitive closure of the union graph, by breadth-first
/// search from every node.
BitMatrix oracle_reach(const LabeledGraph& g);

/// All (x, y, l) with a walk of length l <= lmax from x to y in the
/// union graph, by iterated boolean relation composition.
std::set<std::tuple<int, int, int>> oracle_length_sets(const LabeledGraph& g, int lmax);

/// As above but restricted to edges with the given symbol.
std::set<std::tuple<int, int, int>> oracle_length_sets_symbol(const LabeledGraph& g, int sym,
                                                              int lmax);

/// Pairs connected by an L(dfa)-path, by BFS over graph x DFA.
std::set<std::pair<int, int>> oracle_rpq(const LabeledGraph& g, const Dfa& dfa);

/// Pairs connected by an L(grammar)-path, by the standard
/// CFL-reachability worklist fixpoint.
std::set<std::pair<int, int>> oracle_cfl(const LabeledGraph& g, const CnfGrammar& grammar);

/// All (x, y, parikh vector) realizable by a path whose per-symbol
/// counts are componentwise <= lmax and sum to <= lmax.
std::set<std::tuple<int, int, std::vector<int>>> oracle_parikh(const LabeledGraph& g, int lmax);

/// Every label word of every path in an acyclic graph, as
/// (x, y, word) triples.  Throws BudgetExceeded on explosion.
std::vector<std::tuple<int, int, std::vector<std::string>>> oracle_dag_path_labels(
    const LabeledGraph& g, const OracleBudget& budget = {});

/// Explicitly materialized product graph: nodes are tuples of factor
/// nodes.  `rules` empty means the fully synchronized product (all
/// factors step); labeled products additionally require a common edge
/// label per step.
class ExplicitProduct {
public:
    ExplicitProduct(const std::vector<LabeledGraph>& factors,
                    const std::vector<std::vector<int>>& rules, bool labeled,
                    const OracleBudget& budget = {});

    int64_t node_count() const { return total_; }
    int64_t encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(int64_t id) const;
    bool reachable(const std::vector<int>& from, const std::vector<int>& to) const;

private:
    std::vector<int> sizes_;
    int64_t total_ = 1;
    std::vector<std::vector<int64_t>> adj_;
};

/// Head tuples of an ECRPQ plan over m disjoint acyclic copies,
/// computed by product construction with Parikh bookkeeping and exact
/// constraint filtering.  `head_slots` maps head positions to
/// (atom, is_y) endpoint slots and `shared` lists node-variable
/// equalities as (atom a, is_y, atom b, is_y) pairs.
struct EcrpqOracleQuery {
    SyncAutomaton plan;                          // arity = number of copies
    std::vector<std::pair<int, bool>> head_slots;
    std::vector<std::tuple<int, bool, int, bool>> shared;
    std::vector<ConstraintRow> constraints;      // over l_{i,j}, alphabet order
    std::vector<std::string> alphabet;
};

std::set<std::vector<int>> oracle_ecrpq(const EcrpqOracleQuery& q,
                                        const std::vector<LabeledGraph>& copies,
                                        const OracleBudget& budget = {});

}  // namespace dynq

#endif
