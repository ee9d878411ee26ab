#ifndef DYNQ_PROD_HPP
#define DYNQ_PROD_HPP

#include <vector>

#include "dynq/dist.hpp"
#include "dynq/ecrpq.hpp"
#include "dynq/gf2.hpp"
#include "dynq/graph.hpp"
#include "dynq/queryspec.hpp"

namespace dynq {

/// Reachability in the synchronized product of unlabeled factor graphs:
/// some common length l <= prod |V_i| works in every factor.  Throws
/// BoundExceeded when a factor's maintained bound is too small.
bool product_reach(const std::vector<FactorDistState>& factors, const std::vector<int>& xs,
                   const std::vector<int>& ys);

/**
 * Reachability in the product of constantly many acyclic labeled
 * graphs, realized through the ECRPQ machinery with the label-equality
 * relation on m tapes.
 */
class LabeledProductState {
public:
    LabeledProductState() = default;
    explicit LabeledProductState(const std::vector<LabeledGraph>& factors);

    void update(int factor, const Modification& m);
    bool reach(const std::vector<int>& xs, const std::vector<int>& ys) const;

private:
    EcrpqState state_;
};

/**
 * Palindrome path query on an acyclic labeled graph, via the product of
 * the graph with its edge-reversal: even palindromes are paths from
 * (x,y) to (z,z); odd palindromes stop one edge short of meeting.
 */
class PalindromeState {
public:
    PalindromeState() = default;
    explicit PalindromeState(const LabeledGraph& g);

    void apply(const Modification& m);
    bool query(int x, int y) const;
    const LabeledGraph& graph() const { return graph_; }

private:
    LabeledGraph graph_;
    EcrpqState state_;  // copies: the graph and its reversal
};

bool palindrome_query_acyclic(const LabeledGraph& g, int x, int y);

/// Modification of a NEPS instance: either an edge modification of one
/// factor or one bit flip in a transition rule.
struct NepsModification {
    enum class Kind { Factor, RuleFlip } kind;
    int factor = 0;      // Factor: which factor
    Modification mod{};  // Factor: the edge change
    int rule = 0, bit = 0;  // RuleFlip
};

/**
 * Reachability in generalized graph products (NEPS) under factor edge
 * modifications and rule-bit flips.  Regimes: insert-only (directed
 * factors), acyclic, and undirected; the undirected regime answers
 * through per-factor parities and GF(2) solvability of B x = d.
 */
class NepsState {
public:
    NepsState() = default;
    NepsState(const NepsSpec& spec, const std::vector<LabeledGraph>& factors, DistRegime regime,
              int lmax = 0);

    const NepsSpec& spec() const { return spec_; }
    DistRegime regime() const { return regime_; }
    const LabeledGraph& factor_graph(int i) const { return factors_.at(i).graph(); }

    void update(const NepsModification& m);
    bool reach(const std::vector<int>& xs, const std::vector<int>& ys) const;

    /// The zeroed-rows rule matrix for a query pair (undirected regime).
    Gf2Matrix constraint_matrix(const std::vector<int>& xs) const;

private:
    bool reach_by_lengths(const std::vector<int>& xs, const std::vector<int>& ys) const;
    bool reach_undirected(const std::vector<int>& xs, const std::vector<int>& ys) const;

    NepsSpec spec_;
    DistRegime regime_ = DistRegime::InsertOnly;
    std::vector<FactorDistState> factors_;
    int lmax_ = 0;
};

}  // namespace dynq

#endif
