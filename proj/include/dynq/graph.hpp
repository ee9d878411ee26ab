#ifndef DYNQ_GRAPH_HPP
#define DYNQ_GRAPH_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace dynq {

enum class ModKind { Insert, Delete };

/// A single edge modification: insert or delete one labeled edge.
struct Modification {
    ModKind kind;
    int sym;  // index into the graph's alphabet
    int u;
    int v;
};

/**
 * Finite labeled graph over a fixed node domain {0..n-1} and a fixed,
 * ordered alphabet.  Undirected graphs store both orientations of every
 * edge.  This is the mutable input database every dynamic program runs
 * against.
 */
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(int n, std::vector<std::string> alphabet, bool directed);

    int n() const { return n_; }
    bool directed() const { return directed_; }
    int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::string& symbol_name(int s) const { return alphabet_[s]; }

    /// Index of a symbol, or -1 if unknown.
    int symbol(const std::string& name) const;

    bool has_edge(int u, int sym, int v) const;
    /// True if some label connects u to v.
    bool has_union_edge(int u, int v) const;
    int union_out_degree(int u) const;

    const std::set<std::tuple<int, int, int>>& edges() const { return edges_; }
    std::vector<std::pair<int, int>> edges_with_symbol(int sym) const;

    /// Applies m.  Insert of a present edge is a no-op; delete of an
    /// absent edge throws DeleteAbsentEdge.
    void apply(const Modification& m);

    /// Validates symbol and node bounds, throws ParseError if violated.
    void check_mod(const Modification& m) const;

    bool is_acyclic() const;

private:
    void insert_edge(int u, int sym, int v);
    void erase_edge(int u, int sym, int v);

    int n_ = 0;
    bool directed_ = true;
    std::vector<std::string> alphabet_;
    std::map<std::string, int> symbol_index_;
    std::set<std::tuple<int, int, int>> edges_;  // (u, sym, v)
};

LabeledGraph apply_mod(const LabeledGraph& g, const Modification& m);

/// Parses the line-oriented graph file format:
///   domain <n> / alphabet <s1> <s2> ... / mode directed|undirected /
///   edge <sym> <u> <v>, with '#' comments.
LabeledGraph parse_graph(std::istream& in);
LabeledGraph load_graph(const std::string& path);

Modification parse_modification(const LabeledGraph& g, const std::string& kind,
                                const std::string& sym, const std::string& u,
                                const std::string& v);

}  // namespace dynq

#endif
