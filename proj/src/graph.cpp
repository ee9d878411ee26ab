#include "dynq/graph.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "dynq/errors.hpp"

namespace dynq {

LabeledGraph::LabeledGraph(int n, std::vector<std::string> alphabet, bool directed)
    : n_(n), directed_(directed), alphabet_(std::move(alphabet)) {
    if (n < 0) throw ParseError("domain size must be non-negative");
    for (int i = 0; i < static_cast<int>(alphabet_.size()); ++i) {
        if (!symbol_index_.emplace(alphabet_[i], i).second)
            throw ParseError("duplicate alphabet symbol " + alphabet_[i]);
    }
}

int LabeledGraph::symbol(const std::string& name) const {
    auto it = symbol_index_.find(name);
    return it == symbol_index_.end() ? -1 : it->second;
}

bool LabeledGraph::has_edge(int u, int sym, int v) const {
    return edges_.count({u, sym, v}) > 0;
}

bool LabeledGraph::has_union_edge(int u, int v) const {
    for (int s = 0; s < alphabet_size(); ++s)
        if (has_edge(u, s, v)) return true;
    return false;
}

int LabeledGraph::union_out_degree(int u) const {
    std::set<int> targets;
    for (const auto& [a, s, b] : edges_)
        if (a == u) targets.insert(b);
    return static_cast<int>(targets.size());
}

std::vector<std::pair<int, int>> LabeledGraph::edges_with_symbol(int sym) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, s, v] : edges_)
        if (s == sym) out.emplace_back(u, v);
    return out;
}

void LabeledGraph::check_mod(const Modification& m) const {
    if (m.sym < 0 || m.sym >= alphabet_size())
        throw ParseError("modification uses a symbol outside the alphabet");
    if (m.u < 0 || m.u >= n_ || m.v < 0 || m.v >= n_)
        throw ParseError("modification uses a node outside the domain");
}

void LabeledGraph::insert_edge(int u, int sym, int v) {
    edges_.insert({u, sym, v});
    if (!directed_) edges_.insert({v, sym, u});
}

void LabeledGraph::erase_edge(int u, int sym, int v) {
    edges_.erase({u, sym, v});
    if (!directed_) edges_.erase({v, sym, u});
}

void LabeledGraph::apply(const Modification& m) {
    check_mod(m);
    if (m.kind == ModKind::Insert) {
        insert_edge(m.u, m.sym, m.v);
    } else {
        if (!has_edge(m.u, m.sym, m.v))
            throw DeleteAbsentEdge(alphabet_[m.sym], m.u, m.v);
        erase_edge(m.u, m.sym, m.v);
    }
}

bool LabeledGraph::is_acyclic() const {
    // Kahn's algorithm on the union graph.
    std::vector<int> indeg(n_, 0);
    std::vector<std::vector<int>> out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_union_edge(u, v)) {
                out[u].push_back(v);
                ++indeg[v];
            }
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n_;
}

LabeledGraph apply_mod(const LabeledGraph& g, const Modification& m) {
    LabeledGraph out = g;
    out.apply(m);
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

int parse_node(const std::string& tok, int n) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a node id, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("expected a node id, got '" + tok + "'");
    if (v < 0 || v >= n) throw ParseError("node id " + tok + " outside domain");
    return v;
}

}  // namespace

LabeledGraph parse_graph(std::istream& in) {
    int n = -1;
    bool directed = true;
    bool mode_seen = false;
    std::vector<std::string> alphabet;
    std::vector<std::vector<std::string>> edge_lines;

    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "domain") {
            if (toks.size() != 2) throw ParseError("domain expects one argument");
            n = std::stoi(toks[1]);
        } else if (head == "alphabet") {
            alphabet.assign(toks.begin() + 1, toks.end());
        } else if (head == "mode") {
            if (toks.size() != 2 || (toks[1] != "directed" && toks[1] != "undirected"))
                throw ParseError("mode expects 'directed' or 'undirected'");
            directed = toks[1] == "directed";
            mode_seen = true;
        } else if (head == "edge") {
            if (toks.size() != 4) throw ParseError("edge expects <sym> <u> <v>");
            edge_lines.push_back({toks[1], toks[2], toks[3]});
        } else {
            throw ParseError("unknown graph directive '" + head + "'");
        }
    }
    if (n < 0) throw ParseError("graph file is missing a domain line");
    (void)mode_seen;

    LabeledGraph g(n, alphabet, directed);
    for (const auto& e : edge_lines) {
        int sym = g.symbol(e[0]);
        if (sym < 0) throw ParseError("edge symbol '" + e[0] + "' not in alphabet");
        Modification m{ModKind::Insert, sym, parse_node(e[1], n), parse_node(e[2], n)};
        g.apply(m);
    }
    return g;
}

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file " + path);
    return parse_graph(in);
}

Modification parse_modification(const LabeledGraph& g, const std::string& kind,
                                const std::string& sym, const std::string& u,
                                const std::string& v) {
    Modification m;
    if (kind == "ins")
        m.kind = ModKind::Insert;
    else if (kind == "del")
        m.kind = ModKind::Delete;
    else
        throw ParseError("unknown modification kind '" + kind + "'");
    m.sym = g.symbol(sym);
    if (m.sym < 0) throw ParseError("symbol '" + sym + "' not in alphabet");
    m.u = parse_node(u, g.n());
    m.v = parse_node(v, g.n());
    return m;
}

}  // namespace dynq
