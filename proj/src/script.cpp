#include "dynq/script.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dynq/cfl.hpp"
#include "dynq/ecrpq.hpp"
#include "dynq/errors.hpp"
#include "dynq/prod.hpp"
#include "dynq/rpq.hpp"
#include "dynq/tc.hpp"

namespace dynq {

void Engine::flip(int, int) {
    throw UnsupportedModification("this program has no transition rules to flip");
}

namespace {

void emit_pairs(const BitMatrix& rel, std::ostream& out, const std::string& prefix) {
    for (auto [x, y] : rel.pairs())
        out << prefix << "(" << x << "," << y << ")\n";
}

void emit_bool(bool v, std::ostream& out, const std::string& prefix) {
    out << prefix << (v ? "true" : "false") << "\n";
}

int to_node(const std::string& tok, int n) {
    int v = std::stoi(tok);
    if (v < 0 || v >= n) throw ParseError("query node " + tok + " outside domain");
    return v;
}

std::vector<int> to_nodes(const std::vector<std::string>& args, size_t from, size_t count,
                          int n) {
    std::vector<int> out;
    for (size_t i = from; i < from + count; ++i) out.push_back(to_node(args[i], n));
    return out;
}

// --------------------------------------------------------------------------

class TcEngine : public Engine {
public:
    explicit TcEngine(const LabeledGraph& g)
        : g_(g.n(), g.alphabet(), g.directed()), tc_(g.n()) {
        for (const auto& [u, s, v] : g.edges()) {
            Modification m{ModKind::Insert, s, u, v};
            tc_.apply(g_, m);
            g_.apply(m);
        }
    }
    void modify(const Modification& m) override {
        tc_.apply(g_, m);
        g_.apply(m);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        if (args.empty()) {
            emit_pairs(tc_.relation(), out, prefix);
        } else if (args.size() == 2) {
            emit_bool(tc_.reaches(to_node(args[0], g_.n()), to_node(args[1], g_.n())), out,
                      prefix);
        } else {
            throw ParseError("tc query takes zero or two nodes");
        }
    }
    const LabeledGraph& graph() const override { return g_; }

private:
    LabeledGraph g_;
    TcState tc_;
};

class RpqEngine : public Engine {
public:
    RpqEngine(const LabeledGraph& g, const Dfa& dfa) : g_(g), state_(dfa, g.n()) {
        for (const auto& [u, s, v] : g.edges()) state_.insert(g.symbol_name(s), u, v);
    }
    void modify(const Modification& m) override {
        if (m.kind == ModKind::Delete)
            throw UnsupportedModification("rpq maintenance supports insertions only");
        g_.check_mod(m);
        state_.insert(g_.symbol_name(m.sym), m.u, m.v);
        g_.apply(m);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        if (!args.empty()) throw ParseError("rpq query takes no arguments");
        emit_pairs(state_.query(), out, prefix);
    }
    const LabeledGraph& graph() const override { return g_; }

private:
    LabeledGraph g_;
    RpqState state_;
};

class CflEngine : public Engine {
public:
    CflEngine(const LabeledGraph& g, const CnfGrammar& grammar)
        : g_(g.n(), g.alphabet(), g.directed()), state_(grammar, g.n()) {
        for (const auto& [u, s, v] : g.edges()) {
            Modification m{ModKind::Insert, s, u, v};
            state_.apply(g_, m);
            g_.apply(m);
        }
    }
    void modify(const Modification& m) override {
        state_.apply(g_, m);
        g_.apply(m);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        if (!args.empty()) throw ParseError("cfl query takes no arguments");
        emit_pairs(state_.query(), out, prefix);
    }
    const LabeledGraph& graph() const override { return g_; }

private:
    LabeledGraph g_;
    CflState state_;
};

class DistEngine : public Engine {
public:
    DistEngine(const LabeledGraph& g, DistRegime regime, int lmax)
        : regime_(regime), state_(g, regime, lmax > 0 ? lmax : g.n() * g.n()) {}
    void modify(const Modification& m) override { state_.apply(m); }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        const int n = state_.graph().n();
        if (args.size() == 3) {
            emit_bool(
                state_.has_length(to_node(args[0], n), to_node(args[1], n), std::stoi(args[2])),
                out, prefix);
            return;
        }
        if (!args.empty()) throw ParseError("dist query takes zero or three arguments");
        if (regime_ == DistRegime::Undirected)
            throw ParseError("dist-undirected answers length queries: query <x> <y> <l>");
        int cap = regime_ == DistRegime::Acyclic ? n - 1 : state_.lmax_bound();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int l = 0; l <= cap; ++l)
                    if (state_.has_length(x, y, l))
                        out << prefix << "(" << x << "," << y << "," << l << ")\n";
    }
    const LabeledGraph& graph() const override { return state_.graph(); }

private:
    DistRegime regime_;
    FactorDistState state_;
};

class ParikhEngine : public Engine {
public:
    ParikhEngine(const LabeledGraph& g, int lmax)
        : g_(g.n(), g.alphabet(), g.directed()),
          state_(g.n(), g.alphabet_size(), lmax > 0 ? lmax : g.n() * g.n()) {
        for (const auto& [u, s, v] : g.edges()) {
            state_.insert(s, u, v);
            g_.apply({ModKind::Insert, s, u, v});
        }
    }
    void modify(const Modification& m) override {
        if (m.kind == ModKind::Delete)
            throw UnsupportedModification("parikh maintenance supports insertions only");
        g_.check_mod(m);
        bool fresh = !g_.has_edge(m.u, m.sym, m.v);
        g_.apply(m);
        if (fresh) state_.insert(m.sym, m.u, m.v);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        if (!args.empty()) throw ParseError("parikh query takes no arguments");
        for (const auto& [x, y, vec] : state_.vector_triples()) {
            out << prefix << "(" << x << "," << y;
            for (int c : vec) out << "," << c;
            out << ")\n";
        }
    }
    const LabeledGraph& graph() const override { return g_; }

private:
    LabeledGraph g_;
    ParikhState state_;
};

Dfa determinize_unary(const SyncAutomaton& a, const std::vector<std::string>& alphabet) {
    if (a.arity != 1) throw ParseError("crpq relations must be unary");
    // Subset construction over symbol columns; pad transitions are never
    // exercised by 1-tuples.
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> order;
    std::map<std::pair<int, std::string>, int> trans;
    std::set<int> finals;
    std::set<int> q0{a.start};
    ids[q0] = 0;
    order.push_back(q0);
    for (size_t i = 0; i < order.size(); ++i) {
        std::set<int> cur = order[i];
        for (int q : cur)
            if (a.is_final(q)) finals.insert(static_cast<int>(i));
        for (const auto& sym : alphabet) {
            std::set<int> next;
            for (const auto& t : a.transitions)
                if (cur.count(t.from) && t.column[0] == sym) next.insert(t.to);
            if (next.empty()) continue;
            auto [it, fresh] = ids.emplace(next, static_cast<int>(order.size()));
            if (fresh) order.push_back(next);
            trans[{static_cast<int>(i), sym}] = it->second;
        }
    }
    return Dfa(static_cast<int>(order.size()), alphabet, trans, 0, finals);
}

Dfa universal_dfa(const std::vector<std::string>& alphabet) {
    std::map<std::pair<int, std::string>, int> t;
    for (const auto& s : alphabet) t[{0, s}] = 0;
    return Dfa(1, alphabet, t, 0, {0});
}

CrpqQuery crpq_from_ecrpq(const EcrpqQuery& q, const std::vector<std::string>& alphabet) {
    CrpqQuery out;
    for (const auto& atom : q.atoms) {
        const SyncAutomaton* rel = nullptr;
        for (const auto& r : q.relations) {
            if (std::find(r.paths.begin(), r.paths.end(), atom.path) == r.paths.end()) continue;
            if (r.paths.size() != 1 || rel)
                throw ParseError("the crpq program needs at most one unary relation per atom");
            rel = &r.automaton;
        }
        out.atoms.push_back(
            {atom.x, atom.y, rel ? determinize_unary(*rel, alphabet) : universal_dfa(alphabet)});
    }
    out.head = q.head;
    out.constraints = q.constraints;
    return out;
}

class CrpqEngine : public Engine {
public:
    CrpqEngine(const LabeledGraph& g, const EcrpqQuery& q, int lmax)
        : g_(g), state_(crpq_from_ecrpq(q, g.alphabet()), g, lmax > 0 ? lmax : g.n() * g.n()) {}
    void modify(const Modification& m) override {
        if (m.kind == ModKind::Delete)
            throw UnsupportedModification("crpq maintenance supports insertions only");
        g_.check_mod(m);
        bool fresh = !g_.has_edge(m.u, m.sym, m.v);
        g_.apply(m);
        if (fresh) state_.insert(m.sym, m.u, m.v);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        if (!args.empty()) throw ParseError("crpq query takes no arguments");
        for (const auto& head : state_.eval()) {
            out << prefix << "(";
            for (size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
            out << ")\n";
        }
    }
    const LabeledGraph& graph() const override { return g_; }

private:
    LabeledGraph g_;
    CrpqState state_;
};

class EcrpqEngine : public Engine {
public:
    EcrpqEngine(const std::vector<LabeledGraph>& copies, const EcrpqQuery& q)
        : state_(ecrpq_compile(q, copies.at(0).alphabet()), copies) {}
    void modify(const Modification& m) override {
        for (int i = 0; i < static_cast<int>(state_.copies().size()); ++i) state_.update(i, m);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        if (!args.empty()) throw ParseError("ecrpq query takes no arguments");
        for (const auto& head : state_.eval()) {
            out << prefix << "(";
            for (size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
            out << ")\n";
        }
    }
    const LabeledGraph& graph() const override { return state_.copies().front(); }

private:
    EcrpqState state_;
};

class ProductEngine : public Engine {
public:
    ProductEngine(const std::vector<LabeledGraph>& factors, DistRegime regime, int lmax) {
        int64_t bound = 1;
        for (const auto& f : factors) bound *= f.n();
        for (const auto& f : factors)
            factors_.emplace_back(
                f, regime, lmax > 0 ? lmax : static_cast<int>(std::min<int64_t>(bound, 4096)));
    }
    void modify(const Modification& m) override {
        for (auto& f : factors_) f.apply(m);
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        const size_t m = factors_.size();
        if (args.size() != 2 * m) throw ParseError("product query takes x1..xm y1..ym");
        std::vector<int> xs, ys;
        for (size_t i = 0; i < m; ++i) xs.push_back(to_node(args[i], factors_[i].graph().n()));
        for (size_t i = 0; i < m; ++i)
            ys.push_back(to_node(args[m + i], factors_[i].graph().n()));
        emit_bool(product_reach(factors_, xs, ys), out, prefix);
    }
    const LabeledGraph& graph() const override { return factors_.front().graph(); }

private:
    std::vector<FactorDistState> factors_;
};

class NepsEngine : public Engine {
public:
    NepsEngine(const NepsSpec& spec, const std::vector<LabeledGraph>& factors, DistRegime regime,
               int lmax)
        : state_(spec, factors, regime, lmax) {}
    void modify(const Modification& m) override {
        for (int i = 0; i < state_.spec().factors; ++i)
            state_.update(NepsModification{NepsModification::Kind::Factor, i, m, 0, 0});
    }
    void flip(int rule, int bit) override {
        state_.update(NepsModification{NepsModification::Kind::RuleFlip, 0, {}, rule, bit});
    }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        const int m = state_.spec().factors;
        if (static_cast<int>(args.size()) != 2 * m)
            throw ParseError("neps query takes x1..xm y1..ym");
        int n = graph().n();
        emit_bool(state_.reach(to_nodes(args, 0, m, n), to_nodes(args, m, m, n)), out, prefix);
    }
    const LabeledGraph& graph() const override { return state_.factor_graph(0); }

private:
    NepsState state_;
};

class PalindromeEngine : public Engine {
public:
    explicit PalindromeEngine(const LabeledGraph& g) : state_(g) {}
    void modify(const Modification& m) override { state_.apply(m); }
    void query(const std::vector<std::string>& args, std::ostream& out,
               const std::string& prefix) override {
        const int n = state_.graph().n();
        if (args.size() == 2) {
            emit_bool(state_.query(to_node(args[0], n), to_node(args[1], n)), out, prefix);
            return;
        }
        if (!args.empty()) throw ParseError("palindrome query takes zero or two nodes");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (state_.query(x, y)) out << prefix << "(" << x << "," << y << ")\n";
    }
    const LabeledGraph& graph() const override { return state_.graph(); }

private:
    PalindromeState state_;
};

}  // namespace

std::unique_ptr<Engine> make_engine(const EngineConfig& c) {
    if (c.graphs.empty()) throw ParseError("no graph given");
    auto replicate = [&](int count) {
        std::vector<LabeledGraph> out = c.graphs;
        if (static_cast<int>(out.size()) == 1 && count > 1) out.assign(count, c.graphs[0]);
        if (static_cast<int>(out.size()) != count)
            throw ParseError("expected 1 or " + std::to_string(count) + " graphs");
        return out;
    };
    const LabeledGraph& g = c.graphs[0];
    if (c.program == "tc") return std::make_unique<TcEngine>(g);
    if (c.program == "rpq") {
        if (!c.dfa) throw ParseError("rpq needs --dfa");
        return std::make_unique<RpqEngine>(g, *c.dfa);
    }
    if (c.program == "cfl") {
        if (!c.grammar) throw ParseError("cfl needs --grammar");
        if (!g.directed()) throw ParseError("cfl requires a directed graph");
        if (!g.is_acyclic()) throw ParseError("cfl requires an acyclic start graph");
        return std::make_unique<CflEngine>(g, *c.grammar);
    }
    if (c.program == "dist-ins")
        return std::make_unique<DistEngine>(g, DistRegime::InsertOnly, c.lmax);
    if (c.program == "dist-acyclic")
        return std::make_unique<DistEngine>(g, DistRegime::Acyclic, c.lmax);
    if (c.program == "dist-undirected")
        return std::make_unique<DistEngine>(g, DistRegime::Undirected, c.lmax);
    if (c.program == "parikh") return std::make_unique<ParikhEngine>(g, c.lmax);
    if (c.program == "crpq") {
        if (!c.ecrpq) throw ParseError("crpq needs --ecrpq");
        return std::make_unique<CrpqEngine>(g, *c.ecrpq, c.lmax);
    }
    if (c.program == "ecrpq") {
        if (!c.ecrpq) throw ParseError("ecrpq needs --ecrpq");
        return std::make_unique<EcrpqEngine>(replicate(c.ecrpq->atom_count()), *c.ecrpq);
    }
    if (c.program == "product")
        return std::make_unique<ProductEngine>(c.graphs, c.regime, c.lmax);
    if (c.program == "neps") {
        if (!c.neps) throw ParseError("neps needs --neps");
        return std::make_unique<NepsEngine>(*c.neps, replicate(c.neps->factors), c.regime,
                                            c.lmax);
    }
    if (c.program == "palindrome") {
        if (!g.is_acyclic()) throw ParseError("palindrome requires an acyclic start graph");
        return std::make_unique<PalindromeEngine>(g);
    }
    throw ParseError("unknown program '" + c.program + "'");
}

const std::vector<std::string>& program_names() {
    static const std::vector<std::string> names = {
        "tc",     "rpq",  "cfl",   "dist-ins", "dist-acyclic", "dist-undirected",
        "parikh", "crpq", "ecrpq", "product",  "neps",         "palindrome"};
    return names;
}

ScriptResult execute_script(Engine& engine, std::istream& script, std::ostream& out) {
    ScriptResult result;
    std::string line;
    int lineno = 0;
    while (std::getline(script, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        try {
            if (head == "ins" || head == "del") {
                std::string sym, u, v;
                if (!(ss >> sym >> u >> v))
                    throw ParseError("expected '" + head + " <sym> <u> <v>'");
                engine.modify(parse_modification(engine.graph(), head, sym, u, v));
            } else if (head == "flip") {
                int rule, bit;
                if (!(ss >> rule >> bit)) throw ParseError("expected 'flip <rule> <bit>'");
                engine.flip(rule, bit);
            } else if (head == "query") {
                std::vector<std::string> args;
                std::string a;
                while (ss >> a) {
                    if (a[0] == '#') break;
                    args.push_back(a);
                }
                std::ostringstream buffered;
                engine.query(args, buffered, std::to_string(lineno) + ": ");
                out << buffered.str();
            } else {
                throw ParseError("unknown script directive '" + head + "'");
            }
        } catch (const EngineError& e) {
            result.exit_code = 2;
            result.failed_line = lineno;
            result.error = "line " + std::to_string(lineno) + ": " + e.what();
            return result;
        }
    }
    return result;
}

}  // namespace dynq
