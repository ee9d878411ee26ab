#include "dynq/dfa.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dynq/errors.hpp"

namespace dynq {

Dfa::Dfa(int num_states, std::vector<std::string> alphabet,
         const std::map<std::pair<int, std::string>, int>& trans, int start,
         std::set<int> finals)
    : start_(start), alphabet_(std::move(alphabet)), finals_(std::move(finals)) {
    if (num_states <= 0) throw ParseError("automaton needs at least one state");
    if (start < 0 || start >= num_states) throw ParseError("start state out of range");
    for (int f : finals_)
        if (f < 0 || f >= num_states) throw ParseError("final state out of range");
    for (size_t i = 0; i < alphabet_.size(); ++i) {
        if (!symidx_.emplace(alphabet_[i], static_cast<int>(i)).second)
            throw ParseError("duplicate symbol in automaton alphabet");
    }

    for (const auto& [key, q] : trans) {
        const auto& [p, sym] = key;
        if (p < 0 || p >= num_states || q < 0 || q >= num_states)
            throw ParseError("transition state out of range");
        if (!symidx_.count(sym)) throw ParseError("transition symbol '" + sym + "' unknown");
    }

    // The sink also absorbs symbols outside the declared alphabet, so it
    // is materialized unconditionally.
    num_states_ = num_states + 1;
    sink_ = num_states;
    delta_.assign(num_states_, std::vector<int>(alphabet_.size(), sink_));
    for (const auto& [key, q] : trans) delta_[key.first][symidx_.at(key.second)] = q;
}

int Dfa::step(int q, const std::string& symbol) const {
    auto it = symidx_.find(symbol);
    if (it == symidx_.end()) return sink_;
    return delta_[q][it->second];
}

bool Dfa::accepts_word(const std::vector<std::string>& word) const {
    int q = start_;
    for (const auto& s : word) q = step(q, s);
    return is_final(q);
}

// ---------------------------------------------------------------------------
// Regex compilation: Thompson NFA, then subset construction.

namespace {

struct Nfa {
    struct Trans {
        int from;
        char sym;  // 0 means epsilon
        int to;
    };
    int states = 0;
    std::vector<Trans> trans;
    int start = 0;
    int accept = 0;

    int fresh() { return states++; }
};

struct RegexParser {
    const std::string& s;
    size_t pos = 0;
    Nfa nfa;

    explicit RegexParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return c == '(' || (c != ')' && c != '|' && c != '*' && c != '.');
    }

    // frag = (start, accept)
    using Frag = std::pair<int, int>;

    Frag parse_alt() {
        Frag f = parse_cat();
        skip_ws();
        while (pos < s.size() && s[pos] == '|') {
            ++pos;
            Frag g = parse_cat();
            int st = nfa.fresh(), ac = nfa.fresh();
            nfa.trans.push_back({st, 0, f.first});
            nfa.trans.push_back({st, 0, g.first});
            nfa.trans.push_back({f.second, 0, ac});
            nfa.trans.push_back({g.second, 0, ac});
            f = {st, ac};
            skip_ws();
        }
        return f;
    }

    Frag parse_cat() {
        skip_ws();
        if (!at_atom_start()) {  // empty branch denotes epsilon
            int st = nfa.fresh();
            return {st, st};
        }
        Frag f = parse_rep();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '.') {
                ++pos;
                continue;  // explicit concatenation marker
            }
            if (!at_atom_start()) break;
            Frag g = parse_rep();
            nfa.trans.push_back({f.second, 0, g.first});
            f = {f.first, g.second};
        }
        return f;
    }

    Frag parse_rep() {
        Frag f = parse_atom();
        skip_ws();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            int st = nfa.fresh(), ac = nfa.fresh();
            nfa.trans.push_back({st, 0, f.first});
            nfa.trans.push_back({st, 0, ac});
            nfa.trans.push_back({f.second, 0, f.first});
            nfa.trans.push_back({f.second, 0, ac});
            f = {st, ac};
            skip_ws();
        }
        return f;
    }

    Frag parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("regex ended unexpectedly");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Frag f = parse_alt();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') throw ParseError("unbalanced '(' in regex");
            ++pos;
            return f;
        }
        if (c == ')' || c == '|' || c == '*' || c == '.')
            throw ParseError(std::string("unexpected '") + c + "' in regex");
        ++pos;
        int st = nfa.fresh(), ac = nfa.fresh();
        nfa.trans.push_back({st, c, ac});
        return {st, ac};
    }
};

}  // namespace

Dfa compile_regex(const std::string& expr) {
    RegexParser p(expr);
    auto frag = p.parse_alt();
    p.skip_ws();
    if (p.pos != expr.size()) throw ParseError("trailing characters in regex");
    Nfa& nfa = p.nfa;
    nfa.start = frag.first;
    nfa.accept = frag.second;

    std::set<char> symbols;
    std::vector<std::vector<int>> eps(nfa.states);
    std::map<std::pair<int, char>, std::vector<int>> moves;
    for (const auto& t : nfa.trans) {
        if (t.sym == 0)
            eps[t.from].push_back(t.to);
        else {
            symbols.insert(t.sym);
            moves[{t.from, t.sym}].push_back(t.to);
        }
    }

    auto closure = [&](std::set<int> st) {
        std::vector<int> stack(st.begin(), st.end());
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int r : eps[q])
                if (st.insert(r).second) stack.push_back(r);
        }
        return st;
    };

    std::vector<std::string> alphabet;
    for (char c : symbols) alphabet.push_back(std::string(1, c));

    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> order;
    std::map<std::pair<int, std::string>, int> trans;
    std::set<int> finals;

    std::set<int> q0 = closure({nfa.start});
    ids[q0] = 0;
    order.push_back(q0);
    for (size_t i = 0; i < order.size(); ++i) {
        std::set<int> cur = order[i];
        if (cur.count(nfa.accept)) finals.insert(static_cast<int>(i));
        for (char c : symbols) {
            std::set<int> next;
            for (int q : cur) {
                auto it = moves.find({q, c});
                if (it != moves.end()) next.insert(it->second.begin(), it->second.end());
            }
            if (next.empty()) continue;  // completion adds the sink
            next = closure(next);
            auto [it, fresh] = ids.emplace(next, static_cast<int>(order.size()));
            if (fresh) order.push_back(next);
            trans[{static_cast<int>(i), std::string(1, c)}] = it->second;
        }
    }
    return Dfa(static_cast<int>(order.size()), alphabet, trans, 0, finals);
}

Dfa compile_dfa(std::istream& in) {
    int num_states = -1, start = -1;
    std::set<int> finals;
    std::map<std::pair<int, std::string>, int> trans;
    std::vector<std::string> alphabet;
    std::set<std::string> symbols_seen;
    bool explicit_format = false;

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head == "regex") {
            std::string expr;
            std::getline(ss, expr);
            return compile_regex(expr);
        }
        explicit_format = true;
        if (head == "states") {
            ss >> num_states;
        } else if (head == "start") {
            ss >> start;
        } else if (head == "final") {
            int f;
            while (ss >> f) finals.insert(f);
        } else if (head == "alphabet") {
            std::string s;
            while (ss >> s) {
                if (s[0] == '#') break;
                alphabet.push_back(s);
                symbols_seen.insert(s);
            }
        } else if (head == "trans") {
            int p, q;
            std::string sym;
            if (!(ss >> p >> sym >> q)) throw ParseError("trans expects <p> <sym> <q>");
            if (trans.count({p, sym}))
                throw NondeterministicSpec("duplicate transition for state " + std::to_string(p) +
                                           " on symbol " + sym);
            trans[{p, sym}] = q;
            if (!symbols_seen.count(sym)) {
                symbols_seen.insert(sym);
                alphabet.push_back(sym);
            }
        } else {
            throw ParseError("unknown DFA directive '" + head + "'");
        }
    }
    if (!explicit_format) throw ParseError("empty DFA file");
    if (num_states < 0) throw ParseError("DFA file is missing a states line");
    if (start < 0) throw ParseError("DFA file is missing a start line");
    std::sort(alphabet.begin(), alphabet.end());
    return Dfa(num_states, alphabet, trans, start, finals);
}

Dfa compile_dfa_text(const std::string& text) {
    std::istringstream ss(text);
    return compile_dfa(ss);
}

Dfa load_dfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open DFA file " + path);
    return compile_dfa(in);
}

}  // namespace dynq
