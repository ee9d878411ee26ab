#include "dynq/sync.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "dynq/errors.hpp"

namespace dynq {

bool SyncAutomaton::is_final(int q) const {
    return std::find(finals.begin(), finals.end(), q) != finals.end();
}

bool SyncAutomaton::accepts_tuple(const std::vector<std::vector<std::string>>& words) const {
    if (static_cast<int>(words.size()) != arity)
        throw ParseError("tuple arity does not match automaton arity");
    size_t len = 0;
    for (const auto& w : words) len = std::max(len, w.size());

    std::set<int> cur{start};
    for (size_t i = 0; i < len; ++i) {
        std::vector<std::string> column(arity);
        for (int t = 0; t < arity; ++t)
            column[t] = i < words[t].size() ? words[t][i] : std::string();
        std::set<int> next;
        for (const auto& tr : transitions)
            if (cur.count(tr.from) && tr.column == column) next.insert(tr.to);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    for (int q : cur)
        if (is_final(q)) return true;
    return false;
}

SyncValidation validate_sync(const SyncAutomaton& a) {
    // Useful states: reachable from the start and co-reachable to a final.
    std::vector<char> reach(a.num_states, 0), coreach(a.num_states, 0);
    reach[a.start] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : a.transitions)
            if (reach[t.from] && !reach[t.to]) {
                reach[t.to] = 1;
                changed = true;
            }
    }
    for (int f : a.finals) coreach[f] = 1;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : a.transitions)
            if (coreach[t.to] && !coreach[t.from]) {
                coreach[t.from] = 1;
                changed = true;
            }
    }
    auto useful = [&](const SyncAutomaton::Transition& t) {
        return reach[t.from] && coreach[t.to];
    };

    for (int tape = 0; tape < a.arity; ++tape) {
        // States at or after a ⊥-read on this tape.
        std::vector<char> padded(a.num_states, 0);
        for (const auto& t : a.transitions)
            if (useful(t) && SyncAutomaton::is_pad(t.column[tape])) padded[t.to] = 1;
        changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : a.transitions)
                if (useful(t) && padded[t.from] && !padded[t.to]) {
                    padded[t.to] = 1;
                    changed = true;
                }
        }
        for (const auto& t : a.transitions)
            if (useful(t) && padded[t.from] && !SyncAutomaton::is_pad(t.column[tape]))
                return SyncValidation{false, tape, t.from};
    }
    return SyncValidation{};
}

void require_valid_sync(const SyncAutomaton& a) {
    SyncValidation v = validate_sync(a);
    if (!v.ok) throw PaddingViolation(v.tape, v.state);
}

SyncAutomaton parse_sync(std::istream& in) {
    SyncAutomaton a;
    bool arity_seen = false, states_seen = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head == "arity") {
            ss >> a.arity;
            arity_seen = true;
        } else if (head == "states") {
            ss >> a.num_states;
            states_seen = true;
        } else if (head == "start") {
            ss >> a.start;
        } else if (head == "final") {
            int f;
            while (ss >> f) a.finals.push_back(f);
        } else if (head == "trans") {
            int p, q;
            std::string col;
            if (!(ss >> p >> col >> q)) throw ParseError("trans expects <p> <col> <q>");
            SyncAutomaton::Transition t;
            t.from = p;
            t.to = q;
            std::istringstream cs(col);
            std::string part;
            while (std::getline(cs, part, ','))
                t.column.push_back(part == "_" ? std::string() : part);
            a.transitions.push_back(std::move(t));
        } else {
            throw ParseError("unknown sync-automaton directive '" + head + "'");
        }
    }
    if (!arity_seen || !states_seen)
        throw ParseError("sync-automaton file needs arity and states lines");
    for (const auto& t : a.transitions) {
        if (static_cast<int>(t.column.size()) != a.arity)
            throw ParseError("transition column arity mismatch");
        if (t.from < 0 || t.from >= a.num_states || t.to < 0 || t.to >= a.num_states)
            throw ParseError("transition state out of range");
    }
    if (a.start < 0 || a.start >= a.num_states) throw ParseError("start state out of range");
    for (int f : a.finals)
        if (f < 0 || f >= a.num_states) throw ParseError("final state out of range");
    return a;
}

SyncAutomaton parse_sync_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_sync(ss);
}

SyncAutomaton load_sync(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sync-automaton file " + path);
    return parse_sync(in);
}

}  // namespace dynq
