#include "dynq/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dynq/errors.hpp"

namespace dynq {

std::vector<int> CnfGrammar::preterminals(const std::string& sym) const {
    std::vector<int> out;
    for (const auto& r : terminal)
        if (r.terminal == sym) out.push_back(r.lhs);
    return out;
}

bool CnfGrammar::accepts_word(const std::vector<std::string>& word) const {
    std::vector<Token> toks;
    for (const auto& w : word) toks.push_back(Token{false, -1, w});
    if (toks.empty()) return start_to_eps;
    return derives_sentential(start, toks);
}

bool CnfGrammar::derives_sentential(int X, const std::vector<Token>& tokens) const {
    const int len = static_cast<int>(tokens.size());
    if (len == 0) return false;  // CNF derives no empty sentential form
    // cell[i][j] = set of variables deriving tokens[i..i+j]
    std::vector<std::vector<std::set<int>>> cell(len, std::vector<std::set<int>>(len + 1));
    for (int i = 0; i < len; ++i) {
        if (tokens[i].is_var) {
            cell[i][1].insert(tokens[i].var);  // zero-step derivation only
        } else {
            for (const auto& r : terminal)
                if (r.terminal == tokens[i].terminal) cell[i][1].insert(r.lhs);
        }
    }
    for (int span = 2; span <= len; ++span)
        for (int i = 0; i + span <= len; ++i)
            for (int split = 1; split < span; ++split)
                for (const auto& r : binary)
                    if (cell[i][split].count(r.left) &&
                        cell[i + split][span - split].count(r.right))
                        cell[i][span].insert(r.lhs);
    return cell[0][len].count(X) > 0;
}

// ---------------------------------------------------------------------------
// Normalization to CNF.

namespace {

struct RawGrammar {
    std::string start;
    // rhs tokens; empty vector = epsilon rule
    std::vector<std::pair<std::string, std::vector<std::string>>> rules;
    std::set<std::string> variables;  // every token that occurs as a lhs
};

RawGrammar parse_raw(std::istream& in) {
    RawGrammar g;
    std::string line;
    bool start_seen = false;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head == "start") {
            if (!(ss >> g.start)) throw ParseError("start expects a symbol");
            start_seen = true;
        } else if (head == "rule") {
            std::string lhs, arrow;
            if (!(ss >> lhs >> arrow) || arrow != "->")
                throw ParseError("rule expects '<X> -> <rhs...>'");
            std::vector<std::string> rhs;
            std::string t;
            while (ss >> t) {
                if (t[0] == '#') break;
                rhs.push_back(t);
            }
            if (rhs.size() == 1 && rhs[0] == "eps") rhs.clear();
            g.rules.emplace_back(lhs, rhs);
            g.variables.insert(lhs);
        } else {
            throw ParseError("unknown grammar directive '" + head + "'");
        }
    }
    if (!start_seen) throw ParseError("grammar file is missing a start line");
    g.variables.insert(g.start);
    return g;
}

struct Normalizer {
    RawGrammar raw;
    std::vector<std::string> var_names;
    std::map<std::string, int> var_ids;
    // rhs entries: >= 0 variable id, < 0 terminal (index ~t into terms)
    std::vector<std::pair<int, std::vector<int>>> rules;
    std::vector<std::string> terms;
    std::map<std::string, int> term_ids;

    int var(const std::string& name) {
        auto it = var_ids.find(name);
        if (it != var_ids.end()) return it->second;
        int id = static_cast<int>(var_names.size());
        var_names.push_back(name);
        var_ids[name] = id;
        return id;
    }

    int term(const std::string& name) {
        auto it = term_ids.find(name);
        if (it != term_ids.end()) return ~it->second;
        int id = static_cast<int>(terms.size());
        terms.push_back(name);
        term_ids[name] = id;
        return ~id;
    }

    int fresh(const std::string& hint) {
        std::string name = hint;
        int i = 0;
        while (var_ids.count(name)) name = hint + "_" + std::to_string(i++);
        return var(name);
    }

    CnfGrammar run() {
        for (const auto& v : raw.variables) var(v);
        for (const auto& [lhs, rhs] : raw.rules) {
            std::vector<int> body;
            for (const auto& t : rhs)
                body.push_back(raw.variables.count(t) ? var(t) : term(t));
            rules.emplace_back(var(lhs), body);
        }
        int start = var(raw.start);

        // Fresh start symbol, needed only when the old start both occurs
        // on a right-hand side and derives epsilon.
        std::set<int> nullable = compute_nullable();
        bool start_on_rhs = false;
        for (const auto& [lhs, rhs] : rules)
            for (int t : rhs)
                if (t == start) start_on_rhs = true;
        if (start_on_rhs && nullable.count(start)) {
            int s0 = fresh(raw.start + "'");
            rules.emplace_back(s0, std::vector<int>{start});
            start = s0;
        }

        // TERM: terminals in long rules become preterminal variables.
        std::map<int, int> preterm;
        for (auto& [lhs, rhs] : rules) {
            if (rhs.size() < 2) continue;
            for (int& t : rhs) {
                if (t >= 0) continue;
                auto it = preterm.find(t);
                int v;
                if (it == preterm.end()) {
                    v = fresh("T" + terms[~t]);
                    preterm[t] = v;
                } else {
                    v = it->second;
                }
                t = v;
            }
        }
        for (const auto& [t, v] : preterm) rules.emplace_back(v, std::vector<int>{t});

        // BIN: binarize long rules.
        std::vector<std::pair<int, std::vector<int>>> bin_rules;
        for (const auto& [lhs, rhs] : rules) {
            if (rhs.size() <= 2) {
                bin_rules.emplace_back(lhs, rhs);
                continue;
            }
            int cur = lhs;
            for (size_t i = 0; i + 2 < rhs.size(); ++i) {
                int nxt = fresh(var_names[lhs] + "#");
                bin_rules.emplace_back(cur, std::vector<int>{rhs[i], nxt});
                cur = nxt;
            }
            bin_rules.emplace_back(cur,
                                   std::vector<int>{rhs[rhs.size() - 2], rhs[rhs.size() - 1]});
        }
        rules = std::move(bin_rules);

        // DEL: epsilon elimination.
        nullable = compute_nullable();
        bool eps_in_language = nullable.count(start) > 0;
        std::set<std::pair<int, std::vector<int>>> deduped;
        for (const auto& [lhs, rhs] : rules) {
            if (rhs.empty()) continue;
            if (rhs.size() == 1) {
                deduped.insert({lhs, rhs});
                continue;
            }
            bool n0 = rhs[0] >= 0 && nullable.count(rhs[0]);
            bool n1 = rhs[1] >= 0 && nullable.count(rhs[1]);
            deduped.insert({lhs, rhs});
            if (n0) deduped.insert({lhs, {rhs[1]}});
            if (n1) deduped.insert({lhs, {rhs[0]}});
        }

        // UNIT: close over unit pairs, then inline.
        std::map<int, std::set<int>> unit;  // X -> variables reachable by unit rules
        for (int v = 0; v < static_cast<int>(var_names.size()); ++v) unit[v].insert(v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [lhs, rhs] : deduped) {
                if (rhs.size() != 1 || rhs[0] < 0) continue;
                for (int tgt : unit[rhs[0]])
                    if (unit[lhs].insert(tgt).second) changed = true;
            }
        }
        std::set<std::pair<int, std::vector<int>>> final_rules;
        for (int v = 0; v < static_cast<int>(var_names.size()); ++v) {
            for (int tgt : unit[v]) {
                for (const auto& [lhs, rhs] : deduped) {
                    if (lhs != tgt) continue;
                    if (rhs.size() == 1 && rhs[0] >= 0) continue;  // unit rule, dropped
                    final_rules.insert({v, rhs});
                }
            }
        }

        CnfGrammar out;
        out.variable_names = var_names;
        out.num_variables = static_cast<int>(var_names.size());
        out.start = start;
        out.start_to_eps = eps_in_language;
        for (const auto& [lhs, rhs] : final_rules) {
            if (rhs.size() == 2)
                out.binary.push_back({lhs, rhs[0], rhs[1]});
            else
                out.terminal.push_back({lhs, terms[~rhs[0]]});
        }
        return out;
    }

    std::set<int> compute_nullable() const {
        std::set<int> nullable;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [lhs, rhs] : rules) {
                if (nullable.count(lhs)) continue;
                bool all = true;
                for (int t : rhs)
                    if (t < 0 || !nullable.count(t)) {
                        all = false;
                        break;
                    }
                if (all) {
                    nullable.insert(lhs);
                    changed = true;
                }
            }
        }
        return nullable;
    }
};

}  // namespace

CnfGrammar to_cnf(std::istream& in) {
    Normalizer n;
    n.raw = parse_raw(in);
    return n.run();
}

CnfGrammar to_cnf_text(const std::string& text) {
    std::istringstream ss(text);
    return to_cnf(ss);
}

CnfGrammar load_grammar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open grammar file " + path);
    return to_cnf(in);
}

}  // namespace dynq
