#include "dynq/queryspec.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "dynq/errors.hpp"

namespace dynq {

int EcrpqQuery::path_index(const std::string& path_var) const {
    for (int i = 0; i < atom_count(); ++i)
        if (atoms[i].path == path_var) return i;
    return -1;
}

int EcrpqQuery::var_index(const std::string& node_var) const {
    for (size_t i = 0; i < node_vars.size(); ++i)
        if (node_vars[i] == node_var) return static_cast<int>(i);
    return -1;
}

bool constraints_hold(const std::vector<ConstraintRow>& rows, const std::vector<int64_t>& ell) {
    for (const auto& row : rows) {
        if (row.coeffs.size() != ell.size())
            throw ParseError("constraint row width does not match k*m");
        int64_t sum = 0;
        for (size_t i = 0; i < ell.size(); ++i) sum += row.coeffs[i] * ell[i];
        if (sum < row.bound) return false;
    }
    return true;
}

EcrpqQuery parse_ecrpq(std::istream& in, const std::string& base_dir) {
    EcrpqQuery q;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head == "vars") {
            std::string v;
            while (ss >> v) {
                if (v[0] == '#') break;
                q.node_vars.push_back(v);
            }
        } else if (head == "head") {
            std::string v;
            while (ss >> v) {
                if (v[0] == '#') break;
                q.head.push_back(v);
            }
        } else if (head == "atom") {
            EcrpqQuery::Atom a;
            if (!(ss >> a.x >> a.path >> a.y)) throw ParseError("atom expects <x> <pi> <y>");
            q.atoms.push_back(a);
        } else if (head == "rel") {
            std::string file;
            if (!(ss >> file)) throw ParseError("rel expects <file> <pi...>");
            EcrpqQuery::RelationAtom r;
            std::string p;
            while (ss >> p) {
                if (p[0] == '#') break;
                r.paths.push_back(p);
            }
            std::string full = base_dir.empty() ? file : base_dir + "/" + file;
            r.automaton = load_sync(full);
            q.relations.push_back(std::move(r));
        } else if (head == "constraint") {
            std::vector<std::string> toks;
            std::string t;
            while (ss >> t) {
                if (t[0] == '#') break;
                toks.push_back(t);
            }
            auto ge = std::find(toks.begin(), toks.end(), ">=");
            if (ge == toks.end() || ge + 2 != toks.end())
                throw ParseError("constraint expects <coeffs...> >= <b>");
            ConstraintRow row;
            for (auto it = toks.begin(); it != ge; ++it) row.coeffs.push_back(std::stoll(*it));
            row.bound = std::stoll(toks.back());
            q.constraints.push_back(std::move(row));
        } else {
            throw ParseError("unknown ECRPQ directive '" + head + "'");
        }
    }

    // Well-formedness.
    std::set<std::string> endpoint_vars;
    std::set<std::string> path_vars;
    for (const auto& a : q.atoms) {
        endpoint_vars.insert(a.x);
        endpoint_vars.insert(a.y);
        if (!path_vars.insert(a.path).second)
            throw ParseError("path variable " + a.path + " bound by two atoms");
    }
    for (const auto& v : q.head) {
        if (path_vars.count(v))
            throw ParseError("path variable " + v + " may not appear in the head");
        if (!endpoint_vars.count(v))
            throw ParseError("head variable " + v + " does not occur in any atom");
    }
    std::set<std::vector<std::string>> rel_tuples;
    for (const auto& r : q.relations) {
        if (static_cast<int>(r.paths.size()) != r.automaton.arity)
            throw ParseError("relation tape count does not match its automaton arity");
        for (const auto& p : r.paths)
            if (!path_vars.count(p))
                throw ParseError("relation path variable " + p + " is not bound by an atom");
        if (!rel_tuples.insert(r.paths).second)
            throw ParseError("duplicate path-variable tuple in relation atoms");
        require_valid_sync(r.automaton);
    }
    for (const auto& v : q.node_vars)
        if (!endpoint_vars.count(v))
            throw ParseError("declared variable " + v + " does not occur in any atom");
    return q;
}

EcrpqQuery load_ecrpq(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ECRPQ file " + path);
    std::string dir;
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    return parse_ecrpq(in, dir);
}

bool NepsSpec::rule_is_zero(int j) const {
    for (int b : rules[j])
        if (b) return false;
    return true;
}

void NepsSpec::flip(int rule, int bit) {
    if (rule < 0 || rule >= rule_count()) throw ParseError("rule index out of range");
    if (bit < 0 || bit >= factors) throw ParseError("rule bit index out of range");
    rules[rule][bit] ^= 1;
}

NepsSpec parse_neps(std::istream& in) {
    NepsSpec spec;
    bool factors_seen = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head == "factors") {
            ss >> spec.factors;
            factors_seen = true;
        } else if (head == "rule") {
            std::string bits;
            if (!(ss >> bits)) throw ParseError("rule expects a bit string");
            std::vector<int> rule;
            for (char c : bits) {
                if (c != '0' && c != '1') throw ParseError("rule bits must be 0 or 1");
                rule.push_back(c - '0');
            }
            spec.rules.push_back(std::move(rule));
        } else {
            throw ParseError("unknown NEPS directive '" + head + "'");
        }
    }
    if (!factors_seen) throw ParseError("NEPS file is missing a factors line");
    for (const auto& r : spec.rules)
        if (static_cast<int>(r.size()) != spec.factors)
            throw ParseError("rule length does not match factor count");
    return spec;
}

NepsSpec parse_neps_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_neps(ss);
}

NepsSpec load_neps(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open NEPS file " + path);
    return parse_neps(in);
}

}  // namespace dynq
