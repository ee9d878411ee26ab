#ifndef DYNQ_QUERYSPEC_HPP
#define DYNQ_QUERYSPEC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynq/sync.hpp"

namespace dynq {

/// One row of the linear constraint system A l >= b.  Coefficients are
/// ordered l_{1,1}..l_{1,k}, ..., l_{m,1}..l_{m,k}: per path atom, then
/// per alphabet symbol.
struct ConstraintRow {
    std::vector<int64_t> coeffs;
    int64_t bound = 0;
};

/// ECRPQ with linear constraints on symbol occurrence counts.  Heads may
/// contain node variables only.
struct EcrpqQuery {
    struct Atom {
        std::string x, path, y;
    };
    struct RelationAtom {
        SyncAutomaton automaton;
        std::vector<std::string> paths;  // one path variable per tape
    };

    std::vector<std::string> node_vars;
    std::vector<std::string> head;
    std::vector<Atom> atoms;
    std::vector<RelationAtom> relations;
    std::vector<ConstraintRow> constraints;

    int atom_count() const { return static_cast<int>(atoms.size()); }
    int path_index(const std::string& path_var) const;
    int var_index(const std::string& node_var) const;
};

/// Loads an ECRPQ file; `rel` lines name sync-automaton files resolved
/// relative to the query file's directory.
EcrpqQuery load_ecrpq(const std::string& path);
EcrpqQuery parse_ecrpq(std::istream& in, const std::string& base_dir);

/// Evaluates A l >= b with exact integer arithmetic; an empty system
/// accepts everything.
bool constraints_hold(const std::vector<ConstraintRow>& rows, const std::vector<int64_t>& ell);

/// NEPS transition-rule list: rules are columns of the m x k rule
/// matrix, one {0,1}^m tuple per rule.
struct NepsSpec {
    int factors = 0;
    std::vector<std::vector<int>> rules;  // rules[j] has `factors` bits

    int rule_count() const { return static_cast<int>(rules.size()); }
    bool rule_is_zero(int j) const;
    void flip(int rule, int bit);
};

NepsSpec parse_neps(std::istream& in);
NepsSpec parse_neps_text(const std::string& text);
NepsSpec load_neps(const std::string& path);

}  // namespace dynq

#endif
