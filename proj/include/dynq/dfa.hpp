#ifndef DYNQ_DFA_HPP
#define DYNQ_DFA_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dynq {

/**
 * Deterministic, total finite automaton.  Construction completes a
 * partial transition table with an implicit rejecting sink; the sink is
 * materialized as an ordinary state so the table is total.  Symbols a
 * word may carry that are outside the automaton's alphabet also lead to
 * the sink.
 */
class Dfa {
public:
    Dfa() = default;
    /// states are 0..num_states-1 before completion; missing
    /// (state,symbol) entries are routed to a fresh sink when needed.
    Dfa(int num_states, std::vector<std::string> alphabet,
        const std::map<std::pair<int, std::string>, int>& trans, int start,
        std::set<int> finals);

    int num_states() const { return num_states_; }
    int start() const { return start_; }
    bool is_final(int q) const { return finals_.count(q) > 0; }
    const std::set<int>& finals() const { return finals_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }

    /// Total transition function; unknown symbols go to the sink.
    int step(int q, const std::string& symbol) const;
    bool has_transition(int p, const std::string& symbol, int q) const {
        return step(p, symbol) == q;
    }

    bool accepts_word(const std::vector<std::string>& word) const;

private:
    int num_states_ = 1;
    int start_ = 0;
    int sink_ = 0;
    std::vector<std::string> alphabet_;
    std::map<std::string, int> symidx_;
    std::vector<std::vector<int>> delta_;  // delta_[q][sym]
    std::set<int> finals_;
};

/// Parses a DFA file: either the explicit format (states/start/final/
/// trans lines) or a single `regex <expr>` line.  Regexes use
/// single-character symbols with | * ( ) and juxtaposition (or '.') for
/// concatenation; they compile via Thompson construction and subset
/// construction.
Dfa compile_dfa(std::istream& in);
Dfa compile_dfa_text(const std::string& text);
Dfa load_dfa(const std::string& path);

/// Compiles just a regex expression.
Dfa compile_regex(const std::string& expr);

}  // namespace dynq

#endif
