#ifndef DYNQ_GRAMMAR_HPP
#define DYNQ_GRAMMAR_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dynq {

/**
 * Context-free grammar in Chomsky normal form: rules X -> Y Z and
 * X -> sigma, plus an optional S -> epsilon (in which case S occurs on
 * no right-hand side).  Variables are indices 0..num_variables-1.
 */
struct CnfGrammar {
    struct BinaryRule {
        int lhs, left, right;
    };
    struct TerminalRule {
        int lhs;
        std::string terminal;
    };

    int num_variables = 0;
    int start = 0;
    bool start_to_eps = false;
    std::vector<BinaryRule> binary;
    std::vector<TerminalRule> terminal;
    std::vector<std::string> variable_names;

    std::vector<int> preterminals(const std::string& sym) const;

    /// CYK membership for a terminal word.
    bool accepts_word(const std::vector<std::string>& word) const;

    /// CYK over a sentential form: tokens are terminals or variable
    /// indices (-1-encoded via `GrammarToken`).  True iff the token
    /// sequence is derivable from variable X.
    struct Token {
        bool is_var;
        int var;              // valid when is_var
        std::string terminal; // valid otherwise
    };
    bool derives_sentential(int X, const std::vector<Token>& tokens) const;
};

/// Parses a grammar file (start/rule lines; `eps` for the empty word;
/// tokens appearing as some rule head are variables, all others
/// terminals) and normalizes it to CNF.  The language is preserved;
/// already-CNF inputs come back unchanged.
CnfGrammar to_cnf(std::istream& in);
CnfGrammar to_cnf_text(const std::string& text);
CnfGrammar load_grammar(const std::string& path);

}  // namespace dynq

#endif
