#ifndef DYNQ_SYNC_HPP
#define DYNQ_SYNC_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dynq {

/**
 * Synchronous m-tape automaton over Sigma with end-padding symbol ⊥
 * (written `_` in files).  Recognizes an m-ary regular relation: a word
 * tuple belongs to the relation iff the automaton accepts its canonical
 * padded encoding.  May be nondeterministic.
 */
struct SyncAutomaton {
    struct Transition {
        int from;
        std::vector<std::string> column;  // size = arity; "" denotes ⊥
        int to;
    };

    int arity = 1;
    int num_states = 0;
    int start = 0;
    std::vector<int> finals;
    std::vector<Transition> transitions;

    bool is_final(int q) const;
    static bool is_pad(const std::string& s) { return s.empty(); }

    /// Runs the automaton on the canonical padded encoding of `words`.
    bool accepts_tuple(const std::vector<std::vector<std::string>>& words) const;
};

struct SyncValidation {
    bool ok = true;
    int tape = -1;
    int state = -1;
};

/// Structural padding check: on every useful run (through states that
/// are reachable and co-reachable), once a tape reads ⊥ it never reads a
/// symbol again.  Returns the offending tape and state otherwise.
SyncValidation validate_sync(const SyncAutomaton& a);

/// Like validate_sync but throws PaddingViolation on failure.
void require_valid_sync(const SyncAutomaton& a);

/// Parses the sync-automaton file format: arity/states/start/final lines
/// and `trans <p> <s1,...,sm> <q>` with `_` for ⊥.
SyncAutomaton parse_sync(std::istream& in);
SyncAutomaton parse_sync_text(const std::string& text);
SyncAutomaton load_sync(const std::string& path);

}  // namespace dynq

#endif
