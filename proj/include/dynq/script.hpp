#ifndef DYNQ_SCRIPT_HPP
#define DYNQ_SCRIPT_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynq/dfa.hpp"
#include "dynq/dist.hpp"
#include "dynq/grammar.hpp"
#include "dynq/graph.hpp"
#include "dynq/queryspec.hpp"

namespace dynq {

/// Everything a program needs to start: the graph(s) plus the query
/// spec matching the selected program.  Multi-factor programs accept
/// either one graph (replicated) or one per factor/copy.
struct EngineConfig {
    std::string program;
    std::vector<LabeledGraph> graphs;
    std::optional<Dfa> dfa;
    std::optional<CnfGrammar> grammar;
    std::optional<EcrpqQuery> ecrpq;
    std::optional<NepsSpec> neps;
    int lmax = 0;  // 0 = program default
    DistRegime regime = DistRegime::Acyclic;
};

/**
 * One (graph, state) mutation unit behind a uniform interface:
 * modifications apply strictly sequentially, queries read the current
 * answers in canonical order.
 */
class Engine {
public:
    virtual ~Engine() = default;

    /// Applies one modification; broadcast to all factors/copies for
    /// multi-graph programs.  Throws EngineError subclasses.
    virtual void modify(const Modification& m) = 0;

    /// Rule-bit flip; only meaningful for neps.
    virtual void flip(int rule, int bit);

    /// Writes the current answers, one tuple per line, each line
    /// prefixed with `prefix`.  args come from the script's query line.
    virtual void query(const std::vector<std::string>& args, std::ostream& out,
                       const std::string& prefix) = 0;

    /// The graph modifications are validated against.
    virtual const LabeledGraph& graph() const = 0;
};

std::unique_ptr<Engine> make_engine(const EngineConfig& config);

/// Known program names for the CLI.
const std::vector<std::string>& program_names();

struct ScriptResult {
    int exit_code = 0;       // 0 ok, 2 state/usage error
    int failed_line = -1;    // 1-based script line of the failure
    std::string error;
};

/// Replays a script against the engine: ins/del/flip lines mutate,
/// query lines emit answers prefixed by their line number.  On error,
/// emitted answers stay exactly the prefix before the failing line and
/// execution halts.
ScriptResult execute_script(Engine& engine, std::istream& script, std::ostream& out);

}  // namespace dynq

#endif
