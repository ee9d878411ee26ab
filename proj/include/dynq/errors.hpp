#ifndef DYNQ_ERRORS_HPP
#define DYNQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynq {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : EngineError {
    using EngineError::EngineError;
};

struct DeleteAbsentEdge : EngineError {
    DeleteAbsentEdge(const std::string& sym, int u, int v)
        : EngineError("delete of absent edge " + sym + " " + std::to_string(u) + " " +
                      std::to_string(v)) {}
};

struct CycleWouldForm : EngineError {
    CycleWouldForm(int u, int v)
        : EngineError("inserting " + std::to_string(u) + " -> " + std::to_string(v) +
                      " would close a cycle") {}
};

struct UnsupportedModification : EngineError {
    using EngineError::EngineError;
};

struct BoundExceeded : EngineError {
    using EngineError::EngineError;
};

struct ArityUnsupported : EngineError {
    using EngineError::EngineError;
};

struct NondeterministicSpec : EngineError {
    using EngineError::EngineError;
};

struct PaddingViolation : EngineError {
    int tape;
    int state;
    PaddingViolation(int tape_, int state_)
        : EngineError("padding symbol on tape " + std::to_string(tape_) +
                      " is followed by a symbol (state " + std::to_string(state_) + ")"),
          tape(tape_), state(state_) {}
};

struct BudgetExceeded : EngineError {
    using EngineError::EngineError;
};

struct ComplexityGuard : EngineError {
    using EngineError::EngineError;
};

}  // namespace dynq

#endif
