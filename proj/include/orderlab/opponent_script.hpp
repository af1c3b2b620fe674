#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orderlab {

/// Scripted enumeration kinds standing in for effectively open opponents.
/// Events become witnessed at their stage and stay witnessed afterwards.
enum class ScriptKind { SetFormula, PairFormula, ElementFormula, Functional };

const char* to_string(ScriptKind k);

struct ScriptEvent {
    int stage = 0;
    // set-formula payload: R; pair-formula payload: (R, S) with max R < min S
    std::vector<int> R;
    std::vector<int> S;
    // element-formula payload
    int u = -1, v = -1;
    // functional payload: argument and finite value of column codes
    int x = -1;
    std::vector<std::int64_t> value;
};

struct OpponentScript {
    ScriptKind kind = ScriptKind::SetFormula;
    int budget = 0;                  // stage horizon the script is defined up to
    std::vector<ScriptEvent> events; // sorted by stage
    // functional tag (e, k); meaningful only for ScriptKind::Functional
    int e = -1, k = -1;

    /// Structural validation; throws std::invalid_argument. Payload sets must
    /// be sorted, duplicate-free and nonempty; pair payloads need
    /// max R < min S; element payloads need u != v; functional scripts need at
    /// most one value per argument and the block convention
    /// max(value(x)) < min(value(x')) for x < x'.
    void validate() const;

    /// Sorts events by stage (stable) and payload sets ascending.
    void normalize();
};

} // namespace orderlab
