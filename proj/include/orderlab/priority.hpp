#pragma once

#include "orderlab/coloring.hpp"
#include "orderlab/opponent_script.hpp"
#include "orderlab/partial_order.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orderlab::priority {

struct StrategyState {
    int marker = 0;      // non-decreasing over stages
    bool satisfied = false;
    int actions = 0;
};

struct StageRecord {
    int stage = 0;                       // the stage s+1 this record closes
    std::vector<int> attention;          // priority indices requiring attention
    int acted = -1;                      // acting priority index, -1 for default
    ScriptEvent witness;                 // payload acted on (valid when acted >= 0)
    std::vector<int> markers;            // per marker slot, after the stage
    std::vector<std::uint8_t> satisfied; // per strategy, after the stage
    std::vector<std::vector<std::int64_t>> sets; // membership snapshots, after the stage
};

struct ConstructionTranscript {
    std::string kind;
    std::string pairing;
    int maxStage = 0;
    std::vector<std::string> setNames;   // labels the snapshot slots
    std::vector<std::string> strategyNames;
    std::vector<StageRecord> stages;

    /// Partition / budget sanity for the recorded snapshots; throws
    /// std::logic_error naming the first broken stage.
    void check_partitions() const;
};

/// Bare finite-injury scheduler over formula scripts: strategies indexed by
/// list position (lower index = higher priority), one acts per stage, acting
/// satisfies the strategy and resets markers and flags of all lower-priority
/// strategies. Windows: pair payloads need marker < min R and max S <= s at
/// stage s+1, set and element payloads live inside [marker, s]. No membership
/// state is built.
ConstructionTranscript run_injury(const std::vector<OpponentScript>& opponents, int maxStage);

struct StableColoringResult {
    ConstructionTranscript transcript;
    ColoringPrefix coloring;                      // size maxStage
    std::vector<std::vector<std::int64_t>> finalSets; // {A0, A1}
    std::vector<StrategyState> strategies;
    std::vector<std::optional<ScriptEvent>> lastWitness; // per strategy
    /// First stage from which element x's side never changes again.
    std::vector<int> stabilizedAt;
};

/// Stagewise two-class coloring construction. At stage s+1 the newborn s gets
/// f(x,s) = side(x) for x < s; a pair-formula strategy with witnessed
/// (R,S) inside (marker, s] acts by sending (marker, min S) to side 1 and
/// [min S, s] to side 0, then injures lower priorities; by default s joins
/// side 0. All opponents must be pair-formula scripts.
StableColoringResult build_stable_semitransitive(const std::vector<OpponentScript>& opponents,
                                                 int maxStage);

/// Opponent bundle for the three-class order construction. Scheme `small`
/// forces witnessed sets into the below-everything-later class, `isolated`
/// into the incomparable class, `split` reacts to witnessed element pairs.
struct OrderOpponents {
    std::vector<OpponentScript> small;    // set-formula
    std::vector<OpponentScript> isolated; // set-formula
    std::vector<OpponentScript> split;    // element-formula

    int groups() const;
    void validate() const;
};

struct WeaklyStableOrderResult {
    ConstructionTranscript transcript;
    PartialOrderPrefix order;                     // size maxStage
    std::vector<std::vector<std::int64_t>> finalSets; // {S, L, I}
    std::vector<StrategyState> strategies;        // interleaved priority order
    std::vector<std::optional<ScriptEvent>> lastWitness;
    std::vector<int> stabilizedAt;
    /// scheme of each priority slot: 0 small, 1 isolated, 2 split
    std::vector<int> schemeOf;
    std::vector<int> groupOf;
};

/// Stagewise three-class order construction. The newborn s is placed below,
/// above or incomparable to each older x according to x's current class; one
/// strategy acts per stage over the window [groupMarker, s]; split strategies
/// route the up-set or down-set of their witness v and isolate the rest;
/// acting moves the markers of every group from the actor's on, and clears
/// lower-priority flags; by default s is isolated. Element 0 starts isolated.
WeaklyStableOrderResult build_weakly_stable_order(const OrderOpponents& opponents, int maxStage);

/// Sum of the second pairing component over all codes <= code: the first
/// column a strategy with this tag may touch, sized so the per-column budgets
/// of all earlier tags fit strictly below it.
std::int64_t column_floor(std::int64_t code);

struct CeSetResult {
    ConstructionTranscript transcript;
    std::vector<std::int64_t> W;        // sorted codes
    std::vector<int> enumeratedAt;      // parallel to W
    std::vector<StrategyState> strategies;
    std::vector<std::optional<ScriptEvent>> lastWitness;
    std::vector<std::int64_t> codes;    // pairing code per strategy tag
    std::vector<std::int64_t> columnFloor; // first column the strategy may touch
};

/// Column-budgeted enumeration: strategy (e,k) may act once, at a stage
/// s > code(e,k), on the least argument x < s whose witnessed value has at
/// most k elements, all in columns >= columnFloor(e,k); it enumerates that
/// value. Keeps |column_i ∩ W| <= i for every i. Priority ties go to the
/// least code; one strategy acts per stage.
CeSetResult build_ce_set(const std::vector<OpponentScript>& functionals, int maxStage);

/// Total non-decreasing stand-in for a limit modulus.
struct ModulusStandIn {
    std::vector<int> values;
    void validate() const;
    int operator()(int i) const { return values.at(static_cast<std::size_t>(i)); }
    int domain() const { return static_cast<int>(values.size()); }
};

struct DiagonalPrefix {
    std::vector<std::int64_t> members; // sorted, restricted to [0, maxCode)
    std::int64_t maxCode = 0;          // every code below is decided
};

/// A = union over i < horizon of the first modulus(i) elements of column i,
/// minus W; returned exactly on [0, maxCode) with maxCode = horizon(horizon+1)/2,
/// below which every code decodes into a column < horizon.
DiagonalPrefix compute_A_from_W(const std::vector<std::int64_t>& W, const ModulusStandIn& modulus,
                                int horizon);

struct RequirementReport {
    int index = 0;          // priority index
    std::string scheme;     // "pair", "small", "isolated", "split", "functional"
    bool applicable = true; // essential / eligible within the given bounds
    bool satisfied = false;
    int stage = -1;
    std::string detail;
};

/// Requirement audit for the two-class coloring run: every opponent essential
/// within (xBound, yBound) must be satisfied with its last witness R inside
/// the side-1 limit and S inside the side-0 limit.
std::vector<RequirementReport> verify_requirements(const StableColoringResult& run,
                                                   const std::vector<OpponentScript>& opponents,
                                                   int xBound, int yBound);

/// Requirement audit for the three-class order run: essential small-scheme
/// witnesses must land in the final S class, isolated-scheme in I, and for
/// split witnesses (u,v): u in I and v in S or L.
std::vector<RequirementReport> verify_requirements(const WeaklyStableOrderResult& run,
                                                   const OrderOpponents& opponents, int xBound);

/// Requirement audit for the enumeration run: every functional script with a
/// qualifying witnessed value reachable within maxStage must be satisfied,
/// with the acted value inside W.
std::vector<RequirementReport> verify_requirements(const CeSetResult& run,
                                                   const std::vector<OpponentScript>& functionals);

} // namespace orderlab::priority
