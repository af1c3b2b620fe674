#pragma once

#include "orderlab/coloring.hpp"
#include "orderlab/partial_order.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orderlab::forcing {

struct ConditionCheck {
    bool ok = true;
    std::string detail;
};

/// Mathias-style condition over a coloring: finite parts below a reservoir
/// bitmap. Part i collects points committed to color i.
struct PartedCondition {
    std::vector<std::vector<int>> parts;
    std::vector<std::uint8_t> reservoir; // bitmap over [0, horizon)

    int horizon() const { return static_cast<int>(reservoir.size()); }
    std::vector<int> reservoir_members() const;
};

/// Sortedness, disjointness, parts strictly below the reservoir, everything
/// inside the coloring, and part i monochromatic in color i; `pseudo` relaxes
/// the part check to consecutive pairs.
ConditionCheck check_parted_condition(const PartedCondition& c, const ColoringPrefix& f,
                                      bool pseudo);

/// Condition over a partial order: an ascending part headed for an infinite
/// chain of small elements, an antichain part headed for isolated ones.
struct OrderCondition {
    std::vector<int> F0; // ascending part
    std::vector<int> F1; // antichain part
};

ConditionCheck check_order_condition(const OrderCondition& c, const PartialOrderPrefix& p,
                                     const ElementClassification& cls);

struct Reservoir {
    std::vector<int> members;
    int complement = 0; // points below the horizon the condition rules out
};

/// Admissible future points below `horizon`: numerically above both parts,
/// order-above all of F0, incomparable to all of F1.
Reservoir X_of(const OrderCondition& c, const PartialOrderPrefix& p, int horizon);

struct OrderExtension {
    std::optional<OrderCondition> next;
    int pickedSmall = -1;
    int pickedIsolated = -1;
    std::string stall; // set when no extension exists, a normal outcome
};

/// One synchronized step: the least small reservoir point joins F0 and the
/// least isolated one joins F1; stalls when either class is missing from the
/// reservoir.
OrderExtension extend_both(const OrderCondition& c, const PartialOrderPrefix& p,
                           const ElementClassification& cls, int horizon);

struct SplitExtension {
    std::vector<int> E0, E1;
};

/// First pair of disjoint reservoir subsets, each at most sizeBound and
/// jointly nonempty, with F0 ∪ E0 ascending, F1 ∪ E1 an antichain, and max E0
/// order-below every E1 element (vacuous for empty E0). Candidates are
/// enumerated shortlex: by total size, then |E0|, then E0 and E1 as
/// lexicographic combinations of the reservoir.
std::optional<SplitExtension> split_pair_search(const OrderCondition& c,
                                                const PartialOrderPrefix& p, int horizon,
                                                int sizeBound);

enum class ExtensionMode { Limit, Threshold };

struct ExtensionPolicy {
    ExtensionMode mode = ExtensionMode::Limit;
    int tailWindow = 0; // limit mode: window feeding the column-limit read
    int threshold = -1; // threshold mode: -1 means horizon / 4
};

struct PartedExtension {
    std::optional<PartedCondition> next;
    int picked = -1;
    bool approximate = false; // threshold mode cannot certify a limit color
    std::string stall;
};

/// Least reservoir point x joining part i with every pair into the part
/// colored i; the next reservoir is {y in X : y > x, f(x,y) = i}. Limit mode
/// additionally demands x's tail color be i, threshold mode only that the
/// next reservoir reaches the bound.
PartedExtension cac_extension_search(const PartedCondition& c, const ColoringPrefix& f, int part,
                                     const ExtensionPolicy& policy);

/// Same search under the pseudo rule: only the color from the last part
/// element to x is constrained.
PartedExtension psrt_extension_search(const PartedCondition& c, const ColoringPrefix& f, int part,
                                      const ExtensionPolicy& policy);

} // namespace orderlab::forcing
