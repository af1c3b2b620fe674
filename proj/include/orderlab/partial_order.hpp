#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orderlab {

using RelationMatrix = std::vector<std::vector<std::uint8_t>>;

enum class OrderAxiom { Reflexivity, Antisymmetry, Transitivity };

struct OrderViolation {
    OrderAxiom axiom;
    std::vector<int> witness; // 1, 2 or 3 elements depending on the axiom
    std::string to_string() const;
};

/// First violated axiom of a raw relation, checked in the order reflexivity,
/// antisymmetry, transitivity with least witnesses; nullopt when the relation
/// is a partial order.
std::optional<OrderViolation> check_order_axioms(const RelationMatrix& leq);

/// Validated finite prefix of a partial order on [0, N).
class PartialOrderPrefix {
public:
    PartialOrderPrefix() = default;

    /// Throws std::invalid_argument carrying the violation when `leq` is not
    /// reflexive, antisymmetric and transitive.
    static PartialOrderPrefix from_relation(RelationMatrix leq);

    /// Trusted constructor for relations that are correct by construction;
    /// still asserts the axioms and throws std::logic_error on violation.
    static PartialOrderPrefix from_construction(RelationMatrix leq);

    int size() const { return static_cast<int>(leq_.size()); }
    bool leq(int x, int y) const { return leq_[x][y] != 0; }
    bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }
    const RelationMatrix& relation() const { return leq_; }

private:
    RelationMatrix leq_;
};

/// Validated linear order prefix: a partial order that is total.
class LinearOrderPrefix {
public:
    LinearOrderPrefix() = default;
    static LinearOrderPrefix from_relation(RelationMatrix leq);
    static LinearOrderPrefix from_construction(RelationMatrix leq);

    int size() const { return order_.size(); }
    bool leq(int x, int y) const { return order_.leq(x, y); }
    bool less(int x, int y) const { return x != y && order_.leq(x, y); }
    const PartialOrderPrefix& as_partial() const { return order_; }

private:
    PartialOrderPrefix order_;
};

enum class ElementKind { Small, Large, Isolated, Unstable };

const char* to_string(ElementKind k);

struct ElementClassification {
    int tailWindow = 0;
    std::vector<ElementKind> kind;
    /// Least stage from which x's relation kind to every later element is
    /// constant; 0 when constant throughout, nullopt never occurs at a finite
    /// horizon but the field stays optional for stagewise limit data.
    std::vector<std::optional<int>> stabilizationStage;
};

/// Tail-window classification: x is small when x <=_P y for every y != x in
/// the window [N - tailWindow, N), large when y <=_P x throughout, isolated
/// when incomparable throughout, and unstable-at-horizon when the window is
/// mixed. Requires tailWindow < N.
ElementClassification classify_elements(const PartialOrderPrefix& p, int tailWindow);

enum class StabilityKind { StableSI, StableLI, WeaklyStable, NotWeaklyStable };

const char* to_string(StabilityKind k);

/// Aggregate verdict over a classification without unstable elements: no
/// large element -> StableSI, else no small element -> StableLI, else
/// WeaklyStable. Throws when some element is unstable-at-horizon.
StabilityKind stability_kind(const ElementClassification& cls);

struct PairPropertyResult {
    bool ok = true;
    std::vector<int> witness;
    std::string detail;
};

/// Every two elements of S comparable.
PairPropertyResult check_chain(const std::vector<int>& S, const PartialOrderPrefix& p);
/// Every two distinct elements of S incomparable.
PairPropertyResult check_antichain(const std::vector<int>& S, const PartialOrderPrefix& p);
/// Numeric order on S agrees with the linear order.
PairPropertyResult check_ascending(const std::vector<int>& S, const LinearOrderPrefix& l);
/// Numeric order on S reverses the linear order.
PairPropertyResult check_descending(const std::vector<int>& S, const LinearOrderPrefix& l);

/// Hasse-reduced DOT rendering (cover edges only).
std::string to_dot(const PartialOrderPrefix& p);

} // namespace orderlab
