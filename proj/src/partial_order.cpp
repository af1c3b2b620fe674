#include "orderlab/partial_order.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orderlab {

std::string OrderViolation::to_string() const {
    std::ostringstream os;
    switch (axiom) {
        case OrderAxiom::Reflexivity: os << "reflexivity"; break;
        case OrderAxiom::Antisymmetry: os << "antisymmetry"; break;
        case OrderAxiom::Transitivity: os << "transitivity"; break;
    }
    os << " violated at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ",";
        os << witness[i];
    }
    os << ")";
    return os.str();
}

std::optional<OrderViolation> check_order_axioms(const RelationMatrix& leq) {
    int n = static_cast<int>(leq.size());
    for (const auto& row : leq)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("check_order_axioms: relation matrix is not square");

    for (int x = 0; x < n; ++x)
        if (!leq[x][x]) return OrderViolation{OrderAxiom::Reflexivity, {x}};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (leq[x][y] && leq[y][x]) return OrderViolation{OrderAxiom::Antisymmetry, {x, y}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!leq[x][y] || y == x) continue;
            for (int z = 0; z < n; ++z)
                if (leq[y][z] && !leq[x][z])
                    return OrderViolation{OrderAxiom::Transitivity, {x, y, z}};
        }
    return std::nullopt;
}

PartialOrderPrefix PartialOrderPrefix::from_relation(RelationMatrix leq) {
    if (auto v = check_order_axioms(leq))
        throw std::invalid_argument("partial order: " + v->to_string());
    PartialOrderPrefix p;
    p.leq_ = std::move(leq);
    return p;
}

PartialOrderPrefix PartialOrderPrefix::from_construction(RelationMatrix leq) {
    if (auto v = check_order_axioms(leq))
        throw std::logic_error("constructed order: " + v->to_string());
    PartialOrderPrefix p;
    p.leq_ = std::move(leq);
    return p;
}

namespace {

LinearOrderPrefix make_linear(RelationMatrix leq, bool trusted) {
    int n = static_cast<int>(leq.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!leq[x][y] && !leq[y][x]) {
                std::string msg = "linear order: totality violated at (" + std::to_string(x) + "," + std::to_string(y) + ")";
                if (trusted) throw std::logic_error(msg);
                throw std::invalid_argument(msg);
            }
    // Totality checked here, the partial-order axioms by the wrapped factory.
    (void)trusted;
    return LinearOrderPrefix{};
}

} // namespace

LinearOrderPrefix LinearOrderPrefix::from_relation(RelationMatrix leq) {
    make_linear(leq, false);
    LinearOrderPrefix l;
    l.order_ = PartialOrderPrefix::from_relation(std::move(leq));
    return l;
}

LinearOrderPrefix LinearOrderPrefix::from_construction(RelationMatrix leq) {
    make_linear(leq, true);
    LinearOrderPrefix l;
    l.order_ = PartialOrderPrefix::from_construction(std::move(leq));
    return l;
}

const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::Small: return "small";
        case ElementKind::Large: return "large";
        case ElementKind::Isolated: return "isolated";
        case ElementKind::Unstable: return "unstable-at-horizon";
    }
    return "?";
}

const char* to_string(StabilityKind k) {
    switch (k) {
        case StabilityKind::StableSI: return "stable-SI";
        case StabilityKind::StableLI: return "stable-LI";
        case StabilityKind::WeaklyStable: return "weakly-stable";
        case StabilityKind::NotWeaklyStable: return "not-weakly-stable";
    }
    return "?";
}

namespace {

enum class RelKind { Below, Above, Incomparable };

RelKind rel_kind(const PartialOrderPrefix& p, int x, int y) {
    if (p.leq(x, y)) return RelKind::Below;
    if (p.leq(y, x)) return RelKind::Above;
    return RelKind::Incomparable;
}

} // namespace

ElementClassification classify_elements(const PartialOrderPrefix& p, int tailWindow) {
    int n = p.size();
    if (tailWindow < 0 || tailWindow >= n)
        throw std::invalid_argument("classify_elements: insufficient horizon for the tail window");

    ElementClassification cls;
    cls.tailWindow = tailWindow;
    cls.kind.resize(n);
    cls.stabilizationStage.resize(n);

    int tailFrom = n - tailWindow;
    for (int x = 0; x < n; ++x) {
        bool small = true, large = true, isolated = true;
        for (int y = tailFrom; y < n; ++y) {
            if (y == x) continue;
            switch (rel_kind(p, x, y)) {
                case RelKind::Below: large = false; isolated = false; break;
                case RelKind::Above: small = false; isolated = false; break;
                case RelKind::Incomparable: small = false; large = false; break;
            }
        }
        if (small) cls.kind[x] = ElementKind::Small;
        else if (large) cls.kind[x] = ElementKind::Large;
        else if (isolated) cls.kind[x] = ElementKind::Isolated;
        else cls.kind[x] = ElementKind::Unstable;

        // Least stage from which x relates one way to everything later.
        int stab = x + 1;
        if (x + 1 < n) {
            RelKind last = rel_kind(p, x, n - 1);
            for (int y = n - 2; y > x; --y)
                if (rel_kind(p, x, y) != last) { stab = y + 1; break; }
        }
        cls.stabilizationStage[x] = (stab == x + 1) ? 0 : stab;
    }
    return cls;
}

StabilityKind stability_kind(const ElementClassification& cls) {
    bool anySmall = false, anyLarge = false;
    for (auto k : cls.kind) {
        if (k == ElementKind::Unstable)
            throw std::invalid_argument("stability_kind: unstable-at-horizon element, horizon too small");
        anySmall |= (k == ElementKind::Small);
        anyLarge |= (k == ElementKind::Large);
    }
    if (!anyLarge) return StabilityKind::StableSI;
    if (!anySmall) return StabilityKind::StableLI;
    return StabilityKind::WeaklyStable;
}

namespace {

std::vector<int> norm_set(std::vector<int> S, int bound, const char* who) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (!S.empty() && (S.front() < 0 || S.back() >= bound))
        throw std::invalid_argument(std::string(who) + ": element out of prefix range");
    return S;
}

} // namespace

PairPropertyResult check_chain(const std::vector<int>& S, const PartialOrderPrefix& p) {
    auto s = norm_set(S, p.size(), "check_chain");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (p.incomparable(s[i], s[j]))
                return {false, {s[i], s[j]}, "incomparable pair"};
    return {};
}

PairPropertyResult check_antichain(const std::vector<int>& S, const PartialOrderPrefix& p) {
    auto s = norm_set(S, p.size(), "check_antichain");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!p.incomparable(s[i], s[j]))
                return {false, {s[i], s[j]}, "comparable pair"};
    return {};
}

PairPropertyResult check_ascending(const std::vector<int>& S, const LinearOrderPrefix& l) {
    auto s = norm_set(S, l.size(), "check_ascending");
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!l.less(s[i], s[j]))
                return {false, {s[i], s[j]}, "numeric order not respected"};
    return {};
}

PairPropertyResult check_descending(const std::vector<int>& S, const LinearOrderPrefix& l) {
    auto s = norm_set(S, l.size(), "check_descending");
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!l.less(s[j], s[i]))
                return {false, {s[i], s[j]}, "numeric order not reversed"};
    return {};
}

std::string to_dot(const PartialOrderPrefix& p) {
    int n = p.size();
    std::ostringstream os;
    os << "digraph order {\n  rankdir=BT;\n";
    for (int x = 0; x < n; ++x) os << "  " << x << ";\n";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !p.leq(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
            if (cover) os << "  " << x << " -> " << y << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace orderlab
