#include "orderlab/forcing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orderlab::forcing {

namespace {

ConditionCheck fail(std::string detail) {
    return {false, std::move(detail)};
}

bool sorted_strict(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
}

/// Numeric order agrees with the partial order on every pair.
bool ascending_in(const std::vector<int>& v, const PartialOrderPrefix& p) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!p.leq(v[i], v[j])) return false;
    return true;
}

bool antichain_in(const std::vector<int>& v, const PartialOrderPrefix& p) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!p.incomparable(v[i], v[j])) return false;
    return true;
}

/// Lexicographically next size-r index combination over [0, n); false when
/// exhausted.
bool next_combination(std::vector<int>& idx, int n) {
    const int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - (r - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<int> PartedCondition::reservoir_members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < reservoir.size(); ++i)
        if (reservoir[i]) out.push_back(static_cast<int>(i));
    return out;
}

ConditionCheck check_parted_condition(const PartedCondition& c, const ColoringPrefix& f,
                                      bool pseudo) {
    if (f.arity() != 2) return fail("condition checks need an arity-2 coloring");
    if (static_cast<int>(c.parts.size()) > f.colors())
        return fail("more parts than colors");
    if (c.horizon() > f.size()) return fail("reservoir horizon exceeds the coloring");

    std::set<int> seen;
    int maxPart = -1;
    for (const auto& part : c.parts) {
        if (!sorted_strict(part)) return fail("part not sorted and duplicate-free");
        for (int x : part) {
            if (x < 0 || x >= f.size()) return fail("part element outside the coloring");
            if (!seen.insert(x).second) return fail("parts overlap");
            maxPart = std::max(maxPart, x);
        }
    }
    const auto members = c.reservoir_members();
    if (!members.empty() && maxPart >= members.front())
        return fail("parts must lie strictly below the reservoir");

    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        const auto& part = c.parts[i];
        const int color = static_cast<int>(i);
        if (pseudo) {
            for (std::size_t j = 1; j < part.size(); ++j)
                if (f.pair(part[j - 1], part[j]) != color)
                    return fail("part " + std::to_string(i) + " not pseudo-monochromatic");
        } else {
            for (std::size_t j = 0; j < part.size(); ++j)
                for (std::size_t l = j + 1; l < part.size(); ++l)
                    if (f.pair(part[j], part[l]) != color)
                        return fail("part " + std::to_string(i) + " not monochromatic");
        }
    }
    return {};
}

ConditionCheck check_order_condition(const OrderCondition& c, const PartialOrderPrefix& p,
                                     const ElementClassification& cls) {
    if (static_cast<int>(cls.kind.size()) != p.size())
        return fail("classification does not cover the order");
    if (!sorted_strict(c.F0) || !sorted_strict(c.F1))
        return fail("parts must be sorted and duplicate-free");
    for (int x : c.F0) {
        if (x < 0 || x >= p.size()) return fail("F0 element outside the order");
        if (cls.kind[static_cast<std::size_t>(x)] != ElementKind::Small)
            return fail("F0 element " + std::to_string(x) + " not small");
    }
    for (int y : c.F1) {
        if (y < 0 || y >= p.size()) return fail("F1 element outside the order");
        if (cls.kind[static_cast<std::size_t>(y)] != ElementKind::Isolated)
            return fail("F1 element " + std::to_string(y) + " not isolated");
    }
    std::set<int> f0(c.F0.begin(), c.F0.end());
    for (int y : c.F1)
        if (f0.count(y)) return fail("parts overlap");
    if (!ascending_in(c.F0, p)) return fail("F0 not ascending");
    if (!antichain_in(c.F1, p)) return fail("F1 not an antichain");
    return {};
}

Reservoir X_of(const OrderCondition& c, const PartialOrderPrefix& p, int horizon) {
    if (horizon < 0 || horizon > p.size())
        throw std::invalid_argument("X_of: horizon outside the order");
    Reservoir out;
    for (int z = 0; z < horizon; ++z) {
        bool ok = true;
        for (int x : c.F0) ok = ok && x < z && p.leq(x, z);
        for (int y : c.F1) ok = ok && y < z && p.incomparable(y, z);
        if (ok)
            out.members.push_back(z);
        else
            ++out.complement;
    }
    return out;
}

OrderExtension extend_both(const OrderCondition& c, const PartialOrderPrefix& p,
                           const ElementClassification& cls, int horizon) {
    const auto check = check_order_condition(c, p, cls);
    if (!check.ok) throw std::invalid_argument("extend_both: " + check.detail);

    OrderExtension out;
    const auto X = X_of(c, p, horizon);
    for (int z : X.members) {
        if (out.pickedSmall < 0 && cls.kind[static_cast<std::size_t>(z)] == ElementKind::Small)
            out.pickedSmall = z;
        if (out.pickedIsolated < 0 && cls.kind[static_cast<std::size_t>(z)] == ElementKind::Isolated)
            out.pickedIsolated = z;
    }
    if (out.pickedSmall < 0) {
        out.stall = "no small point in the reservoir";
        return out;
    }
    if (out.pickedIsolated < 0) {
        out.stall = "no isolated point in the reservoir";
        return out;
    }
    OrderCondition next = c;
    next.F0.push_back(out.pickedSmall);
    next.F1.push_back(out.pickedIsolated);
    out.next = std::move(next);
    return out;
}

std::optional<SplitExtension> split_pair_search(const OrderCondition& c,
                                                const PartialOrderPrefix& p, int horizon,
                                                int sizeBound) {
    if (sizeBound < 0) throw std::invalid_argument("split_pair_search: negative size bound");
    const auto X = X_of(c, p, horizon).members;
    const int n = static_cast<int>(X.size());

    auto feasible = [&](const std::vector<int>& E0, const std::vector<int>& E1) {
        for (int a : E0)
            for (int b : E1)
                if (a == b) return false;
        std::vector<int> chain = c.F0;
        chain.insert(chain.end(), E0.begin(), E0.end());
        if (!ascending_in(chain, p)) return false;
        std::vector<int> anti = c.F1;
        anti.insert(anti.end(), E1.begin(), E1.end());
        if (!antichain_in(anti, p)) return false;
        if (!E0.empty())
            for (int b : E1)
                if (!p.leq(E0.back(), b)) return false;
        return true;
    };

    for (int total = 1; total <= 2 * sizeBound; ++total) {
        for (int e0 = std::max(0, total - sizeBound); e0 <= std::min(total, sizeBound); ++e0) {
            const int e1 = total - e0;
            if (e0 > n || e1 > n) continue;
            std::vector<int> i0(static_cast<std::size_t>(e0));
            for (int i = 0; i < e0; ++i) i0[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<int> E0;
                for (int i : i0) E0.push_back(X[static_cast<std::size_t>(i)]);
                std::vector<int> i1(static_cast<std::size_t>(e1));
                for (int i = 0; i < e1; ++i) i1[static_cast<std::size_t>(i)] = i;
                do {
                    std::vector<int> E1;
                    for (int i : i1) E1.push_back(X[static_cast<std::size_t>(i)]);
                    if (feasible(E0, E1)) return SplitExtension{E0, E1};
                } while (e1 > 0 && next_combination(i1, n));
            } while (e0 > 0 && next_combination(i0, n));
        }
    }
    return std::nullopt;
}

namespace {

PartedExtension parted_search(const PartedCondition& c, const ColoringPrefix& f, int part,
                              const ExtensionPolicy& policy, bool pseudo) {
    const auto check = check_parted_condition(c, f, pseudo);
    if (!check.ok) throw std::invalid_argument("extension search: " + check.detail);
    if (part < 0 || part >= static_cast<int>(c.parts.size()))
        throw std::invalid_argument("extension search: part index out of range");

    std::vector<std::optional<int>> limits;
    if (policy.mode == ExtensionMode::Limit) {
        if (policy.tailWindow < 1 || policy.tailWindow >= f.size())
            throw std::invalid_argument("extension search: tail window outside the coloring");
        limits = column_limits(f, policy.tailWindow);
    }
    const int bound = policy.threshold >= 0 ? policy.threshold : c.horizon() / 4;

    const auto members = c.reservoir_members();
    const auto& own = c.parts[static_cast<std::size_t>(part)];
    PartedExtension out;
    out.approximate = policy.mode == ExtensionMode::Threshold;

    for (int x : members) {
        bool fits = true;
        if (pseudo) {
            fits = own.empty() || f.pair(own.back(), x) == part;
        } else {
            for (int z : own) fits = fits && f.pair(z, x) == part;
        }
        if (!fits) continue;

        std::vector<int> Y;
        for (int y : members)
            if (y > x && f.pair(x, y) == part) Y.push_back(y);

        if (policy.mode == ExtensionMode::Limit) {
            const auto& lim = limits[static_cast<std::size_t>(x)];
            if (!lim || *lim != part) continue;
        } else if (static_cast<int>(Y.size()) < bound) {
            continue;
        }

        PartedCondition next = c;
        next.parts[static_cast<std::size_t>(part)].push_back(x);
        std::fill(next.reservoir.begin(), next.reservoir.end(), 0);
        for (int y : Y) next.reservoir[static_cast<std::size_t>(y)] = 1;
        out.next = std::move(next);
        out.picked = x;
        return out;
    }
    out.stall = "no reservoir point extends part " + std::to_string(part) + " under the policy";
    return out;
}

} // namespace

PartedExtension cac_extension_search(const PartedCondition& c, const ColoringPrefix& f, int part,
                                     const ExtensionPolicy& policy) {
    return parted_search(c, f, part, policy, false);
}

PartedExtension psrt_extension_search(const PartedCondition& c, const ColoringPrefix& f, int part,
                                      const ExtensionPolicy& policy) {
    return parted_search(c, f, part, policy, true);
}

} // namespace orderlab::forcing
