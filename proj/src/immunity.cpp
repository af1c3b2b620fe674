#include "orderlab/immunity.hpp"

#include "orderlab/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace orderlab::immunity {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::set<std::int64_t> as_set(const std::vector<std::int64_t>& v) {
    return {v.begin(), v.end()};
}

bool meets(const std::vector<std::int64_t>& block, const std::set<std::int64_t>& a) {
    for (std::int64_t z : block)
        if (a.count(z)) return true;
    return false;
}

void check_block(const std::vector<std::int64_t>& b, const std::string& who) {
    require(!b.empty(), who + ": empty block");
    require(std::is_sorted(b.begin(), b.end()) && std::adjacent_find(b.begin(), b.end()) == b.end(),
            who + ": block not sorted and duplicate-free");
    require(b.front() >= 0, who + ": negative block element");
}

} // namespace

const char* to_string(ArrayKind k) {
    switch (k) {
    case ArrayKind::Array: return "array";
    case ArrayKind::KEnum: return "kenum";
    case ArrayKind::CbEnum: return "cbenum";
    }
    return "array";
}

ArrayKind array_kind_from_string(const std::string& s) {
    if (s == "array") return ArrayKind::Array;
    if (s == "kenum") return ArrayKind::KEnum;
    if (s == "cbenum") return ArrayKind::CbEnum;
    throw std::invalid_argument("unknown array kind: " + s);
}

void ArrayOfSets::validate() const {
    for (const auto& b : blocks) check_block(b, "array of sets");
    if (kind == ArrayKind::KEnum) {
        require(k >= 1, "k-bounded array needs k >= 1");
        for (const auto& b : blocks)
            require(static_cast<int>(b.size()) <= k, "block exceeds the k bound");
    }
}

void CoCeApprox::validate() const {
    require(domain >= 0, "approximation domain must be nonnegative");
    require(!stages.empty(), "approximation needs at least one snapshot");
    for (std::size_t t = 0; t < stages.size(); ++t) {
        const auto& st = stages[t];
        require(std::is_sorted(st.begin(), st.end()) &&
                    std::adjacent_find(st.begin(), st.end()) == st.end(),
                "snapshot not sorted and duplicate-free");
        if (!st.empty())
            require(st.front() >= 0 && st.back() < domain, "snapshot element outside the domain");
        if (t > 0)
            require(std::includes(stages[t - 1].begin(), stages[t - 1].end(), st.begin(), st.end()),
                    "snapshots must shrink");
    }
}

const std::vector<std::int64_t>& CoCeApprox::snapshot(int t) const {
    require(t >= 0 && t < static_cast<int>(stages.size()), "snapshot index out of range");
    return stages[static_cast<std::size_t>(t)];
}

const std::vector<std::int64_t>& CoCeApprox::final_stage() const {
    require(!stages.empty(), "approximation has no snapshots");
    return stages.back();
}

void StringBlockEnum::validate() const {
    for (const auto& b : blocks)
        require(!b.empty(), "string enumeration: empty block");
}

bool traces(const ArrayOfSets& arr, const std::vector<std::int64_t>& A) {
    arr.validate();
    const auto a = as_set(A);
    for (const auto& b : arr.blocks)
        if (!meets(b, a)) return false;
    return true;
}

std::vector<std::int64_t> principal_function(std::vector<std::int64_t> A) {
    require(std::is_sorted(A.begin(), A.end()) &&
                std::adjacent_find(A.begin(), A.end()) == A.end(),
            "principal_function: set must be strictly increasing");
    require(A.empty() || A.front() >= 0, "principal_function: negative element");
    return A;
}

bool dominates(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g) {
    const std::size_t n = std::min(f.size(), g.size());
    for (std::size_t i = 0; i < n; ++i)
        if (f[i] < g[i]) return false;
    return true;
}

std::vector<std::int64_t> kenum_to_subset(const ArrayOfSets& kenum,
                                          const std::vector<std::int64_t>& A, int threshold) {
    kenum.validate();
    require(kenum.kind == ArrayKind::KEnum, "kenum_to_subset: array must be k-bounded");
    require(threshold >= 1, "kenum_to_subset: threshold must be positive");
    const auto a = as_set(A);
    for (const auto& b : kenum.blocks)
        require(meets(b, a), "kenum_to_subset: a block misses the traced set");

    std::vector<std::vector<std::int64_t>> blocks = kenum.blocks;
    int k = kenum.k;
    while (k > 1) {
        std::set<std::int64_t> certified;
        for (const auto& b : blocks)
            if (!a.count(b.front())) certified.insert(b.front());
        if (static_cast<int>(certified.size()) >= threshold) {
            // stripped minima were outside A, so the tails keep tracing it
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& b : blocks)
                if (!a.count(b.front()))
                    next.emplace_back(b.begin() + 1, b.end());
            blocks = std::move(next);
            --k;
            continue;
        }
        const std::int64_t cut = certified.empty() ? -1 : *certified.rbegin();
        std::set<std::int64_t> out;
        for (const auto& b : blocks)
            if (b.front() > cut) out.insert(b.front());
        return {out.begin(), out.end()};
    }
    std::set<std::int64_t> out;
    for (const auto& b : blocks) out.insert(b.front());
    return {out.begin(), out.end()};
}

UnionSplit union_hyp_transform(const ArrayOfSets& arr, const CoCeApprox& a0, int horizon,
                               int threshold) {
    arr.validate();
    a0.validate();
    require(threshold >= 1, "union_hyp_transform: threshold must be positive");
    require(horizon >= 0 && horizon < static_cast<int>(a0.stages.size()),
            "union_hyp_transform: horizon exceeds the approximation");
    const auto snap = as_set(a0.snapshot(horizon));

    std::vector<int> certified;
    for (std::size_t i = 0; i < arr.blocks.size(); ++i)
        if (!meets(arr.blocks[i], snap)) certified.push_back(static_cast<int>(i));

    UnionSplit out;
    out.blocks.kind = arr.kind;
    out.blocks.k = arr.k;
    if (static_cast<int>(certified.size()) >= threshold) {
        out.branch = 1;
        for (int i : certified) out.blocks.blocks.push_back(arr.blocks[static_cast<std::size_t>(i)]);
        out.sourceIndex = std::move(certified);
        return out;
    }
    const int lastCert = certified.empty() ? -1 : certified.back();
    require(lastCert + 1 < static_cast<int>(arr.blocks.size()),
            "union_hyp_transform: no uncertified suffix and the threshold is out of reach");
    out.branch = 0;
    for (int i = lastCert + 1; i < static_cast<int>(arr.blocks.size()); ++i) {
        out.blocks.blocks.push_back(arr.blocks[static_cast<std::size_t>(i)]);
        out.sourceIndex.push_back(i);
    }
    return out;
}

std::vector<std::int64_t> build_B(const std::vector<CoCeApprox>& family, int horizon) {
    require(!family.empty(), "build_B: family must be nonempty");
    for (const auto& c : family) {
        c.validate();
        require(horizon >= 0 && horizon < static_cast<int>(c.stages.size()),
                "build_B: horizon exceeds an approximation");
    }
    std::set<std::int64_t> B;
    for (std::int64_t x : family[0].snapshot(horizon)) {
        const std::int64_t jTop = std::min<std::int64_t>(x, static_cast<std::int64_t>(family.size()) - 1);
        for (std::int64_t j = 0; j <= jTop; ++j)
            for (std::int64_t y : family[static_cast<std::size_t>(j)].snapshot(horizon))
                B.insert(Pairing::encode(x, y));
    }
    return {B.begin(), B.end()};
}

ArrayOfSets lift_array_to_B(const ArrayOfSets& arr, int x, const std::vector<std::int64_t>& A0) {
    arr.validate();
    require(std::find(A0.begin(), A0.end(), static_cast<std::int64_t>(x)) != A0.end(),
            "lift_array_to_B: x must lie in the first component");
    require(x >= static_cast<int>(arr.blocks.size()),
            "lift_array_to_B: x must not precede the array length");
    ArrayOfSets out;
    out.kind = arr.kind;
    out.k = arr.k;
    for (const auto& b : arr.blocks) {
        std::vector<std::int64_t> lifted;
        for (std::int64_t y : b) lifted.push_back(Pairing::encode(x, y));
        // encode grows with y, so the lifted block stays sorted
        out.blocks.push_back(std::move(lifted));
    }
    return out;
}

GExtraction extract_G_sequence(const ArrayOfSets& blocks, const CoCeApprox& approx,
                               const std::vector<std::int64_t>& A0, int horizon) {
    blocks.validate();
    approx.validate();
    require(!A0.empty(), "extract_G_sequence: first component must be nonempty");
    require(horizon >= 0, "extract_G_sequence: horizon must be nonnegative");

    const int nBlocks = static_cast<int>(blocks.blocks.size());
    const int T = std::min(horizon, static_cast<int>(approx.stages.size()) - 1);
    const auto snap = as_set(approx.snapshot(T));

    GExtraction out;
    out.horizonUsed = T;
    out.G.push_back({*std::min_element(A0.begin(), A0.end())});

    for (int i = 0;; ++i) {
        const std::int64_t cut = out.G.back().back();
        bool anyEvaluable = false;
        int found = -1;
        for (int s = i + 1; s < nBlocks; ++s) {
            if (s >= T) break; // deadness is only certified past the block index
            anyEvaluable = true;
            bool lowDead = true, anyHigh = false;
            for (std::int64_t z : blocks.blocks[static_cast<std::size_t>(s)]) {
                if (Pairing::column_of(z) <= cut)
                    lowDead = lowDead && !snap.count(z);
                else
                    anyHigh = true;
            }
            if (lowDead && anyHigh) {
                found = s;
                break;
            }
        }
        if (found >= 0) {
            std::set<std::int64_t> g;
            for (std::int64_t z : blocks.blocks[static_cast<std::size_t>(found)])
                if (Pairing::column_of(z) > cut) g.insert(Pairing::column_of(z));
            out.G.emplace_back(g.begin(), g.end());
            out.picked.push_back(found);
            continue;
        }
        if (i + 1 >= nBlocks) {
            out.branch = "G";
            return out;
        }
        if (anyEvaluable) {
            out.branch = "H";
            out.cut = static_cast<int>(cut);
            for (int s = i + 1; s < nBlocks; ++s) {
                std::vector<std::int64_t> low;
                for (std::int64_t z : blocks.blocks[static_cast<std::size_t>(s)])
                    if (Pairing::column_of(z) <= cut) low.push_back(z);
                if (!low.empty()) out.H.blocks.push_back(std::move(low));
            }
            return out;
        }
        throw std::invalid_argument(
            "extract_G_sequence: horizon insufficient to evaluate any candidate block");
    }
}

EssentialReport essential_check(const OpponentScript& script, int xBound, int yBound) {
    require(script.kind == ScriptKind::PairFormula, "essential_check: script must be pair-formula");
    script.validate();
    // group events by identical R payload: the group survives on min R, and
    // its best S-value is the largest min S it ever witnesses
    std::map<std::vector<int>, std::pair<int, int>> groups;
    for (const auto& ev : script.events) {
        auto [it, fresh] = groups.try_emplace(ev.R, ev.R.front(), ev.S.front());
        if (!fresh) it->second.second = std::max(it->second.second, ev.S.front());
    }
    EssentialReport rep;
    for (int x = 0; x < xBound; ++x) {
        bool okx = false;
        for (const auto& [R, g] : groups)
            if (g.first > x && g.second >= yBound) {
                okx = true;
                break;
            }
        if (!okx) {
            rep.ok = false;
            rep.failX = x;
            rep.detail = "no witnessed group above x=" + std::to_string(x) + " reaches the S bound";
            return rep;
        }
    }
    return rep;
}

EssentialReport set_essential_check(const OpponentScript& script, int xBound) {
    require(script.kind == ScriptKind::SetFormula, "set_essential_check: script must be set-formula");
    script.validate();
    EssentialReport rep;
    for (int x = 0; x < xBound; ++x) {
        bool okx = false;
        for (const auto& ev : script.events)
            if (ev.R.front() > x) {
                okx = true;
                break;
            }
        if (!okx) {
            rep.ok = false;
            rep.failX = x;
            rep.detail = "no witnessed set above x=" + std::to_string(x);
            return rep;
        }
    }
    return rep;
}

EssentialReport combined_essential_check(const OpponentScript& script, int xBound) {
    require(script.kind == ScriptKind::ElementFormula,
            "combined_essential_check: script must be element-formula");
    script.validate();
    EssentialReport rep;
    for (int x = 0; x < xBound; ++x) {
        bool okx = false;
        for (const auto& ev : script.events)
            if (std::min(ev.u, ev.v) > x) {
                okx = true;
                break;
            }
        if (!okx) {
            rep.ok = false;
            rep.failX = x;
            rep.detail = "no witnessed pair above x=" + std::to_string(x);
            return rep;
        }
    }
    return rep;
}

std::optional<ScriptEvent> dependent_witness_search(const OpponentScript& script,
                                                    const std::vector<std::int64_t>& comp0,
                                                    const std::vector<std::int64_t>& comp1) {
    require(script.kind == ScriptKind::PairFormula,
            "dependent_witness_search: script must be pair-formula");
    script.validate();
    const auto c0 = as_set(comp0);
    const auto c1 = as_set(comp1);
    for (const auto& ev : script.events) {
        bool ok = true;
        for (int r : ev.R) ok = ok && c0.count(r);
        for (int s : ev.S) ok = ok && c1.count(s);
        if (ok) return ev;
    }
    return std::nullopt;
}

DependentArray coce_dependent_array(const OpponentScript& script, const CoCeApprox& a0) {
    require(script.kind == ScriptKind::PairFormula,
            "coce_dependent_array: script must be pair-formula");
    script.validate();
    a0.validate();
    const auto fin = as_set(a0.final_stage());
    DependentArray out;
    std::int64_t lastMax = -1;
    for (std::size_t idx = 0; idx < script.events.size(); ++idx) {
        const auto& ev = script.events[idx];
        bool rOut = true;
        for (int r : ev.R) rOut = rOut && !fin.count(r);
        if (!rOut || ev.S.front() <= lastMax) continue;
        out.blocks.blocks.emplace_back(ev.S.begin(), ev.S.end());
        out.companions.push_back(ev.R);
        out.eventIndex.push_back(static_cast<int>(idx));
        lastMax = ev.S.back();
    }
    return out;
}

StringBlockEnum normalize_class_enum(const StringBlockEnum& e, std::optional<int> count) {
    e.validate();
    if (count) require(*count >= 0, "normalize_class_enum: count must be nonnegative");
    StringBlockEnum out;
    std::size_t cursor = 0;
    for (int i = 0; !count || i < *count; ++i) {
        std::size_t j = cursor;
        for (; j < e.blocks.size(); ++j) {
            bool allLong = true;
            for (const auto& s : e.blocks[j])
                allLong = allLong && static_cast<int>(s.size()) >= i;
            if (allLong) break;
        }
        if (j == e.blocks.size()) {
            if (count)
                throw std::invalid_argument(
                    "normalize_class_enum: enumeration exhausted before the requested count");
            break;
        }
        std::set<std::string> trunc;
        for (const auto& s : e.blocks[j]) trunc.insert(s.substr(0, static_cast<std::size_t>(i)));
        out.blocks.emplace_back(trunc.begin(), trunc.end());
        cursor = j + 1;
    }
    return out;
}

MinPReport minP_extract(const ArrayOfSets& arr, const PartialOrderPrefix& p, int tailWindow) {
    arr.validate();
    const auto cls = classify_elements(p, tailWindow);
    MinPReport rep;
    for (const auto& b : arr.blocks) {
        bool small = false;
        for (std::int64_t z : b) {
            require(z >= 0 && z < p.size(), "minP_extract: block element out of range");
            require(cls.kind[static_cast<std::size_t>(z)] != ElementKind::Unstable,
                    "minP_extract: unstable element in a block");
            small = small || cls.kind[static_cast<std::size_t>(z)] == ElementKind::Small;
        }
        std::vector<std::int64_t> mins;
        for (std::int64_t z : b) {
            bool minimal = true;
            for (std::int64_t w : b)
                if (w != z && p.leq(static_cast<int>(w), static_cast<int>(z))) minimal = false;
            if (minimal) mins.push_back(z);
        }
        rep.minima.push_back(std::move(mins));
        rep.hasSmall.push_back(small ? 1 : 0);
    }
    return rep;
}

} // namespace orderlab::immunity
