#include "orderlab/priority.hpp"

#include "orderlab/immunity.hpp"
#include "orderlab/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orderlab::priority {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::int64_t> members_of(const std::vector<std::uint8_t>& tag, std::uint8_t want) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < tag.size(); ++i)
        if (tag[i] == want) out.push_back(static_cast<std::int64_t>(i));
    return out;
}

bool subset_of(const std::vector<int>& xs, const std::vector<std::int64_t>& sortedSet) {
    for (int x : xs)
        if (!std::binary_search(sortedSet.begin(), sortedSet.end(), static_cast<std::int64_t>(x)))
            return false;
    return true;
}

int last_action_stage(const ConstructionTranscript& t, int slot) {
    int last = -1;
    for (const auto& rec : t.stages)
        if (rec.acted == slot) last = rec.stage;
    return last;
}

/// First event witnessed by stage `stage` whose payload fits the strategy's
/// window. Set and element payloads live in [m, s]; pair payloads in (m, s].
const ScriptEvent* formula_witness(const OpponentScript& sc, int m, int s, int stage) {
    for (const auto& ev : sc.events) {
        if (ev.stage > stage) break; // events sorted by stage
        switch (sc.kind) {
        case ScriptKind::SetFormula:
            if (ev.R.front() >= m && ev.R.back() <= s) return &ev;
            break;
        case ScriptKind::PairFormula:
            if (ev.R.front() > m && ev.S.back() <= s) return &ev;
            break;
        case ScriptKind::ElementFormula:
            if (std::min(ev.u, ev.v) >= m && std::max(ev.u, ev.v) <= s) return &ev;
            break;
        case ScriptKind::Functional:
            break;
        }
    }
    return nullptr;
}

} // namespace

void ConstructionTranscript::check_partitions() const {
    for (const auto& rec : stages) {
        const std::string where = "stage " + std::to_string(rec.stage);
        if (rec.sets.size() != setNames.size())
            throw std::logic_error(where + ": snapshot count does not match set names");
        if (setNames.size() >= 2) {
            std::vector<std::int64_t> all;
            for (const auto& s : rec.sets) all.insert(all.end(), s.begin(), s.end());
            std::sort(all.begin(), all.end());
            bool ok = static_cast<int>(all.size()) == rec.stage;
            for (std::size_t i = 0; ok && i < all.size(); ++i)
                ok = all[i] == static_cast<std::int64_t>(i);
            if (!ok)
                throw std::logic_error(where + ": snapshots do not partition the born prefix");
        } else {
            for (const auto& s : rec.sets) {
                bool sorted = std::is_sorted(s.begin(), s.end()) &&
                              std::adjacent_find(s.begin(), s.end()) == s.end();
                if (!sorted || (!s.empty() && s.front() < 0))
                    throw std::logic_error(where + ": snapshot not sorted, unique, nonnegative");
            }
        }
    }
}

ConstructionTranscript run_injury(const std::vector<OpponentScript>& opponents, int maxStage) {
    require(maxStage >= 0, "run_injury: maxStage must be nonnegative");
    for (const auto& sc : opponents) {
        require(sc.kind != ScriptKind::Functional,
                "run_injury: functional scripts have no generic injury semantics");
        sc.validate();
    }
    const int n = static_cast<int>(opponents.size());
    std::vector<int> marker(n, 0);
    std::vector<std::uint8_t> sat(n, 0);

    ConstructionTranscript t;
    t.kind = "finite-injury";
    t.pairing = Pairing::name;
    t.maxStage = maxStage;
    for (int i = 0; i < n; ++i) {
        const char* p = opponents[i].kind == ScriptKind::SetFormula     ? "S"
                        : opponents[i].kind == ScriptKind::PairFormula ? "P"
                                                                       : "E";
        t.strategyNames.push_back(p + std::to_string(i));
    }

    for (int stage = 1; stage <= maxStage; ++stage) {
        const int s = stage - 1;
        StageRecord rec;
        rec.stage = stage;
        int actor = -1;
        const ScriptEvent* witness = nullptr;
        for (int i = 0; i < n; ++i) {
            if (sat[i]) continue;
            const ScriptEvent* w = formula_witness(opponents[i], marker[i], s, stage);
            if (!w) continue;
            rec.attention.push_back(i);
            if (actor < 0) {
                actor = i;
                witness = w;
            }
        }
        if (actor >= 0) {
            rec.acted = actor;
            rec.witness = *witness;
            sat[actor] = 1;
            for (int j = actor + 1; j < n; ++j) {
                marker[j] = stage;
                sat[j] = 0;
            }
        }
        rec.markers = marker;
        rec.satisfied = sat;
        t.stages.push_back(std::move(rec));
    }
    return t;
}

StableColoringResult build_stable_semitransitive(const std::vector<OpponentScript>& opponents,
                                                 int maxStage) {
    require(maxStage >= 0, "build_stable_semitransitive: maxStage must be nonnegative");
    for (const auto& sc : opponents) {
        require(sc.kind == ScriptKind::PairFormula,
                "build_stable_semitransitive: opponents must be pair-formula scripts");
        sc.validate();
    }
    const int n = static_cast<int>(opponents.size());
    std::vector<int> marker(n, 0);
    std::vector<std::uint8_t> sat(n, 0);
    std::vector<int> acts(n, 0);
    std::vector<std::optional<ScriptEvent>> lastW(n);

    std::vector<std::uint8_t> side; // current side of each born element
    std::vector<int> lastChange;
    const std::int64_t pairCount =
        static_cast<std::int64_t>(maxStage) * (maxStage - 1) / 2;
    std::vector<int> colors(static_cast<std::size_t>(std::max<std::int64_t>(pairCount, 0)), 0);

    StableColoringResult out;
    out.transcript.kind = "stable-semitransitive";
    out.transcript.pairing = Pairing::name;
    out.transcript.maxStage = maxStage;
    out.transcript.setNames = {"A0", "A1"};
    for (int i = 0; i < n; ++i) out.transcript.strategyNames.push_back("P" + std::to_string(i));

    auto set_side = [&](int x, std::uint8_t v, int stage) {
        if (side[static_cast<std::size_t>(x)] != v) {
            side[static_cast<std::size_t>(x)] = v;
            lastChange[static_cast<std::size_t>(x)] = stage;
        }
    };

    for (int stage = 1; stage <= maxStage; ++stage) {
        const int s = stage - 1;
        // birth of s: its column records the sides as they stand right now
        const std::int64_t base = static_cast<std::int64_t>(s) * (s - 1) / 2;
        for (int x = 0; x < s; ++x)
            colors[static_cast<std::size_t>(base + x)] = side[static_cast<std::size_t>(x)];
        side.push_back(0);
        lastChange.push_back(stage);

        StageRecord rec;
        rec.stage = stage;
        int actor = -1;
        const ScriptEvent* witness = nullptr;
        for (int i = 0; i < n; ++i) {
            if (sat[i]) continue;
            const ScriptEvent* w = formula_witness(opponents[i], marker[i], s, stage);
            if (!w) continue;
            rec.attention.push_back(i);
            if (actor < 0) {
                actor = i;
                witness = w;
            }
        }
        if (actor >= 0) {
            const int minS = witness->S.front();
            for (int x = marker[actor] + 1; x < minS; ++x) set_side(x, 1, stage);
            for (int x = minS; x <= s; ++x) set_side(x, 0, stage);
            rec.acted = actor;
            rec.witness = *witness;
            sat[actor] = 1;
            ++acts[actor];
            lastW[actor] = *witness;
            for (int j = actor + 1; j < n; ++j) {
                marker[j] = stage;
                sat[j] = 0;
            }
        }
        rec.markers = marker;
        rec.satisfied = sat;
        rec.sets = {members_of(side, 0), members_of(side, 1)};
        out.transcript.stages.push_back(std::move(rec));
    }

    out.coloring = ColoringPrefix(maxStage, 2, 2, std::move(colors));
    out.finalSets = {members_of(side, 0), members_of(side, 1)};
    out.strategies.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.strategies[static_cast<std::size_t>(i)] = {marker[i], sat[i] != 0, acts[i]};
    }
    out.lastWitness = std::move(lastW);
    out.stabilizedAt = std::move(lastChange);
    return out;
}

int OrderOpponents::groups() const {
    return static_cast<int>(std::max({small.size(), isolated.size(), split.size()}));
}

void OrderOpponents::validate() const {
    for (const auto& sc : small) {
        if (sc.kind != ScriptKind::SetFormula)
            throw std::invalid_argument("small-scheme opponents must be set-formula scripts");
        sc.validate();
    }
    for (const auto& sc : isolated) {
        if (sc.kind != ScriptKind::SetFormula)
            throw std::invalid_argument("isolated-scheme opponents must be set-formula scripts");
        sc.validate();
    }
    for (const auto& sc : split) {
        if (sc.kind != ScriptKind::ElementFormula)
            throw std::invalid_argument("split-scheme opponents must be element-formula scripts");
        sc.validate();
    }
}

WeaklyStableOrderResult build_weakly_stable_order(const OrderOpponents& opponents, int maxStage) {
    require(maxStage >= 0, "build_weakly_stable_order: maxStage must be nonnegative");
    opponents.validate();
    const int G = opponents.groups();

    // interleaved priority: small_e, isolated_e, split_e per group e
    std::vector<const OpponentScript*> script;
    std::vector<int> schemeOf, groupOf;
    std::vector<std::string> names;
    for (int e = 0; e < G; ++e) {
        if (e < static_cast<int>(opponents.small.size())) {
            script.push_back(&opponents.small[static_cast<std::size_t>(e)]);
            schemeOf.push_back(0);
            groupOf.push_back(e);
            names.push_back("small" + std::to_string(e));
        }
        if (e < static_cast<int>(opponents.isolated.size())) {
            script.push_back(&opponents.isolated[static_cast<std::size_t>(e)]);
            schemeOf.push_back(1);
            groupOf.push_back(e);
            names.push_back("isolated" + std::to_string(e));
        }
        if (e < static_cast<int>(opponents.split.size())) {
            script.push_back(&opponents.split[static_cast<std::size_t>(e)]);
            schemeOf.push_back(2);
            groupOf.push_back(e);
            names.push_back("split" + std::to_string(e));
        }
    }
    const int n = static_cast<int>(script.size());

    std::vector<int> gm(static_cast<std::size_t>(G), 0); // one marker per group
    std::vector<std::uint8_t> sat(static_cast<std::size_t>(n), 0);
    std::vector<int> acts(static_cast<std::size_t>(n), 0);
    std::vector<std::optional<ScriptEvent>> lastW(static_cast<std::size_t>(n));

    RelationMatrix leq(static_cast<std::size_t>(maxStage),
                       std::vector<std::uint8_t>(static_cast<std::size_t>(maxStage), 0));
    std::vector<std::uint8_t> cls; // 0 small, 1 large, 2 isolated
    std::vector<int> lastChange;

    WeaklyStableOrderResult out;
    out.transcript.kind = "weakly-stable-order";
    out.transcript.pairing = Pairing::name;
    out.transcript.maxStage = maxStage;
    out.transcript.setNames = {"S", "L", "I"};
    out.transcript.strategyNames = names;

    auto set_cls = [&](int x, std::uint8_t v, int stage) {
        if (cls[static_cast<std::size_t>(x)] != v) {
            cls[static_cast<std::size_t>(x)] = v;
            lastChange[static_cast<std::size_t>(x)] = stage;
        }
    };

    for (int stage = 1; stage <= maxStage; ++stage) {
        const int s = stage - 1;
        // birth of s: permanent relations read off the current classes
        leq[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1;
        for (int x = 0; x < s; ++x) {
            if (cls[static_cast<std::size_t>(x)] == 0)
                leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] = 1;
            else if (cls[static_cast<std::size_t>(x)] == 1)
                leq[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] = 1;
        }
        cls.push_back(2);
        lastChange.push_back(stage);

        StageRecord rec;
        rec.stage = stage;
        int actor = -1;
        const ScriptEvent* witness = nullptr;
        for (int p = 0; p < n; ++p) {
            if (sat[static_cast<std::size_t>(p)]) continue;
            const int lo = gm[static_cast<std::size_t>(groupOf[static_cast<std::size_t>(p)])];
            const ScriptEvent* w = formula_witness(*script[static_cast<std::size_t>(p)], lo, s, stage);
            if (!w) continue;
            rec.attention.push_back(p);
            if (actor < 0) {
                actor = p;
                witness = w;
            }
        }
        if (actor >= 0) {
            const int e = groupOf[static_cast<std::size_t>(actor)];
            const int lo = gm[static_cast<std::size_t>(e)];
            switch (schemeOf[static_cast<std::size_t>(actor)]) {
            case 0:
                for (int x = lo; x <= s; ++x) set_cls(x, 0, stage);
                break;
            case 1:
                for (int x = lo; x <= s; ++x) set_cls(x, 2, stage);
                break;
            default: {
                const int u = witness->u, v = witness->v;
                if (leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    // route the up-set of v above everything later, isolate the rest
                    for (int x = lo; x <= s; ++x)
                        set_cls(x, leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] ? 1 : 2,
                                stage);
                } else {
                    // route the down-set of v below everything later, isolate the rest
                    for (int x = lo; x <= s; ++x)
                        set_cls(x, leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] ? 0 : 2,
                                stage);
                }
                break;
            }
            }
            rec.acted = actor;
            rec.witness = *witness;
            sat[static_cast<std::size_t>(actor)] = 1;
            ++acts[static_cast<std::size_t>(actor)];
            lastW[static_cast<std::size_t>(actor)] = *witness;
            for (int q = actor + 1; q < n; ++q) sat[static_cast<std::size_t>(q)] = 0;
            for (int i = e; i < G; ++i) gm[static_cast<std::size_t>(i)] = stage;
        }
        rec.markers = gm;
        rec.satisfied = sat;
        rec.sets = {members_of(cls, 0), members_of(cls, 1), members_of(cls, 2)};
        out.transcript.stages.push_back(std::move(rec));
    }

    out.order = PartialOrderPrefix::from_construction(std::move(leq));
    out.finalSets = {members_of(cls, 0), members_of(cls, 1), members_of(cls, 2)};
    out.strategies.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        const int e = groupOf[static_cast<std::size_t>(p)];
        out.strategies[static_cast<std::size_t>(p)] = {gm[static_cast<std::size_t>(e)],
                                                       sat[static_cast<std::size_t>(p)] != 0,
                                                       acts[static_cast<std::size_t>(p)]};
    }
    out.lastWitness = std::move(lastW);
    out.stabilizedAt = std::move(lastChange);
    out.schemeOf = std::move(schemeOf);
    out.groupOf = std::move(groupOf);
    return out;
}

std::int64_t column_floor(std::int64_t code) {
    const auto [x, y] = Pairing::decode(code);
    const std::int64_t t = static_cast<std::int64_t>(x) + y;
    return t * (t - 1) * (t + 1) / 6 + static_cast<std::int64_t>(y) * (y + 1) / 2;
}

CeSetResult build_ce_set(const std::vector<OpponentScript>& functionals, int maxStage) {
    require(maxStage >= 0, "build_ce_set: maxStage must be nonnegative");
    const int n = static_cast<int>(functionals.size());
    std::vector<std::int64_t> code(static_cast<std::size_t>(n)),
        floorCol(static_cast<std::size_t>(n));
    std::set<std::int64_t> seen;
    for (int i = 0; i < n; ++i) {
        const auto& sc = functionals[static_cast<std::size_t>(i)];
        require(sc.kind == ScriptKind::Functional,
                "build_ce_set: opponents must be functional scripts");
        sc.validate();
        require(sc.e <= 1000000 && sc.k <= 1000000, "build_ce_set: functional tag out of range");
        code[static_cast<std::size_t>(i)] = Pairing::encode(sc.e, sc.k);
        if (!seen.insert(code[static_cast<std::size_t>(i)]).second)
            throw std::invalid_argument("build_ce_set: duplicate functional tag");
        floorCol[static_cast<std::size_t>(i)] = column_floor(code[static_cast<std::size_t>(i)]);
        for (const auto& ev : sc.events)
            for (std::int64_t z : ev.value)
                require(Pairing::column_of(z) < maxStage,
                        "build_ce_set: value code lies in a column at or past the stage horizon");
    }

    std::vector<std::uint8_t> sat(static_cast<std::size_t>(n), 0);
    std::vector<std::optional<ScriptEvent>> lastW(static_cast<std::size_t>(n));
    std::map<std::int64_t, int> enumerated; // code -> stage it entered W

    CeSetResult out;
    out.transcript.kind = "ce-set";
    out.transcript.pairing = Pairing::name;
    out.transcript.maxStage = maxStage;
    out.transcript.setNames = {"W"};
    for (int i = 0; i < n; ++i) {
        const auto& sc = functionals[static_cast<std::size_t>(i)];
        out.transcript.strategyNames.push_back("F(" + std::to_string(sc.e) + "," +
                                               std::to_string(sc.k) + ")");
    }

    for (int stage = 1; stage <= maxStage; ++stage) {
        StageRecord rec;
        rec.stage = stage;
        int actor = -1;
        const ScriptEvent* witness = nullptr;
        for (int i = 0; i < n; ++i) {
            if (sat[static_cast<std::size_t>(i)]) continue;
            if (code[static_cast<std::size_t>(i)] >= stage) continue;
            const ScriptEvent* best = nullptr;
            for (const auto& ev : functionals[static_cast<std::size_t>(i)].events) {
                if (ev.stage > stage) break;
                if (ev.x >= stage) continue;
                if (static_cast<int>(ev.value.size()) > functionals[static_cast<std::size_t>(i)].k)
                    continue;
                bool cols = true;
                for (std::int64_t z : ev.value)
                    cols = cols && Pairing::column_of(z) >= floorCol[static_cast<std::size_t>(i)];
                if (!cols) continue;
                if (!best || ev.x < best->x) best = &ev;
            }
            if (!best) continue;
            rec.attention.push_back(i);
            if (actor < 0 || code[static_cast<std::size_t>(i)] < code[static_cast<std::size_t>(actor)]) {
                actor = i;
                witness = best;
            }
        }
        if (actor >= 0) {
            rec.acted = actor;
            rec.witness = *witness;
            sat[static_cast<std::size_t>(actor)] = 1;
            lastW[static_cast<std::size_t>(actor)] = *witness;
            for (std::int64_t z : witness->value) enumerated.emplace(z, stage);
        }
        rec.satisfied = sat;
        std::vector<std::int64_t> w;
        for (const auto& [z, at] : enumerated) w.push_back(z);
        rec.sets = {std::move(w)};
        out.transcript.stages.push_back(std::move(rec));
    }

    for (const auto& [z, at] : enumerated) {
        out.W.push_back(z);
        out.enumeratedAt.push_back(at);
    }
    out.strategies.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.strategies[static_cast<std::size_t>(i)] = {0, sat[static_cast<std::size_t>(i)] != 0,
                                                       sat[static_cast<std::size_t>(i)] ? 1 : 0};
    out.lastWitness = std::move(lastW);
    out.codes = std::move(code);
    out.columnFloor = std::move(floorCol);
    return out;
}

void ModulusStandIn::validate() const {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0)
            throw std::invalid_argument("modulus values must be nonnegative");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("modulus must be non-decreasing");
    }
}

DiagonalPrefix compute_A_from_W(const std::vector<std::int64_t>& W, const ModulusStandIn& modulus,
                                int horizon) {
    modulus.validate();
    require(horizon >= 0, "compute_A_from_W: horizon must be nonnegative");
    require(horizon <= modulus.domain(), "compute_A_from_W: horizon exceeds the modulus domain");

    DiagonalPrefix out;
    out.maxCode = static_cast<std::int64_t>(horizon) * (horizon + 1) / 2;
    const std::set<std::int64_t> w(W.begin(), W.end());
    std::set<std::int64_t> members;
    for (int i = 0; i < horizon; ++i) {
        for (int m = 0; m < modulus(i); ++m) {
            const std::int64_t z = Pairing::encode(i, m);
            if (z >= out.maxCode) break; // encode grows with the second argument
            if (!w.count(z)) members.insert(z);
        }
    }
    out.members.assign(members.begin(), members.end());
    return out;
}

std::vector<RequirementReport> verify_requirements(const StableColoringResult& run,
                                                   const std::vector<OpponentScript>& opponents,
                                                   int xBound, int yBound) {
    require(run.strategies.size() == opponents.size(),
            "verify_requirements: opponent count does not match the run");
    const auto& A0 = run.finalSets.at(0);
    const auto& A1 = run.finalSets.at(1);
    std::vector<RequirementReport> out;
    for (std::size_t i = 0; i < opponents.size(); ++i) {
        RequirementReport r;
        r.index = static_cast<int>(i);
        r.scheme = "pair";
        const auto ess = immunity::essential_check(opponents[i], xBound, yBound);
        r.applicable = ess.ok;
        r.stage = last_action_stage(run.transcript, static_cast<int>(i));
        if (!run.strategies[i].satisfied || !run.lastWitness[i]) {
            r.detail = run.lastWitness[i] ? "final flag cleared by injury" : "never acted";
        } else {
            const auto& w = *run.lastWitness[i];
            const bool rIn = subset_of(w.R, A1);
            const bool sIn = subset_of(w.S, A0);
            r.satisfied = rIn && sIn;
            if (!rIn)
                r.detail = "witness R escapes the side-1 limit";
            else if (!sIn)
                r.detail = "witness S escapes the side-0 limit";
        }
        if (!ess.ok && r.detail.empty()) r.detail = ess.detail;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RequirementReport> verify_requirements(const WeaklyStableOrderResult& run,
                                                   const OrderOpponents& opponents, int xBound) {
    // rebuild the interleaved slot list to pair scripts with strategies
    const int G = opponents.groups();
    std::vector<const OpponentScript*> script;
    for (int e = 0; e < G; ++e) {
        if (e < static_cast<int>(opponents.small.size()))
            script.push_back(&opponents.small[static_cast<std::size_t>(e)]);
        if (e < static_cast<int>(opponents.isolated.size()))
            script.push_back(&opponents.isolated[static_cast<std::size_t>(e)]);
        if (e < static_cast<int>(opponents.split.size()))
            script.push_back(&opponents.split[static_cast<std::size_t>(e)]);
    }
    require(script.size() == run.strategies.size(),
            "verify_requirements: opponent bundle does not match the run");
    const auto& S = run.finalSets.at(0);
    const auto& L = run.finalSets.at(1);
    const auto& I = run.finalSets.at(2);
    static const char* schemes[] = {"small", "isolated", "split"};
    std::vector<RequirementReport> out;
    for (std::size_t p = 0; p < script.size(); ++p) {
        RequirementReport r;
        r.index = static_cast<int>(p);
        const int scheme = run.schemeOf.at(p);
        r.scheme = schemes[scheme];
        const auto ess = scheme == 2 ? immunity::combined_essential_check(*script[p], xBound)
                                     : immunity::set_essential_check(*script[p], xBound);
        r.applicable = ess.ok;
        r.stage = last_action_stage(run.transcript, static_cast<int>(p));
        if (!run.strategies[p].satisfied || !run.lastWitness[p]) {
            r.detail = run.lastWitness[p] ? "final flag cleared by injury" : "never acted";
        } else {
            const auto& w = *run.lastWitness[p];
            switch (scheme) {
            case 0:
                r.satisfied = subset_of(w.R, S);
                if (!r.satisfied) r.detail = "witness escapes the small class";
                break;
            case 1:
                r.satisfied = subset_of(w.R, I);
                if (!r.satisfied) r.detail = "witness escapes the isolated class";
                break;
            default: {
                const bool uIso = std::binary_search(I.begin(), I.end(),
                                                     static_cast<std::int64_t>(w.u));
                const bool vDec = std::binary_search(S.begin(), S.end(),
                                                     static_cast<std::int64_t>(w.v)) ||
                                  std::binary_search(L.begin(), L.end(),
                                                     static_cast<std::int64_t>(w.v));
                r.satisfied = uIso && vDec;
                if (!uIso)
                    r.detail = "witness u not isolated in the limit";
                else if (!vDec)
                    r.detail = "witness v neither small nor large in the limit";
                break;
            }
            }
        }
        if (!ess.ok && r.detail.empty()) r.detail = ess.detail;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RequirementReport> verify_requirements(const CeSetResult& run,
                                                   const std::vector<OpponentScript>& functionals) {
    require(run.strategies.size() == functionals.size(),
            "verify_requirements: opponent count does not match the run");
    std::vector<RequirementReport> out;
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        const auto& sc = functionals[i];
        RequirementReport r;
        r.index = static_cast<int>(i);
        r.scheme = "functional";
        bool reachable = false;
        for (const auto& ev : sc.events) {
            if (static_cast<int>(ev.value.size()) > sc.k) continue;
            bool cols = true;
            for (std::int64_t z : ev.value)
                cols = cols && Pairing::column_of(z) >= run.columnFloor[i];
            if (!cols) continue;
            const std::int64_t earliest =
                std::max({run.codes[i] + 1, static_cast<std::int64_t>(ev.stage),
                          static_cast<std::int64_t>(ev.x) + 1});
            if (earliest <= run.transcript.maxStage) {
                reachable = true;
                break;
            }
        }
        r.applicable = reachable;
        r.stage = last_action_stage(run.transcript, static_cast<int>(i));
        if (!run.strategies[i].satisfied || !run.lastWitness[i]) {
            r.detail = "never acted";
        } else {
            bool inW = true;
            for (std::int64_t z : run.lastWitness[i]->value)
                inW = inW && std::binary_search(run.W.begin(), run.W.end(), z);
            r.satisfied = inW;
            if (!inW) r.detail = "acted value not enumerated";
        }
        if (!reachable && r.detail.empty()) r.detail = "no qualifying witness within the horizon";
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace orderlab::priority
