#include "orderlab/instances.hpp"

#include "orderlab/pairing.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace orderlab::instances {

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::below: empty range");
    return static_cast<int>(gen_() % static_cast<std::uint64_t>(n));
}

int Rng::between(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
    return lo + below(hi - lo + 1);
}

bool Rng::chance(int num, int den) {
    return below(den) < num;
}

ColoringPrefix random_coloring(std::uint64_t seed, int size, int colors) {
    Rng rng(seed);
    const std::int64_t pairs = static_cast<std::int64_t>(size) * (size - 1) / 2;
    std::vector<int> upper(static_cast<std::size_t>(pairs));
    for (auto& v : upper) v = rng.below(colors);
    return ColoringPrefix(size, 2, colors, std::move(upper));
}

namespace {

PartialOrderPrefix order_from_bottom_flags(const std::vector<std::uint8_t>& bottom) {
    const int n = static_cast<int>(bottom.size());
    RelationMatrix leq(static_cast<std::size_t>(n),
                       std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x) {
        leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 1;
        if (bottom[static_cast<std::size_t>(x)])
            for (int y = x + 1; y < n; ++y)
                leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    }
    return PartialOrderPrefix::from_relation(std::move(leq));
}

} // namespace

PartialOrderPrefix random_order(std::uint64_t seed, int size) {
    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = size - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    RelationMatrix leq(static_cast<std::size_t>(size),
                       std::vector<std::uint8_t>(static_cast<std::size_t>(size), 0));
    for (int x = 0; x < size; ++x) {
        leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 1;
        for (int y = x + 1; y < size; ++y)
            if (perm[static_cast<std::size_t>(x)] < perm[static_cast<std::size_t>(y)])
                leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    }
    return PartialOrderPrefix::from_relation(std::move(leq));
}

PartialOrderPrefix layered_order(std::uint64_t seed, int size, int smallPercent) {
    Rng rng(seed);
    std::vector<std::uint8_t> bottom(static_cast<std::size_t>(size));
    for (auto& b : bottom) b = rng.chance(smallPercent, 100) ? 1 : 0;
    return order_from_bottom_flags(bottom);
}

ColoringPrefix random_semitransitive(std::uint64_t seed, int size) {
    const PartialOrderPrefix p = random_order(seed, size);
    const std::int64_t pairs = static_cast<std::int64_t>(size) * (size - 1) / 2;
    std::vector<int> upper(static_cast<std::size_t>(pairs));
    std::size_t at = 0;
    // colex layout: pair (x,y), x < y, sits at y(y-1)/2 + x
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < y; ++x) upper[at++] = p.leq(x, y) ? 1 : 0;
    return ColoringPrefix(size, 2, 2, std::move(upper));
}

StableSuite stable_opponent_suite(int count, int maxStage, int spacing) {
    if (count < 1 || count >= spacing)
        throw std::invalid_argument("stable_opponent_suite: count must fit inside the spacing");
    if (maxStage < 4 * spacing + 60)
        throw std::invalid_argument("stable_opponent_suite: maxStage too small for the band layout");
    const int groups = (maxStage - 60) / spacing + 1;
    const int high = maxStage - 5;

    StableSuite suite;
    suite.xBound = spacing * (groups - 1) + 1;
    suite.yBound = high;
    for (int j = 0; j < count; ++j) {
        OpponentScript sc;
        sc.kind = ScriptKind::PairFormula;
        sc.budget = maxStage;
        for (int r = 0; r < groups; ++r) {
            const int base = spacing * r + j + 1;
            ScriptEvent early;
            early.R = {base};
            early.S = {base + 1};
            early.stage = base + 2;
            sc.events.push_back(std::move(early));
        }
        for (int r = 0; r < groups; ++r) {
            ScriptEvent late;
            late.R = {spacing * r + j + 1};
            late.S = {high};
            late.stage = high + 1;
            sc.events.push_back(std::move(late));
        }
        sc.validate();
        suite.scripts.push_back(std::move(sc));
    }
    return suite;
}

OrderSuite order_opponent_suite(int maxStage) {
    if (maxStage < 60) throw std::invalid_argument("order_opponent_suite: maxStage too small");

    auto set_script = [&](std::vector<std::pair<std::vector<int>, int>> payload) {
        OpponentScript sc;
        sc.kind = ScriptKind::SetFormula;
        sc.budget = maxStage;
        for (auto& [R, stage] : payload) {
            ScriptEvent ev;
            ev.R = std::move(R);
            ev.stage = stage;
            sc.events.push_back(std::move(ev));
        }
        return sc;
    };
    auto split_script = [&](std::vector<std::array<int, 3>> payload) {
        OpponentScript sc;
        sc.kind = ScriptKind::ElementFormula;
        sc.budget = maxStage;
        for (auto& [u, v, stage] : payload) {
            ScriptEvent ev;
            ev.u = u;
            ev.v = v;
            ev.stage = stage;
            sc.events.push_back(std::move(ev));
        }
        return sc;
    };
    // spare events sit past every acting stage; all six slots are satisfied
    // for good by stage 33, so the spares never fire yet raise the bound the
    // essential checks can certify
    auto pad_set = [&](OpponentScript& sc, int slot) {
        for (int j = 1; j <= 21; ++j) {
            ScriptEvent ev;
            ev.R = {30 + 20 * j + slot};
            ev.stage = 34 + j;
            sc.events.push_back(std::move(ev));
        }
        sc.validate();
    };
    auto pad_split = [&](OpponentScript& sc, int slot) {
        for (int j = 1; j <= 21; ++j) {
            ScriptEvent ev;
            ev.u = 30 + 20 * j + slot;
            ev.v = 31 + 20 * j + slot;
            ev.stage = 34 + j;
            sc.events.push_back(std::move(ev));
        }
        sc.validate();
    };

    OrderSuite suite;
    suite.xBound = 450;
    priority::OrderOpponents& o = suite.opponents;

    // acting order: small0 @5, isolated0 @9, small1 @15, split0 @21 (injuring
    // small1), small1 again @25, isolated1 @29, split1 @33; split0 meets a
    // comparable pair (small1's first action seeded the chain below 17) and
    // split1 an incomparable one
    o.small.push_back(set_script({{{3}, 5}, {{11}, 15}, {{23}, 25}}));
    o.small.push_back(set_script({{{11}, 15}, {{23}, 25}}));
    o.isolated.push_back(set_script({{{7}, 9}}));
    o.isolated.push_back(set_script({{{27}, 29}}));
    o.split.push_back(split_script({{11, 17, 21}}));
    o.split.push_back(split_script({{29, 31, 33}}));

    pad_set(o.small[0], 0);
    pad_set(o.isolated[0], 1);
    pad_split(o.split[0], 2);
    pad_set(o.small[1], 3);
    pad_set(o.isolated[1], 4);
    pad_split(o.split[1], 5);
    suite.opponents.validate();
    return suite;
}

std::vector<OpponentScript> functional_suite(std::uint64_t seed, int count, int maxStage) {
    if (maxStage < 250) throw std::invalid_argument("functional_suite: maxStage too small");
    Rng rng(seed);
    std::set<std::pair<int, int>> used;
    std::vector<OpponentScript> out;
    for (int i = 0; i < count; ++i) {
        int e = 0, k = 1;
        do {
            k = rng.between(1, 4);
            e = rng.between(0, 8 - k);
        } while (!used.insert({e, k}).second);
        const std::int64_t floor = priority::column_floor(Pairing::encode(e, k));

        // 0: qualifying values; 1: oversized values; 2: low-column values
        int flavor = (i == 0) ? 0 : (i == 1) ? 1 : rng.chance(2, 3) ? 0 : rng.between(1, 2);
        if (flavor == 2 && floor < 4) flavor = 1;

        OpponentScript sc;
        sc.kind = ScriptKind::Functional;
        sc.budget = maxStage;
        sc.e = e;
        sc.k = k;
        std::int64_t t = (flavor == 2) ? 2 : floor + 2;
        const int args = rng.between(1, 3);
        for (int a = 0; a < args; ++a) {
            ScriptEvent ev;
            ev.x = a;
            ev.stage = rng.between(5, 60);
            const int codes = (flavor == 1) ? k + 1 : rng.between(1, k);
            for (int c = 0; c < codes; ++c) {
                std::int64_t row = std::min<std::int64_t>(rng.below(3), t);
                if (flavor == 2 && t - row < 1) row = 0; // keep the column low but valid
                ev.value.push_back(Pairing::encode(t - row, row));
                t += rng.between(1, 3);
            }
            if (flavor == 2) {
                // stay strictly below the floor so the block never qualifies
                if (t >= floor) t = floor + 2, flavor = 1; // fell out of the band: oversize later blocks
            }
            sc.events.push_back(std::move(ev));
        }
        std::stable_sort(sc.events.begin(), sc.events.end(),
                         [](const ScriptEvent& a, const ScriptEvent& b) { return a.stage < b.stage; });
        sc.validate();
        out.push_back(std::move(sc));
    }
    return out;
}

immunity::CoCeApprox random_coce(std::uint64_t seed, int domain, int steps) {
    Rng rng(seed);
    immunity::CoCeApprox approx;
    approx.domain = domain;
    std::vector<std::int64_t> cur;
    for (int x = 0; x < domain; ++x)
        if (rng.chance(4, 5)) cur.push_back(x);
    approx.stages.push_back(cur);
    for (int t = 1; t < steps; ++t) {
        const int drop = std::min<int>(rng.between(0, 2), static_cast<int>(cur.size()));
        for (int d = 0; d < drop; ++d) cur.erase(cur.begin() + rng.below(static_cast<int>(cur.size())));
        approx.stages.push_back(cur);
    }
    approx.validate();
    return approx;
}

UnionInstance union_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int width = 12;
    const int B = rng.between(8, 14);
    const int slackFrom = B * width;
    const int domain = slackFrom + 60;
    const int mode = rng.below(3); // 0: certification-rich, 1: poor, 2: mixed
    const int num = mode == 0 ? 3 : mode == 1 ? 1 : 2;

    UnionInstance inst;
    inst.arr.kind = immunity::ArrayKind::Array;
    std::vector<std::int64_t> finalSnap;
    std::set<std::int64_t> a1;
    for (int b = 0; b < B; ++b) {
        std::set<std::int64_t> block;
        const int sz = rng.between(1, 3);
        while (static_cast<int>(block.size()) < sz)
            block.insert(b * width + rng.below(width));
        const bool certified = (b + 1 < B) && rng.chance(num, 4);
        if (certified) {
            a1.insert(*block.begin());
        } else {
            finalSnap.push_back(*block.rbegin());
            if (rng.chance(1, 3)) a1.insert(*block.begin());
        }
        inst.arr.blocks.emplace_back(block.begin(), block.end());
    }
    // junk melts away inside the slack region; no block ever meets it, so a
    // block's certification does not depend on the chosen horizon
    std::vector<std::int64_t> junk;
    for (int x = slackFrom; x < domain; ++x)
        if (rng.chance(1, 2)) junk.push_back(x);
    const int steps = rng.between(4, 7);
    inst.a0.domain = domain;
    for (int t = 0; t < steps; ++t) {
        std::vector<std::int64_t> snap = finalSnap;
        const std::size_t keep = junk.size() - std::min(junk.size(), (junk.size() * t) / (steps - 1));
        snap.insert(snap.end(), junk.begin(), junk.begin() + static_cast<std::ptrdiff_t>(keep));
        std::sort(snap.begin(), snap.end());
        inst.a0.stages.push_back(std::move(snap));
    }
    inst.a0.validate();
    inst.arr.validate();
    inst.horizon = rng.between(0, steps - 1);
    inst.a1.assign(a1.begin(), a1.end());
    return inst;
}

KenumInstance kenum_instance(std::uint64_t seed, int universe, int blocks, int k) {
    Rng rng(seed);
    const int width = universe / (blocks + 1);
    if (width < k + 2) throw std::invalid_argument("kenum_instance: universe too small");
    KenumInstance inst;
    inst.kenum.kind = immunity::ArrayKind::KEnum;
    inst.kenum.k = k;
    std::set<std::int64_t> A;
    const int tricks = (k >= 2) ? (rng.chance(1, 2) ? rng.between(12, 16) : rng.between(0, 2)) : 0;
    for (int b = 0; b < blocks; ++b) {
        const bool trick = b < tricks;
        std::set<std::int64_t> block;
        const int sz = trick ? rng.between(2, k) : rng.between(1, k);
        while (static_cast<int>(block.size()) < sz)
            block.insert(b * width + rng.below(width));
        bool first = true;
        for (std::int64_t v : block) {
            if (!(trick && first)) A.insert(v);
            first = false;
        }
        inst.kenum.blocks.emplace_back(block.begin(), block.end());
    }
    for (int x = blocks * width; x < universe; ++x)
        if (rng.chance(1, 4)) A.insert(x);
    inst.kenum.validate();
    inst.A.assign(A.begin(), A.end());
    return inst;
}

LiftInstance lift_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int members = rng.between(2, 4);
    const int domain = 40;
    LiftInstance inst;
    std::vector<std::vector<std::int64_t>> finals;
    for (int j = 0; j < members; ++j) {
        std::set<std::int64_t> fin;
        while (static_cast<int>(fin.size()) < 12) fin.insert(rng.below(domain));
        finals.emplace_back(fin.begin(), fin.end());
    }

    const int nBlocks = rng.between(3, 5);
    // x indexes the lifted column; it must clear the block count and sit in
    // the first component
    inst.x = rng.between(nBlocks + 1, domain - 1);
    finals[0].push_back(inst.x);
    std::sort(finals[0].begin(), finals[0].end());
    finals[0].erase(std::unique(finals[0].begin(), finals[0].end()), finals[0].end());

    const int steps = rng.between(3, 5);
    for (int j = 0; j < members; ++j) {
        immunity::CoCeApprox approx;
        approx.domain = domain;
        std::set<std::int64_t> junk;
        while (static_cast<int>(junk.size()) < 6) {
            const int cand = rng.below(domain);
            if (!std::binary_search(finals[static_cast<std::size_t>(j)].begin(),
                                    finals[static_cast<std::size_t>(j)].end(), cand))
                junk.insert(cand);
        }
        std::vector<std::int64_t> junkList(junk.begin(), junk.end());
        for (int t = 0; t < steps; ++t) {
            std::vector<std::int64_t> snap = finals[static_cast<std::size_t>(j)];
            const std::size_t keep =
                junkList.size() - std::min<std::size_t>(junkList.size(),
                                                        (junkList.size() * t) / (steps - 1));
            snap.insert(snap.end(), junkList.begin(),
                        junkList.begin() + static_cast<std::ptrdiff_t>(keep));
            std::sort(snap.begin(), snap.end());
            approx.stages.push_back(std::move(snap));
        }
        approx.validate();
        inst.family.push_back(std::move(approx));
    }
    inst.horizon = steps - 1; // junk-free snapshots: exactly the finals

    inst.arr.kind = immunity::ArrayKind::Array;
    const int width = domain / nBlocks;
    for (int b = 0; b < nBlocks; ++b) {
        std::set<std::int64_t> block;
        // anchor the block inside the first component's final snapshot
        std::vector<std::int64_t> anchors;
        for (std::int64_t v : finals[0])
            if (v >= b * width && v < (b + 1) * width) anchors.push_back(v);
        if (anchors.empty()) {
            // no anchor fell into the range: make one
            const std::int64_t v = b * width + rng.below(width);
            finals[0].push_back(v);
            anchors.push_back(v);
        }
        block.insert(anchors[static_cast<std::size_t>(rng.below(static_cast<int>(anchors.size())))]);
        while (static_cast<int>(block.size()) < rng.between(1, 3))
            block.insert(b * width + rng.below(width));
        inst.arr.blocks.emplace_back(block.begin(), block.end());
    }
    // late anchors must reach the snapshots too
    std::sort(finals[0].begin(), finals[0].end());
    finals[0].erase(std::unique(finals[0].begin(), finals[0].end()), finals[0].end());
    for (auto& snap : inst.family[0].stages) {
        std::vector<std::int64_t> merged = snap;
        merged.insert(merged.end(), finals[0].begin(), finals[0].end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        snap = std::move(merged);
    }
    inst.family[0].validate();
    inst.arr.validate();
    return inst;
}

GInstance g_instance(std::uint64_t seed, bool forceH) {
    Rng rng(seed);
    GInstance inst;
    inst.blocks.kind = immunity::ArrayKind::Array;
    const int nBlocks = rng.between(4, 6);
    const std::int64_t a0min = rng.between(2, 4);
    inst.a0 = {a0min, a0min + 3};

    std::set<std::int64_t> live;
    if (forceH) {
        // every block keeps one live code at or below the starting cut and
        // one code above it, so no candidate ever certifies
        for (int b = 0; b < nBlocks; ++b) {
            std::set<std::int64_t> block;
            const std::int64_t lowCol = rng.between(0, static_cast<int>(a0min));
            const std::int64_t lowCode = Pairing::encode(lowCol, rng.between(0, 2));
            block.insert(lowCode);
            live.insert(lowCode);
            block.insert(Pairing::encode(a0min + 1 + rng.between(0, 5), rng.between(0, 2)));
            inst.blocks.blocks.emplace_back(block.begin(), block.end());
        }
    } else {
        // block b's columns live in a band above block b-1's, so every step
        // certifies vacuously and walks on
        std::int64_t col = a0min;
        for (int b = 0; b < nBlocks; ++b) {
            std::set<std::int64_t> block;
            const int sz = rng.between(1, 3);
            for (int c = 0; c < sz; ++c) {
                col += rng.between(1, 2);
                block.insert(Pairing::encode(col, rng.between(0, 2)));
            }
            inst.blocks.blocks.emplace_back(block.begin(), block.end());
        }
    }

    std::int64_t maxCode = 0;
    std::int64_t maxCol = 0;
    for (const auto& b : inst.blocks.blocks)
        for (std::int64_t z : b) {
            maxCode = std::max(maxCode, z);
            maxCol = std::max(maxCol, Pairing::column_of(z));
        }
    // churn codes sit in columns above every block so they never revive a cut
    std::vector<std::int64_t> junk;
    for (int j = 0; j < 8; ++j) {
        const std::int64_t cand = Pairing::encode(maxCol + 1 + rng.below(6), rng.below(3));
        junk.push_back(cand);
        maxCode = std::max(maxCode, cand);
    }
    inst.approx.domain = static_cast<int>(maxCode) + 5;
    const int steps = nBlocks + 2; // deadness must be certifiable past every block index
    for (int t = 0; t < steps; ++t) {
        std::set<std::int64_t> snap(live.begin(), live.end());
        for (std::size_t j = 0; j + static_cast<std::size_t>(t) < junk.size(); ++j)
            snap.insert(junk[j]);
        inst.approx.stages.emplace_back(snap.begin(), snap.end());
    }
    inst.blocks.validate();
    inst.approx.validate();
    inst.horizon = steps - 1;
    return inst;
}

DependentInstance dependent_instance(std::uint64_t seed) {
    Rng rng(seed);
    DependentInstance inst;
    inst.a0 = random_coce(rng.raw(), 200, rng.between(3, 6));
    const auto& fin = inst.a0.final_stage();
    std::vector<std::int64_t> out; // complement of the final snapshot
    for (int x = 0; x < 200; ++x)
        if (!std::binary_search(fin.begin(), fin.end(), static_cast<std::int64_t>(x)))
            out.push_back(x);

    inst.script.kind = ScriptKind::PairFormula;
    inst.script.budget = 400;
    int stage = 5;
    int climb = 10;
    const int events = rng.between(8, 14);
    for (int i = 0; i < events && !out.empty(); ++i) {
        ScriptEvent ev;
        ev.stage = stage;
        stage += rng.between(1, 6);
        const bool good = i == 0 || rng.chance(2, 3);
        std::set<int> R;
        if (good || fin.empty()) {
            std::vector<int> eligible; // complement elements safely below the S window
            for (std::int64_t v : out)
                if (v < climb) eligible.push_back(static_cast<int>(v));
            if (eligible.empty()) {
                R.insert(static_cast<int>(out.front()));
            } else {
                const int want = std::min(rng.between(1, 2), static_cast<int>(eligible.size()));
                while (static_cast<int>(R.size()) < want)
                    R.insert(eligible[static_cast<std::size_t>(rng.below(static_cast<int>(eligible.size())))]);
            }
        } else {
            R.insert(static_cast<int>(fin[static_cast<std::size_t>(rng.below(static_cast<int>(fin.size())))]));
        }
        const int rmax = *R.rbegin();
        const int sLow = good ? climb : std::max(rmax + 1, climb - 8);
        std::set<int> S;
        S.insert(sLow + rng.between(0, 2));
        if (rng.chance(1, 2)) S.insert(sLow + rng.between(3, 5));
        if (*S.begin() <= rmax) S = {rmax + 1, rmax + 2};
        ev.R.assign(R.begin(), R.end());
        ev.S.assign(S.begin(), S.end());
        climb = std::max(climb, *S.rbegin() + rng.between(2, 6));
        inst.script.events.push_back(std::move(ev));
    }
    if (inst.script.budget <= stage) inst.script.budget = stage + 1;
    inst.script.validate();
    return inst;
}

} // namespace orderlab::instances
