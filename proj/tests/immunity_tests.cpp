#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "orderlab/immunity.hpp"
#include "orderlab/instances.hpp"
#include "orderlab/pairing.hpp"
#include "orderlab/partial_order.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace orderlab;
using namespace orderlab::immunity;
using testutil::caught;

namespace {

ArrayOfSets make_array(std::vector<std::vector<std::int64_t>> blocks,
                       ArrayKind kind = ArrayKind::Array, int k = 0) {
    ArrayOfSets a;
    a.kind = kind;
    a.k = k;
    a.blocks = std::move(blocks);
    return a;
}

CoCeApprox make_approx(int domain, std::vector<std::vector<std::int64_t>> stages) {
    CoCeApprox c;
    c.domain = domain;
    c.stages = std::move(stages);
    return c;
}

OpponentScript pair_script(std::vector<ScriptEvent> evs, int budget) {
    OpponentScript sc;
    sc.kind = ScriptKind::PairFormula;
    sc.budget = budget;
    sc.events = std::move(evs);
    return sc;
}

ScriptEvent pair_event(int stage, std::vector<int> R, std::vector<int> S) {
    ScriptEvent ev;
    ev.stage = stage;
    ev.R = std::move(R);
    ev.S = std::move(S);
    return ev;
}

} // namespace

TEST_CASE("set arrays: structural validation") {
    CHECK_NOTHROW(make_array({{0, 2}, {5}}).validate());
    CHECK_NOTHROW(make_array({}).validate());

    CHECK(caught<std::invalid_argument>([] { make_array({{}}).validate(); }) ==
          "array of sets: empty block");
    CHECK(caught<std::invalid_argument>([] { make_array({{3, 1}}).validate(); }) ==
          "array of sets: block not sorted and duplicate-free");
    CHECK(caught<std::invalid_argument>([] { make_array({{2, 2}}).validate(); }) ==
          "array of sets: block not sorted and duplicate-free");
    CHECK(caught<std::invalid_argument>([] { make_array({{-1, 4}}).validate(); }) ==
          "array of sets: negative block element");
    CHECK(caught<std::invalid_argument>([] {
              make_array({{1}}, ArrayKind::KEnum, 0).validate();
          }) == "k-bounded array needs k >= 1");
    CHECK(caught<std::invalid_argument>([] {
              make_array({{1, 2, 3}}, ArrayKind::KEnum, 2).validate();
          }) == "block exceeds the k bound");

    CHECK(std::string(to_string(ArrayKind::KEnum)) == "kenum");
    CHECK(array_kind_from_string("cbenum") == ArrayKind::CbEnum);
    CHECK(array_kind_from_string("array") == ArrayKind::Array);
    CHECK(caught<std::invalid_argument>([] { array_kind_from_string("heap"); }) ==
          "unknown array kind: heap");
}

TEST_CASE("co-c.e. approximations: snapshots shrink toward the limit") {
    auto c = make_approx(10, {{1, 3, 7}, {1, 7}, {7}});
    CHECK_NOTHROW(c.validate());
    CHECK(c.snapshot(1) == std::vector<std::int64_t>{1, 7});
    CHECK(c.final_stage() == std::vector<std::int64_t>{7});

    CHECK(caught<std::invalid_argument>([] { make_approx(-1, {{}}).validate(); }) ==
          "approximation domain must be nonnegative");
    CHECK(caught<std::invalid_argument>([] { make_approx(5, {}).validate(); }) ==
          "approximation needs at least one snapshot");
    CHECK(caught<std::invalid_argument>([] { make_approx(5, {{2, 1}}).validate(); }) ==
          "snapshot not sorted and duplicate-free");
    CHECK(caught<std::invalid_argument>([] { make_approx(5, {{2, 5}}).validate(); }) ==
          "snapshot element outside the domain");
    CHECK(caught<std::invalid_argument>([] { make_approx(5, {{1}, {1, 2}}).validate(); }) ==
          "snapshots must shrink");
    CHECK(caught<std::invalid_argument>([&] { c.snapshot(3); }) == "snapshot index out of range");
    CHECK(caught<std::invalid_argument>([] { CoCeApprox{}.final_stage(); }) ==
          "approximation has no snapshots");

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto r = instances::random_coce(seed, 60, 12);
        CHECK_NOTHROW(r.validate());
        CHECK(r.domain == 60);
    }
}

TEST_CASE("tracing: every block meets the set") {
    auto arr = make_array({{1, 4}, {9}});
    CHECK(traces(arr, {4, 9}));
    CHECK(traces(arr, {1, 9, 30}));
    CHECK(!traces(arr, {4}));
    CHECK(traces(make_array({}), {}));

    CHECK(caught<std::invalid_argument>([] {
              StringBlockEnum e;
              e.blocks = {{"a"}, {}};
              e.validate();
          }) == "string enumeration: empty block");
}

TEST_CASE("principal functions and domination") {
    CHECK(principal_function({3, 5, 9}) == std::vector<std::int64_t>{3, 5, 9});
    CHECK(principal_function({}).empty());
    CHECK(caught<std::invalid_argument>([] { principal_function({3, 3}); }) ==
          "principal_function: set must be strictly increasing");
    CHECK(caught<std::invalid_argument>([] { principal_function({-2, 3}); }) ==
          "principal_function: negative element");

    CHECK(dominates({3, 4}, {3, 3}));
    CHECK(!dominates({2, 9, 9}, {3}));
    CHECK(dominates({5}, {1, 100})); // only the shared prefix counts
    CHECK(dominates({}, {7}));
}

TEST_CASE("k-bounded extraction: one-bounded arrays are subsets already") {
    auto arr = make_array({{3}, {7}, {7}}, ArrayKind::KEnum, 1);
    CHECK(kenum_to_subset(arr, {3, 7}) == std::vector<std::int64_t>{3, 7});
}

TEST_CASE("k-bounded extraction: certified minima are stripped") {
    // every minimum is certified outside A, so the tails recurse at k - 1
    auto arr = make_array({{1, 2}, {11, 12}, {21, 22}}, ArrayKind::KEnum, 2);
    CHECK(kenum_to_subset(arr, {2, 12, 22}) == std::vector<std::int64_t>{2, 12, 22});
}

TEST_CASE("k-bounded extraction: cutting past the last certified value") {
    // two tricks fall short of the threshold; minima above the cut are real
    auto arr = make_array({{1, 2}, {11, 12}, {21, 22}, {31, 32}}, ArrayKind::KEnum, 2);
    CHECK(kenum_to_subset(arr, {2, 12, 21, 31}) == std::vector<std::int64_t>{21, 31});
}

TEST_CASE("k-bounded extraction: argument guards") {
    CHECK(caught<std::invalid_argument>([] {
              kenum_to_subset(make_array({{5}}), {5});
          }) == "kenum_to_subset: array must be k-bounded");
    CHECK(caught<std::invalid_argument>([] {
              kenum_to_subset(make_array({{5}}, ArrayKind::KEnum, 1), {5}, 0);
          }) == "kenum_to_subset: threshold must be positive");
    CHECK(caught<std::invalid_argument>([] {
              kenum_to_subset(make_array({{5}, {9}}, ArrayKind::KEnum, 1), {5});
          }) == "kenum_to_subset: a block misses the traced set");
}

TEST_CASE("k-bounded extraction: generated instances land inside A") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto inst = instances::kenum_instance(seed, 400, 20, 3);
        CHECK(traces(inst.kenum, inst.A));
        auto sub = kenum_to_subset(inst.kenum, inst.A);
        CHECK(!sub.empty());
        std::set<std::int64_t> a(inst.A.begin(), inst.A.end());
        for (std::int64_t z : sub) CHECK(a.count(z));
    }
}

TEST_CASE("union splitting: certified branch and uncertified suffix") {
    auto arr = make_array({{1}, {11}, {21}, {31}});
    auto a0 = make_approx(40, {{11, 21, 31}, {11, 31}});

    auto hi = union_hyp_transform(arr, a0, 1, 2);
    CHECK(hi.branch == 1);
    CHECK(hi.blocks.blocks == std::vector<std::vector<std::int64_t>>{{1}, {21}});
    CHECK(hi.sourceIndex == std::vector<int>{0, 2});

    auto lo = union_hyp_transform(arr, a0, 1, 3);
    CHECK(lo.branch == 0);
    CHECK(lo.blocks.blocks == std::vector<std::vector<std::int64_t>>{{31}});
    CHECK(lo.sourceIndex == std::vector<int>{3});

    CHECK(caught<std::invalid_argument>([&] { union_hyp_transform(arr, a0, 2, 2); }) ==
          "union_hyp_transform: horizon exceeds the approximation");
    CHECK(caught<std::invalid_argument>([&] { union_hyp_transform(arr, a0, 1, 0); }) ==
          "union_hyp_transform: threshold must be positive");

    auto empty = make_approx(10, {{}});
    CHECK(caught<std::invalid_argument>([&] {
              union_hyp_transform(make_array({{1}, {2}}), empty, 0, 5);
          }) == "union_hyp_transform: no uncertified suffix and the threshold is out of reach");
}

TEST_CASE("union splitting: generated instances verify blockwise") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto inst = instances::union_instance(seed);
        auto split = union_hyp_transform(inst.arr, inst.a0, inst.horizon);
        std::set<std::int64_t> snap;
        for (std::int64_t z : inst.a0.snapshot(inst.horizon)) snap.insert(z);

        REQUIRE(split.blocks.blocks.size() == split.sourceIndex.size());
        for (std::size_t j = 0; j < split.sourceIndex.size(); ++j)
            CHECK(split.blocks.blocks[j] ==
                  inst.arr.blocks[static_cast<std::size_t>(split.sourceIndex[j])]);

        if (split.branch == 1) {
            // certified blocks miss the snapshot entirely, so they trace a1
            for (const auto& b : split.blocks.blocks)
                for (std::int64_t z : b) CHECK(!snap.count(z));
            CHECK(traces(split.blocks, inst.a1));
        } else {
            for (const auto& b : split.blocks.blocks) {
                bool meets = false;
                for (std::int64_t z : b) meets = meets || snap.count(z) > 0;
                CHECK(meets);
            }
        }
    }
}

TEST_CASE("code grids: products over a snapshot family") {
    auto c0 = make_approx(5, {{0, 2}});
    auto c1 = make_approx(5, {{1}});
    CHECK(build_B({c0, c1}, 0) == std::vector<std::int64_t>{0, 3, 5, 7, 12});
    CHECK(build_B({c0}, 0) == std::vector<std::int64_t>{0, 3, 5, 12});

    CHECK(caught<std::invalid_argument>([] { build_B({}, 0); }) ==
          "build_B: family must be nonempty");
    CHECK(caught<std::invalid_argument>([&] { build_B({c0, c1}, 1); }) ==
          "build_B: horizon exceeds an approximation");
}

TEST_CASE("lifting: y-blocks move into a fixed column") {
    auto arr = make_array({{1, 3}, {2}}, ArrayKind::KEnum, 2);
    auto lifted = lift_array_to_B(arr, 5, {4, 5});
    CHECK(lifted.kind == ArrayKind::KEnum);
    CHECK(lifted.k == 2);
    CHECK(lifted.blocks == std::vector<std::vector<std::int64_t>>{{22, 39}, {30}});
    for (const auto& b : lifted.blocks)
        for (std::int64_t z : b) CHECK(Pairing::column_of(z) == 5);

    CHECK(caught<std::invalid_argument>([&] { lift_array_to_B(arr, 3, {4, 5}); }) ==
          "lift_array_to_B: x must lie in the first component");
    CHECK(caught<std::invalid_argument>([&] { lift_array_to_B(arr, 1, {1}); }) ==
          "lift_array_to_B: x must not precede the array length");
}

TEST_CASE("iterated extraction: walking the whole array") {
    // block 1 lifts the cut to 4, block 2 to {5, 6}; dead codes are vacuous
    auto blocks = make_array({{6}, {10}, {15, 21}});
    auto approx = make_approx(30, {{}, {}, {}, {}});
    auto out = extract_G_sequence(blocks, approx, {2, 5}, 3);
    CHECK(out.branch == "G");
    CHECK(out.horizonUsed == 3);
    CHECK(out.G == std::vector<std::vector<std::int64_t>>{{2}, {4}, {5, 6}});
    CHECK(out.picked == std::vector<int>{1, 2});
    CHECK(out.cut == -1);
    CHECK(out.H.blocks.empty());
}

TEST_CASE("iterated extraction: live low codes force the fragment branch") {
    // codes 1 and 3 sit at or below the cut and survive every snapshot
    auto blocks = make_array({{0, 6}, {1, 10}, {3, 15}});
    auto approx = make_approx(30, {{1, 3}, {1, 3}, {1, 3}, {1, 3}});
    auto out = extract_G_sequence(blocks, approx, {2, 5}, 3);
    CHECK(out.branch == "H");
    CHECK(out.cut == 2);
    CHECK(out.G == std::vector<std::vector<std::int64_t>>{{2}});
    CHECK(out.picked.empty());
    CHECK(out.H.blocks == std::vector<std::vector<std::int64_t>>{{1}, {3}});
}

TEST_CASE("iterated extraction: starved horizons and bad arguments") {
    auto blocks = make_array({{0, 6}, {1, 10}, {3, 15}});
    auto shallow = make_approx(30, {{}, {}});
    CHECK(caught<std::invalid_argument>([&] {
              extract_G_sequence(blocks, shallow, {2}, 1);
          }) == "extract_G_sequence: horizon insufficient to evaluate any candidate block");
    CHECK(caught<std::invalid_argument>([&] {
              extract_G_sequence(blocks, shallow, {}, 1);
          }) == "extract_G_sequence: first component must be nonempty");
    CHECK(caught<std::invalid_argument>([&] {
              extract_G_sequence(blocks, shallow, {2}, -1);
          }) == "extract_G_sequence: horizon must be nonnegative");
}

TEST_CASE("iterated extraction: generated instances hit both branches") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = instances::g_instance(seed, false);
        auto out = extract_G_sequence(g.blocks, g.approx, g.a0, g.horizon);
        CHECK(out.branch == "G");
        CHECK(out.G.size() == out.picked.size() + 1);
        CHECK(out.G[0] ==
              std::vector<std::int64_t>{*std::min_element(g.a0.begin(), g.a0.end())});
        for (std::size_t i = 0; i + 1 < out.G.size(); ++i)
            CHECK(out.G[i + 1].front() > out.G[i].back()); // blocks climb strictly

        auto h = instances::g_instance(seed, true);
        auto frag = extract_G_sequence(h.blocks, h.approx, h.a0, h.horizon);
        CHECK(frag.branch == "H");
        CHECK(frag.cut >= 0);
        std::set<std::int64_t> snap;
        for (std::int64_t z : h.approx.snapshot(frag.horizonUsed)) snap.insert(z);
        CHECK(!frag.H.blocks.empty());
        for (const auto& b : frag.H.blocks) {
            bool live = false;
            for (std::int64_t z : b) {
                CHECK(Pairing::column_of(z) <= frag.cut);
                live = live || snap.count(z) > 0;
            }
            CHECK(live);
        }
    }
}

TEST_CASE("essential scripts: pair groups, set fronts, element pairs") {
    auto sc = pair_script({pair_event(2, {5}, {9})}, 10);
    CHECK(essential_check(sc, 5, 9).ok);
    auto rep = essential_check(sc, 6, 9);
    CHECK(!rep.ok);
    CHECK(rep.failX == 5);
    CHECK(rep.detail == "no witnessed group above x=5 reaches the S bound");

    // the best S-value is the max over events sharing the same R payload
    auto grouped = pair_script({pair_event(2, {5}, {6}), pair_event(4, {5}, {9})}, 10);
    CHECK(essential_check(grouped, 5, 9).ok);
    CHECK(!essential_check(grouped, 5, 10).ok);

    OpponentScript st;
    st.kind = ScriptKind::SetFormula;
    st.budget = 10;
    st.events = {[&] {
        ScriptEvent ev;
        ev.stage = 2;
        ev.R = {4};
        return ev;
    }()};
    CHECK(set_essential_check(st, 4).ok);
    auto srep = set_essential_check(st, 5);
    CHECK(!srep.ok);
    CHECK(srep.failX == 4);
    CHECK(srep.detail == "no witnessed set above x=4");

    OpponentScript el;
    el.kind = ScriptKind::ElementFormula;
    el.budget = 10;
    el.events = {[&] {
        ScriptEvent ev;
        ev.stage = 2;
        ev.u = 3;
        ev.v = 7;
        return ev;
    }()};
    CHECK(combined_essential_check(el, 3).ok);
    auto erep = combined_essential_check(el, 4);
    CHECK(!erep.ok);
    CHECK(erep.failX == 3);
    CHECK(erep.detail == "no witnessed pair above x=3");

    CHECK(caught<std::invalid_argument>([&] { essential_check(st, 1, 1); }) ==
          "essential_check: script must be pair-formula");
    CHECK(caught<std::invalid_argument>([&] { set_essential_check(sc, 1); }) ==
          "set_essential_check: script must be set-formula");
    CHECK(caught<std::invalid_argument>([&] { combined_essential_check(sc, 1); }) ==
          "combined_essential_check: script must be element-formula");
}

TEST_CASE("essential scripts: agreement with the literal quantifier") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        instances::Rng rng(seed);
        std::vector<ScriptEvent> evs;
        int stage = 1;
        const int n = rng.below(5);
        for (int i = 0; i < n; ++i) {
            stage += rng.between(1, 5);
            const int r0 = rng.below(12);
            std::vector<int> R = {r0};
            if (rng.chance(1, 2)) R.push_back(r0 + 1 + rng.below(3));
            const int s0 = R.back() + 1 + rng.below(10);
            std::vector<int> S = {s0};
            if (rng.chance(1, 2)) S.push_back(s0 + 1 + rng.below(4));
            evs.push_back(pair_event(stage, std::move(R), std::move(S)));
        }
        auto sc = pair_script(std::move(evs), 100);
        for (int xB : {1, 4, 9})
            for (int yB : {2, 8, 15})
                CHECK(essential_check(sc, xB, yB).ok == oracles::pair_essential(sc, xB, yB));
    }
}

TEST_CASE("dependent witnesses: first event inside both components") {
    auto sc = pair_script({pair_event(1, {1}, {5}), pair_event(3, {2}, {6})}, 10);
    auto hit = dependent_witness_search(sc, {2}, {5, 6});
    REQUIRE(hit.has_value());
    CHECK(hit->stage == 3);
    CHECK(hit->R == std::vector<int>{2});
    CHECK(!dependent_witness_search(sc, {9}, {5, 6}).has_value());

    OpponentScript st;
    st.kind = ScriptKind::SetFormula;
    CHECK(caught<std::invalid_argument>([&] { dependent_witness_search(st, {}, {}); }) ==
          "dependent_witness_search: script must be pair-formula");
}

TEST_CASE("dependent arrays: greedy climb against the final snapshot") {
    auto sc = pair_script({pair_event(1, {1}, {5, 6}), pair_event(2, {4}, {7}),
                           pair_event(3, {2}, {6, 8}), pair_event(4, {2, 3}, {9})},
                          10);
    auto a0 = make_approx(12, {{0, 4, 7}, {0, 4}});
    auto arr = coce_dependent_array(sc, a0);
    CHECK(arr.blocks.blocks == std::vector<std::vector<std::int64_t>>{{5, 6}, {9}});
    CHECK(arr.companions == std::vector<std::vector<int>>{{1}, {2, 3}});
    CHECK(arr.eventIndex == std::vector<int>{0, 3});

    OpponentScript st;
    st.kind = ScriptKind::SetFormula;
    CHECK(caught<std::invalid_argument>([&] { coce_dependent_array(st, a0); }) ==
          "coce_dependent_array: script must be pair-formula");
}

TEST_CASE("dependent arrays: generated scripts produce climbing blocks") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto inst = instances::dependent_instance(seed);
        auto arr = coce_dependent_array(inst.script, inst.a0);
        REQUIRE(arr.blocks.blocks.size() == arr.companions.size());
        REQUIRE(arr.blocks.blocks.size() == arr.eventIndex.size());
        CHECK(!arr.blocks.blocks.empty());

        std::set<std::int64_t> fin;
        for (std::int64_t z : inst.a0.final_stage()) fin.insert(z);
        std::int64_t lastMax = -1;
        for (std::size_t j = 0; j < arr.blocks.blocks.size(); ++j) {
            for (int r : arr.companions[j]) CHECK(!fin.count(r));
            CHECK(arr.blocks.blocks[j].front() > lastMax);
            lastMax = arr.blocks.blocks[j].back();
            if (j > 0) CHECK(arr.eventIndex[j] > arr.eventIndex[j - 1]);
        }
    }
}

TEST_CASE("class enumerations: length alignment") {
    StringBlockEnum e;
    e.blocks = {{"a", "bb"}, {"ccc"}, {"dd", "ee"}};
    auto out = normalize_class_enum(e);
    CHECK(out.blocks ==
          std::vector<std::vector<std::string>>{{""}, {"c"}, {"dd", "ee"}});

    // truncation may collapse strings; the block shrinks to the distinct set
    StringBlockEnum dup;
    dup.blocks = {{"z"}, {"cc", "cd"}};
    CHECK(normalize_class_enum(dup).blocks ==
          std::vector<std::vector<std::string>>{{""}, {"c"}});

    // a block too short for the current target is skipped for good
    StringBlockEnum skip;
    skip.blocks = {{"a", "b"}, {""}, {"xy"}};
    CHECK(normalize_class_enum(skip).blocks ==
          std::vector<std::vector<std::string>>{{""}, {"x"}});

    CHECK(caught<std::invalid_argument>([&] { normalize_class_enum(e, 4); }) ==
          "normalize_class_enum: enumeration exhausted before the requested count");
    CHECK(caught<std::invalid_argument>([&] { normalize_class_enum(e, -1); }) ==
          "normalize_class_enum: count must be nonnegative");
    CHECK(normalize_class_enum(e, 2).blocks.size() == 2);
}

TEST_CASE("block minima: order-minimal elements and small flags") {
    RelationMatrix leq = testutil::identity_relation(3);
    leq[0][1] = 1;
    auto p = PartialOrderPrefix::from_construction(std::move(leq));

    auto rep = minP_extract(make_array({{0, 1}, {2}}), p, 1);
    CHECK(rep.minima == std::vector<std::vector<std::int64_t>>{{0}, {2}});
    CHECK(rep.hasSmall == std::vector<std::uint8_t>{0, 1});

    CHECK(caught<std::invalid_argument>([&] { minP_extract(make_array({{5}}), p, 1); }) ==
          "minP_extract: block element out of range");
    CHECK(caught<std::invalid_argument>([&] { minP_extract(make_array({{0}}), p, 2); }) ==
          "minP_extract: unstable element in a block");
}
