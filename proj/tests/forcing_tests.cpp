#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "orderlab/coloring.hpp"
#include "orderlab/forcing.hpp"
#include "orderlab/instances.hpp"
#include "orderlab/partial_order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace orderlab;
using namespace orderlab::forcing;
using testutil::caught;
using testutil::make_coloring;

namespace {

PartedCondition make_parted(std::vector<std::vector<int>> parts, int horizon,
                            std::vector<int> reservoir) {
    PartedCondition c;
    c.parts = std::move(parts);
    c.reservoir.assign(static_cast<std::size_t>(horizon), 0);
    for (int x : reservoir) c.reservoir[static_cast<std::size_t>(x)] = 1;
    return c;
}

PartialOrderPrefix chain3() {
    RelationMatrix leq = testutil::identity_relation(3);
    leq[0][1] = leq[1][2] = leq[0][2] = 1;
    return PartialOrderPrefix::from_construction(std::move(leq));
}

PartialOrderPrefix two_below_tail() {
    // 0 and 1 both sit below 2 and are mutually incomparable
    RelationMatrix leq = testutil::identity_relation(3);
    leq[0][2] = leq[1][2] = 1;
    return PartialOrderPrefix::from_construction(std::move(leq));
}

} // namespace

TEST_CASE("parted conditions: reservoir accessors") {
    auto c = make_parted({{0}}, 6, {2, 5});
    CHECK(c.horizon() == 6);
    CHECK(c.reservoir_members() == std::vector<int>{2, 5});
    CHECK(make_parted({}, 0, {}).reservoir_members().empty());
}

TEST_CASE("parted conditions: every rejection names its reason") {
    auto f = make_coloring(6, [](int x, int y) {
        return (x == 0 && (y == 3 || y == 4)) ? 1 : 0;
    });

    CHECK(check_parted_condition(make_parted({{0}}, 6, {5}), f, false).ok);

    ColoringPrefix triples(3, 3, 2, std::vector<int>{0});
    CHECK(check_parted_condition(make_parted({}, 0, {}), triples, false).detail ==
          "condition checks need an arity-2 coloring");
    CHECK(check_parted_condition(make_parted({{}, {}, {}}, 6, {}), f, false).detail ==
          "more parts than colors");
    CHECK(check_parted_condition(make_parted({}, 7, {}), f, false).detail ==
          "reservoir horizon exceeds the coloring");
    CHECK(check_parted_condition(make_parted({{2, 1}}, 6, {}), f, false).detail ==
          "part not sorted and duplicate-free");
    CHECK(check_parted_condition(make_parted({{9}}, 6, {}), f, false).detail ==
          "part element outside the coloring");
    CHECK(check_parted_condition(make_parted({{1}, {1}}, 6, {}), f, false).detail ==
          "parts overlap");
    CHECK(check_parted_condition(make_parted({{3}}, 6, {2}), f, false).detail ==
          "parts must lie strictly below the reservoir");
    CHECK(check_parted_condition(make_parted({{}, {1, 3}}, 6, {5}), f, true).detail ==
          "part 1 not pseudo-monochromatic"); // f(1,3) = 0 on the color-1 part
}

TEST_CASE("parted conditions: pseudo relaxes the part check to neighbors") {
    // f(0,3) = 1 breaks the full check but not the consecutive one
    auto f = make_coloring(6, [](int x, int y) {
        return (x == 0 && (y == 3 || y == 4)) ? 1 : 0;
    });
    auto c = make_parted({{0, 1, 3}}, 6, {5});
    CHECK(check_parted_condition(c, f, true).ok);
    CHECK(check_parted_condition(c, f, false).detail == "part 0 not monochromatic");
}

TEST_CASE("order conditions: classification gates membership") {
    auto p = two_below_tail();
    auto cls = classify_elements(p, 1); // 0, 1 small toward {2}, 2 small vacuously

    CHECK(check_order_condition({{0}, {}}, p, cls).ok);
    CHECK(check_order_condition({{0, 1}, {}}, p, cls).detail == "F0 not ascending");

    ElementClassification shortCls;
    shortCls.tailWindow = 1;
    shortCls.kind = {ElementKind::Small};
    CHECK(check_order_condition({{}, {}}, p, shortCls).detail ==
          "classification does not cover the order");

    CHECK(check_order_condition({{1, 0}, {}}, p, cls).detail ==
          "parts must be sorted and duplicate-free");
    CHECK(check_order_condition({{7}, {}}, p, cls).detail == "F0 element outside the order");
    CHECK(check_order_condition({{}, {9}}, p, cls).detail == "F1 element outside the order");
    CHECK(check_order_condition({{}, {0}}, p, cls).detail == "F1 element 0 not isolated");

    RelationMatrix leq = testutil::identity_relation(4);
    leq[0][1] = 1;
    auto q = PartialOrderPrefix::from_construction(std::move(leq));
    auto qcls = classify_elements(q, 1); // 0 and 1 isolated toward {3}, yet comparable
    CHECK(check_order_condition({{}, {0, 1}}, q, qcls).detail == "F1 not an antichain");
    CHECK(check_order_condition({{0}, {}}, q, qcls).detail == "F0 element 0 not small");
}

TEST_CASE("reservoirs: points above one part, beside the other") {
    RelationMatrix leq = testutil::identity_relation(3);
    leq[0][2] = 1;
    auto p = PartialOrderPrefix::from_construction(std::move(leq));

    auto X = X_of({{0}, {1}}, p, 3);
    CHECK(X.members == std::vector<int>{2});
    CHECK(X.complement == 2); // 0 fails x < z, 1 fails leq(0, 1)

    auto all = X_of({{}, {}}, p, 3);
    CHECK(all.members == std::vector<int>{0, 1, 2});
    CHECK(all.complement == 0);
    CHECK(X_of({{}, {}}, p, 0).members.empty());

    CHECK(caught<std::invalid_argument>([&] { X_of({{}, {}}, p, 4); }) ==
          "X_of: horizon outside the order");
    CHECK(caught<std::invalid_argument>([&] { X_of({{}, {}}, p, -1); }) ==
          "X_of: horizon outside the order");
}

TEST_CASE("synchronized extension: least small and least isolated") {
    auto anti = PartialOrderPrefix::from_construction(testutil::identity_relation(3));
    auto cls = classify_elements(anti, 1); // 0, 1 isolated; 2 small vacuously

    auto step = extend_both({{}, {}}, anti, cls, 3);
    CHECK(step.pickedSmall == 2);
    CHECK(step.pickedIsolated == 0);
    REQUIRE(step.next.has_value());
    CHECK(step.next->F0 == std::vector<int>{2});
    CHECK(step.next->F1 == std::vector<int>{0});
    CHECK(step.stall.empty());

    // shrinking the horizon starves the small class but not the isolated one
    auto stalled = extend_both({{}, {}}, anti, cls, 2);
    CHECK(stalled.stall == "no small point in the reservoir");
    CHECK(stalled.pickedSmall == -1);
    CHECK(stalled.pickedIsolated == 0);
    CHECK(!stalled.next.has_value());

    auto chain = chain3();
    auto ccls = classify_elements(chain, 1);
    auto dual = extend_both({{}, {}}, chain, ccls, 3);
    CHECK(dual.stall == "no isolated point in the reservoir");
    CHECK(dual.pickedSmall == 0);

    CHECK(caught<std::invalid_argument>([&] { extend_both({{1}, {}}, anti, cls, 3); }) ==
          "extend_both: F0 element 1 not small");
}

TEST_CASE("synchronized extension: reservoirs only shrink along a run") {
    int grownRuns = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto p = instances::layered_order(seed, 60, 50);
        auto cls = classify_elements(p, 10);
        OrderCondition c;
        auto prev = X_of(c, p, 60).members;
        for (int step = 0; step < 10; ++step) {
            auto ext = extend_both(c, p, cls, 60);
            if (!ext.next) break;
            CHECK(check_order_condition(*ext.next, p, cls).ok);
            auto cur = X_of(*ext.next, p, 60).members;
            CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
            CHECK(std::find(cur.begin(), cur.end(), ext.pickedSmall) == cur.end());
            c = *ext.next;
            prev = std::move(cur);
            ++grownRuns;
        }
    }
    CHECK(grownRuns > 0);
}

TEST_CASE("split pairs: first hit of the shortlex walk") {
    auto chain = chain3();
    auto found = split_pair_search({{}, {}}, chain, 3, 1);
    REQUIRE(found.has_value());
    CHECK(found->E0.empty());
    CHECK(found->E1 == std::vector<int>{0});

    // comparable F1 elements poison every candidate, including pure E0 pairs
    auto blocked = split_pair_search({{}, {0, 1}}, chain, 3, 1);
    CHECK(!blocked.has_value());

    CHECK(!split_pair_search({{}, {}}, chain, 3, 0).has_value());
    CHECK(caught<std::invalid_argument>([&] { split_pair_search({{}, {}}, chain, 3, -1); }) ==
          "split_pair_search: negative size bound");
}

TEST_CASE("split pairs: agreement with the exhaustive enumeration") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto p = instances::layered_order(seed, 14, 50);
        instances::Rng rng(seed + 900);
        for (int round = 0; round < 4; ++round) {
            OrderCondition c;
            for (int x = 0; x < 6; ++x) {
                if (rng.chance(1, 5)) c.F0.push_back(x);
                else if (rng.chance(1, 4)) c.F1.push_back(x);
            }
            for (int sizeBound : {1, 2}) {
                auto impl = split_pair_search(c, p, 14, sizeBound);
                auto oracle = oracles::first_split_pair(c, p, 14, sizeBound);
                REQUIRE(impl.has_value() == oracle.has_value());
                if (impl) {
                    CHECK(impl->E0 == oracle->E0);
                    CHECK(impl->E1 == oracle->E1);
                }
            }
        }
    }
}

TEST_CASE("color extension: the limit mode certifies, threshold mode approximates") {
    auto f = make_coloring(8, [](int x, int) { return (x == 0 || x == 3) ? 1 : 0; });
    auto c = make_parted({{}, {0}}, 8, {2, 3, 4, 5, 6, 7});

    ExtensionPolicy limit;
    limit.mode = ExtensionMode::Limit;
    limit.tailWindow = 3;
    auto ext = cac_extension_search(c, f, 1, limit);
    CHECK(ext.picked == 3); // 2 fits the part but its tail color is 0
    CHECK(!ext.approximate);
    REQUIRE(ext.next.has_value());
    CHECK(ext.next->parts[1] == std::vector<int>{0, 3});
    CHECK(ext.next->reservoir_members() == std::vector<int>{4, 5, 6, 7});
    CHECK(check_parted_condition(*ext.next, f, false).ok);

    ExtensionPolicy byCount; // threshold -1 reads as horizon / 4 = 2
    byCount.mode = ExtensionMode::Threshold;
    auto approx = cac_extension_search(c, f, 1, byCount);
    CHECK(approx.picked == 3); // 2 fits but only reaches an empty next reservoir
    CHECK(approx.approximate);
    CHECK(approx.next->reservoir_members() == std::vector<int>{4, 5, 6, 7});

    ExtensionPolicy steep;
    steep.mode = ExtensionMode::Threshold;
    steep.threshold = 5;
    auto stalled = cac_extension_search(c, f, 1, steep);
    CHECK(stalled.picked == -1);
    CHECK(!stalled.next.has_value());
    CHECK(stalled.stall == "no reservoir point extends part 1 under the policy");
    CHECK(stalled.approximate);
}

TEST_CASE("color extension: empty parts accept any fitting point") {
    auto f = make_coloring(6, [](int, int) { return 0; });
    auto c = make_parted({{}}, 6, {1, 2, 3});
    ExtensionPolicy limit;
    limit.tailWindow = 2;
    auto ext = cac_extension_search(c, f, 0, limit);
    CHECK(ext.picked == 1);
    CHECK(ext.next->parts[0] == std::vector<int>{1});
    CHECK(ext.next->reservoir_members() == std::vector<int>{2, 3});
}

TEST_CASE("color extension: argument guards") {
    auto f = make_coloring(8, [](int, int) { return 0; });
    auto c = make_parted({{}}, 8, {3, 4});
    ExtensionPolicy limit;
    limit.tailWindow = 3;

    CHECK(caught<std::invalid_argument>([&] { cac_extension_search(c, f, 1, limit); }) ==
          "extension search: part index out of range");

    ExtensionPolicy zero;
    zero.tailWindow = 0;
    CHECK(caught<std::invalid_argument>([&] { cac_extension_search(c, f, 0, zero); }) ==
          "extension search: tail window outside the coloring");
    ExtensionPolicy wide;
    wide.tailWindow = 8;
    CHECK(caught<std::invalid_argument>([&] { cac_extension_search(c, f, 0, wide); }) ==
          "extension search: tail window outside the coloring");

    auto bad = make_parted({{1}, {1}}, 8, {3});
    CHECK(caught<std::invalid_argument>([&] { cac_extension_search(bad, f, 0, limit); }) ==
          "extension search: parts overlap");
}

TEST_CASE("color extension: the pseudo rule only constrains the last element") {
    // g(0,3) = g(0,4) = 1, everything else 0: the part {0,1,3} is
    // pseudo-coherent but not fully monochromatic
    auto g = make_coloring(6, [](int x, int y) {
        return (x == 0 && (y == 3 || y == 4)) ? 1 : 0;
    });
    auto c = make_parted({{0, 1, 3}}, 6, {4, 5});

    ExtensionPolicy lax;
    lax.mode = ExtensionMode::Threshold;
    lax.threshold = 0;
    auto ext = psrt_extension_search(c, g, 0, lax);
    CHECK(ext.picked == 4); // g(3,4) = 0 suffices even though g(0,4) = 1
    CHECK(ext.next->parts[0] == std::vector<int>{0, 1, 3, 4});
    CHECK(ext.next->reservoir_members() == std::vector<int>{5});
    CHECK(check_parted_condition(*ext.next, g, true).ok);

    CHECK(caught<std::invalid_argument>([&] { cac_extension_search(c, g, 0, lax); }) ==
          "extension search: part 0 not monochromatic");
}
