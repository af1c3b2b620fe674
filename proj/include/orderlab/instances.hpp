#pragma once

#include "orderlab/coloring.hpp"
#include "orderlab/immunity.hpp"
#include "orderlab/opponent_script.hpp"
#include "orderlab/partial_order.hpp"
#include "orderlab/priority.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace orderlab::instances {

/// Seeded generator; all draws go through modulo reduction so a seed pins the
/// instance on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }
    /// Uniform-ish draw from [0, n), n >= 1.
    int below(int n);
    /// Uniform-ish draw from [lo, hi], inclusive.
    int between(int lo, int hi);
    bool chance(int num, int den);

  private:
    std::mt19937_64 gen_;
};

/// Arbitrary pair coloring, every value drawn independently.
ColoringPrefix random_coloring(std::uint64_t seed, int size, int colors = 2);

/// Intersection of the numeric order with a random permutation order: a
/// two-dimensional partial order, dense in comparabilities and triples.
PartialOrderPrefix random_order(std::uint64_t seed, int size);

/// Each element is drawn into a bottom class (below everything later) or an
/// isolated class (incomparable to everything later). Pre-tail elements
/// classify cleanly as Small or Isolated, which keeps reservoirs rich.
PartialOrderPrefix layered_order(std::uint64_t seed, int size, int smallPercent = 50);

/// Semi-transitive coloring read off a random two-dimensional order:
/// f(x,y) = 1 iff x is below y. Transitivity of the order gives
/// semi-transitivity without consulting the closure code.
ColoringPrefix random_semitransitive(std::uint64_t seed, int size);

struct StableSuite {
    std::vector<OpponentScript> scripts;
    int xBound = 0; // every script passes essential_check(script, xBound, yBound)
    int yBound = 0;
};

/// Pair-formula opponents for the two-class coloring construction. Script j
/// carries one witness group per `spacing` band, each group holding an early
/// low S (so the construction can act soon) and a late high S (so the group's
/// best witness clears yBound).
StableSuite stable_opponent_suite(int count, int maxStage, int spacing = 20);

struct OrderSuite {
    priority::OrderOpponents opponents;
    int xBound = 0; // every script passes its essential check at this bound
};

/// Two opponents per scheme for the three-class order construction, scripted
/// so the six slots act in a fixed order, one small-scheme slot takes an
/// injury and recovers, one split fires on a comparable pair (creating a
/// large element) and one on an incomparable pair. Spare late events never
/// fire but push the essentiality bound up.
OrderSuite order_opponent_suite(int maxStage);

/// Functional scripts with distinct (e,k) tags. Roughly two thirds qualify
/// (a witnessed value of at most k codes, all at or past the tag's column
/// floor); the rest are decoys with oversized or low-column values only.
std::vector<OpponentScript> functional_suite(std::uint64_t seed, int count, int maxStage);

/// Shrinking snapshot chain over [0, domain).
immunity::CoCeApprox random_coce(std::uint64_t seed, int domain, int steps);

struct UnionInstance {
    immunity::ArrayOfSets arr;  // traces a0-final ∪ a1 blockwise
    immunity::CoCeApprox a0;
    std::vector<std::int64_t> a1;
    int horizon = 0;
};

/// Blocks over disjoint ranges; a certified block misses every a0 snapshot
/// and meets a1, an uncertified one holds a member of the final snapshot.
/// Snapshot junk lives in a slack region no block touches, so certification
/// is horizon-independent. The last block is always uncertified.
UnionInstance union_instance(std::uint64_t seed);

struct KenumInstance {
    immunity::ArrayOfSets kenum;
    std::vector<std::int64_t> A;
};

/// k-bounded array tracing A over [0, universe). Trick blocks put their
/// minimum outside A (the rest inside); their count is either kept below the
/// certification threshold or pushed past ten so the extracted subset stays
/// comfortably large either way.
KenumInstance kenum_instance(std::uint64_t seed, int universe, int blocks, int k);

struct LiftInstance {
    std::vector<immunity::CoCeApprox> family;
    immunity::ArrayOfSets arr; // y-value blocks, each meeting family[0]'s final snapshot
    int x = 0;                 // first coordinate, inside family[0]'s final snapshot
    int horizon = 0;
};

LiftInstance lift_instance(std::uint64_t seed);

struct GInstance {
    immunity::ArrayOfSets blocks; // code blocks
    immunity::CoCeApprox approx;  // code liveness approximation
    std::vector<std::int64_t> a0;
    int horizon = 0;
};

/// forceH=false: block s holds only columns in a band strictly above block
/// s-1's, so the extraction walks the whole array (G branch). forceH=true:
/// every block keeps a live code at or below the starting cut plus a code
/// above it, so every candidate fails and the low fragments all meet the
/// snapshot (H branch).
GInstance g_instance(std::uint64_t seed, bool forceH);

struct DependentInstance {
    OpponentScript script;
    immunity::CoCeApprox a0;
};

/// Pair-formula script against a co-c.e. approximation; some events have R
/// clear of the final snapshot and S climbing (acceptable), interleaved with
/// decoys that touch the snapshot or fall back.
DependentInstance dependent_instance(std::uint64_t seed);

} // namespace orderlab::instances
