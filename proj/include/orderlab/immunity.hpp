#pragma once

#include "orderlab/opponent_script.hpp"
#include "orderlab/partial_order.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orderlab::immunity {

/// Array of finite sets. KEnum additionally bounds every block by k elements;
/// CbEnum marks arrays whose blocks list class codes rather than numbers, the
/// structural checks are the same.
enum class ArrayKind { Array, KEnum, CbEnum };

const char* to_string(ArrayKind k);
ArrayKind array_kind_from_string(const std::string& s);

struct ArrayOfSets {
    ArrayKind kind = ArrayKind::Array;
    int k = 0; // block size bound, meaningful for KEnum
    std::vector<std::vector<std::int64_t>> blocks;

    /// Blocks must be nonempty, sorted, duplicate-free, nonnegative; KEnum
    /// needs k >= 1 and every block within the bound. Throws
    /// std::invalid_argument.
    void validate() const;
};

/// Stagewise approximation of a co-c.e. set: snapshots shrink, membership in
/// the last snapshot is final at the recorded horizon.
struct CoCeApprox {
    int domain = 0; // snapshots live inside [0, domain)
    std::vector<std::vector<std::int64_t>> stages;

    void validate() const;
    const std::vector<std::int64_t>& snapshot(int t) const;
    const std::vector<std::int64_t>& final_stage() const;
};

/// Blocks of strings standing in for a class enumeration.
struct StringBlockEnum {
    std::vector<std::vector<std::string>> blocks;
    void validate() const;
};

/// Every block meets A. Empty arrays trace vacuously.
bool traces(const ArrayOfSets& arr, const std::vector<std::int64_t>& A);

/// The increasing enumeration n -> a_n of a set, validated strictly
/// increasing and nonnegative.
std::vector<std::int64_t> principal_function(std::vector<std::int64_t> A);

/// Pointwise f >= g on the shared prefix of the two value lists.
bool dominates(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g);

/// Turns a k-bounded array tracing A into a finite subset of A. Blocks of a
/// 1-bounded array are singletons inside A already; otherwise the minima
/// certified outside A either reach `threshold`, in which case those blocks
/// recurse with their minima stripped, or the minima past the last certified
/// value are returned. Throws std::invalid_argument when the array does not
/// trace A.
std::vector<std::int64_t> kenum_to_subset(const ArrayOfSets& kenum,
                                          const std::vector<std::int64_t>& A, int threshold = 3);

struct UnionSplit {
    int branch = 0; // 1: certified blocks, 0: suffix past the last certified
    ArrayOfSets blocks;
    std::vector<int> sourceIndex; // positions in the input array
};

/// For an array tracing a union A0 ∪ A1, with A0 approximated co-c.e.: a
/// block certified empty against snapshot `horizon` of A0 can only trace A1,
/// an uncertified block meets the snapshot. With `threshold` certified blocks
/// the certified sub-array is returned (branch 1); otherwise the suffix past
/// the last certified block (branch 0). Throws when every block is certified
/// but the threshold is out of reach, or when the horizon exceeds the
/// approximation.
UnionSplit union_hyp_transform(const ArrayOfSets& arr, const CoCeApprox& a0, int horizon,
                               int threshold = 3);

/// Codes (x, y) with x in the first component's snapshot at `horizon` and y
/// in some component of index <= x, same snapshot. The family is indexed by
/// component; x past the family end draws on every component.
std::vector<std::int64_t> build_B(const std::vector<CoCeApprox>& family, int horizon);

/// Lifts a block array over y-values to code blocks {(x, y) : y in F_i} for a
/// fixed first coordinate x, required to lie in A0 and at or past the array
/// length.
ArrayOfSets lift_array_to_B(const ArrayOfSets& arr, int x, const std::vector<std::int64_t>& A0);

struct GExtraction {
    std::string branch;                           // "G" or "H"
    std::vector<std::vector<std::int64_t>> G;     // chain of x-part blocks, G[0] from A0
    std::vector<int> picked;                      // source block per successful step
    int horizonUsed = 0;                          // snapshot index T the search consulted
    int cut = -1;                                 // x-part cut, set on the H branch
    ArrayOfSets H;                                // low fragments, set on the H branch
};

/// Iterated search over an array of code blocks against a shrinking code set.
/// Step i holds a cut x_i = max G_i and looks for the least later block whose
/// codes at or below the cut are all dead in snapshot T = min(horizon,
/// last stage), requiring T past the block index and a surviving code above
/// the cut; its x-parts above the cut become G_{i+1}. Exhausting the blocks
/// completes the G branch; evaluable candidates all failing yields the H
/// branch of low fragments; no evaluable candidate at all is an error.
GExtraction extract_G_sequence(const ArrayOfSets& blocks, const CoCeApprox& approx,
                               const std::vector<std::int64_t>& A0, int horizon);

struct EssentialReport {
    bool ok = true;
    int failX = -1;
    std::string detail;
};

/// Pair-formula scripts: every x < xBound must see a witnessed R-group with
/// min R > x whose best S-value (max over the group of min S) reaches yBound.
EssentialReport essential_check(const OpponentScript& script, int xBound, int yBound);

/// Set-formula scripts: every x < xBound must see a witnessed set above x.
EssentialReport set_essential_check(const OpponentScript& script, int xBound);

/// Element-formula scripts: every x < xBound must see a witnessed pair above x.
EssentialReport combined_essential_check(const OpponentScript& script, int xBound);

/// First witnessed event with R inside comp0 and S inside comp1.
std::optional<ScriptEvent> dependent_witness_search(const OpponentScript& script,
                                                    const std::vector<std::int64_t>& comp0,
                                                    const std::vector<std::int64_t>& comp1);

struct DependentArray {
    ArrayOfSets blocks;                    // accepted S payloads
    std::vector<std::vector<int>> companions; // matching R payloads
    std::vector<int> eventIndex;
};

/// Greedy scan of a pair-formula script: accept (R, S) when R misses the
/// final snapshot of a0 entirely and S starts past the last accepted block.
DependentArray coce_dependent_array(const OpponentScript& script, const CoCeApprox& a0);

/// Aligns a string-block enumeration so block i holds strings of length
/// exactly i: target i consumes the next unused block whose strings all have
/// length >= i, truncated to i characters. With `count` set, stopping short
/// of count blocks is an error.
StringBlockEnum normalize_class_enum(const StringBlockEnum& e,
                                     std::optional<int> count = std::nullopt);

struct MinPReport {
    std::vector<std::vector<std::int64_t>> minima; // order-minimal elements per block
    std::vector<std::uint8_t> hasSmall;            // block contains a small element
};

/// Per-block order-minimal elements plus a small-element flag read off the
/// tail-window classification. Unstable elements inside blocks are an error.
MinPReport minP_extract(const ArrayOfSets& arr, const PartialOrderPrefix& p, int tailWindow);

} // namespace orderlab::immunity
