#pragma once

#include "orderlab/coloring.hpp"
#include "orderlab/partial_order.hpp"

#include <optional>
#include <vector>

namespace orderlab::reductions {

/// Strictly increasing sequence whose consecutive pairs all carry `color`.
struct WitnessPath {
    int color = 0;
    std::vector<int> points; // length >= 2

    /// Throws std::invalid_argument when the sequence is not strictly
    /// increasing, too short, or some consecutive pair has the wrong color.
    void validate(const ColoringPrefix& f) const;
};

/// g(x,y) = 1 iff some increasing sequence x = x_0 < ... < x_l = y has
/// f(x_i, x_{i+1}) = 1 throughout (single edges count). Packed reachability
/// sweep, O(N^3 / 64).
/// The result is semi-transitive and dominates f on color 1.
ColoringPrefix close_semitransitive(const ColoringPrefix& f);

/// Lexicographically least increasing path from x to y whose consecutive
/// pairs all carry `color`, or nullopt if none exists. Requires x < y.
std::optional<WitnessPath> witness_path(const ColoringPrefix& f, int x, int y, int color);

/// h(x,y) = 0 iff some increasing path from x to y has color 0 throughout in
/// g, else 1. Requires g semi-transitive; then h is semi-transitive and its
/// color-0 relation is transitive.
ColoringPrefix linearize(const ColoringPrefix& g);

/// Linear order induced by an h produced by linearize:
/// x <_L y iff (x <_N y and h(x,y)=1) or (y <_N x and h(y,x)=0).
LinearOrderPrefix induced_linear_order(const ColoringPrefix& h);

/// Pseudo-homogeneous set for h pulled back to one for g. Color-1 sets return
/// unchanged (a 0-valued g edge would witness h = 0); color-0 sets absorb the
/// integers of color-0 witness paths between consecutive elements.
std::vector<int> pullback_h_to_g(const std::vector<int>& H, const ColoringPrefix& g,
                                 const ColoringPrefix& h);

/// Pseudo-homogeneous set for g pulled back to one for f. Color-0 sets return
/// unchanged, color-1 sets absorb color-1 witness paths taken in f.
std::vector<int> pullback_g_to_f(const std::vector<int>& H, const ColoringPrefix& f,
                                 const ColoringPrefix& g);

/// Partial order x <=_Q y iff x = y or (x <_N y and f(x,y) = 1). Requires f
/// semi-transitive; color-1 homogeneous sets become chains, color-0
/// homogeneous sets antichains.
PartialOrderPrefix semitransitive_to_order(const ColoringPrefix& f);

struct MonotoneSolution {
    bool ascending = true;
    std::vector<int> elements; // numerically increasing
};

/// Longest monotone solution over the stably classified elements of a linear
/// order prefix: the longest ascending subsequence against the longest
/// descending one, ties to ascending. Unstable-at-horizon elements are
/// skipped; throws when nothing is classified.
MonotoneSolution solve_stable_linear(const LinearOrderPrefix& h, const ElementClassification& cls);

} // namespace orderlab::reductions
