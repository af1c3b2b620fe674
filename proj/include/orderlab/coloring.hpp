#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orderlab {

/// Finite prefix of a coloring f : [N]^n -> k.
///
/// Colors are stored densely over strictly increasing tuples in colexicographic
/// order; for arity 2 that is (0,1),(0,2),(1,2),(0,3),... i.e. ordered by the
/// larger endpoint, then the smaller. Queries with unsorted arguments are
/// normalized by sorting; repeated arguments are rejected.
class ColoringPrefix {
public:
    ColoringPrefix() = default;
    ColoringPrefix(int size, int arity, int colors, std::vector<int> upper);

    /// Uniform color, mostly a test convenience.
    static ColoringPrefix constant(int size, int arity, int colors, int color);

    int size() const { return size_; }
    int arity() const { return arity_; }
    int colors() const { return colors_; }
    const std::vector<int>& upper() const { return upper_; }

    /// Color of a tuple, any argument order. Throws on out-of-range or
    /// repeated elements.
    int at(std::vector<int> tuple) const;

    // arity-2 fast path; x != y required.
    int pair(int x, int y) const;
    void set_pair(int x, int y, int color);

    std::int64_t tuple_count() const { return static_cast<std::int64_t>(upper_.size()); }

private:
    int size_ = 0;
    int arity_ = 2;
    int colors_ = 2;
    std::vector<int> upper_;

    std::size_t rank(const std::vector<int>& sorted) const;
};

struct TripleWitness {
    int x, y, z;
};

/// Semi-transitivity for 2-colorings with 2 colors: f(x,y)=1 and f(y,z)=1 on an
/// increasing triple x<y<z forces f(x,z)=1. Returns the lexicographically least
/// violating triple, or nullopt when the prefix passes.
std::optional<TripleWitness> check_semi_transitive(const ColoringPrefix& f);

struct SetPropertyResult {
    bool ok = true;
    std::vector<int> witness; // offending elements, empty when ok
    std::string detail;
};

/// All arity-tuples drawn from S carry one color. |S| < arity is vacuously ok.
SetPropertyResult check_homogeneous(const std::vector<int>& S, const ColoringPrefix& f);

/// Consecutive arity-tuples of S (sorted increasingly) carry one color.
SetPropertyResult check_pseudo_homogeneous(const std::vector<int>& S, const ColoringPrefix& f);

/// Limit color of each column f(x, .) read off the tail window [N-w, N):
/// the constant color when the window is uniform, nullopt when mixed or when
/// the window gives no sample for x.
std::vector<std::optional<int>> column_limits(const ColoringPrefix& f, int tailWindow);

} // namespace orderlab
