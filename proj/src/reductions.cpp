#include "orderlab/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace orderlab::reductions {

void WitnessPath::validate(const ColoringPrefix& f) const {
    if (points.size() < 2) throw std::invalid_argument("witness path: needs at least two points");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] >= points[i + 1])
            throw std::invalid_argument("witness path: not strictly increasing");
        if (f.pair(points[i], points[i + 1]) != color)
            throw std::invalid_argument("witness path: consecutive pair has the wrong color");
    }
}

namespace {

void require_22(const ColoringPrefix& f, const char* who) {
    if (f.arity() != 2 || f.colors() != 2)
        throw std::invalid_argument(std::string(who) + ": needs a [2,2] coloring");
}

/// reach[x][y] for x < y: some increasing path x -> y whose consecutive
/// pairs all carry `color`. Increasing paths are exactly reachability along
/// the color edges (every intermediate lies in (x,y) by monotonicity), so a
/// reverse sweep over packed successor rows settles each row in one pass.
std::vector<std::vector<std::uint8_t>> path_reach(const ColoringPrefix& f, int color) {
    const int n = f.size();
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> mask(
        static_cast<std::size_t>(n),
        std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
    for (int x = n - 1; x >= 0; --x) {
        auto& row = mask[static_cast<std::size_t>(x)];
        for (int z = x + 1; z < n; ++z) {
            if (f.pair(x, z) != color) continue;
            row[static_cast<std::size_t>(z >> 6)] |= std::uint64_t{1} << (z & 63);
            const auto& sub = mask[static_cast<std::size_t>(z)];
            for (int w = 0; w < words; ++w)
                row[static_cast<std::size_t>(w)] |= sub[static_cast<std::size_t>(w)];
        }
    }
    std::vector<std::vector<std::uint8_t>> reach(
        static_cast<std::size_t>(n), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(
                (mask[static_cast<std::size_t>(x)][static_cast<std::size_t>(y >> 6)] >> (y & 63)) & 1);
    return reach;
}

} // namespace

ColoringPrefix close_semitransitive(const ColoringPrefix& f) {
    require_22(f, "close_semitransitive");
    int n = f.size();
    auto reach = path_reach(f, 1);
    ColoringPrefix g = f;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            g.set_pair(x, y, reach[x][y] ? 1 : 0);
    return g;
}

std::optional<WitnessPath> witness_path(const ColoringPrefix& f, int x, int y, int color) {
    require_22(f, "witness_path");
    if (x < 0 || y >= f.size() || x >= y)
        throw std::invalid_argument("witness_path: needs 0 <= x < y < size");
    if (color != 0 && color != 1) throw std::invalid_argument("witness_path: bad color");
    auto reach = path_reach(f, color);
    if (!reach[x][y]) return std::nullopt;
    WitnessPath p;
    p.color = color;
    p.points.push_back(x);
    int cur = x;
    while (cur != y) {
        // least feasible next point keeps the whole path lexicographically least
        int next = -1;
        for (int z = cur + 1; z <= y; ++z) {
            if (f.pair(cur, z) != color) continue;
            if (z == y || reach[z][y]) { next = z; break; }
        }
        if (next < 0) throw std::logic_error("witness_path: reachability table inconsistent");
        cur = next;
        p.points.push_back(cur);
    }
    return p;
}

ColoringPrefix linearize(const ColoringPrefix& g) {
    require_22(g, "linearize");
    if (auto w = check_semi_transitive(g))
        throw std::invalid_argument("linearize: input not semi-transitive at (" +
                                    std::to_string(w->x) + "," + std::to_string(w->y) + "," +
                                    std::to_string(w->z) + ")");
    int n = g.size();
    auto reach0 = path_reach(g, 0);
    ColoringPrefix h = g;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            h.set_pair(x, y, reach0[x][y] ? 0 : 1);
    return h;
}

LinearOrderPrefix induced_linear_order(const ColoringPrefix& h) {
    require_22(h, "induced_linear_order");
    int n = h.size();
    RelationMatrix leq(n, std::vector<std::uint8_t>(n, 0));
    for (int x = 0; x < n; ++x) leq[x][x] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (h.pair(x, y) == 1) leq[x][y] = 1; // x <_L y
            else leq[y][x] = 1;                    // y <_L x
        }
    return LinearOrderPrefix::from_construction(std::move(leq));
}

namespace {

std::vector<int> insert_paths(const std::vector<int>& H, const ColoringPrefix& base, int color,
                              const char* who) {
    std::vector<int> out = H;
    for (std::size_t i = 0; i + 1 < H.size(); ++i) {
        auto p = witness_path(base, H[i], H[i + 1], color);
        if (!p) throw std::logic_error(std::string(who) + ": missing witness path, inputs inconsistent");
        out.insert(out.end(), p->points.begin(), p->points.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> clean_set(std::vector<int> H) {
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    return H;
}

} // namespace

std::vector<int> pullback_h_to_g(const std::vector<int>& H, const ColoringPrefix& g,
                                 const ColoringPrefix& h) {
    auto s = clean_set(H);
    auto pre = check_pseudo_homogeneous(s, h);
    if (!pre.ok) throw std::invalid_argument("pullback_h_to_g: set not pseudo-homogeneous for h: " + pre.detail);
    if (s.size() < 2) return s;
    int color = h.pair(s[0], s[1]);
    if (color == 1) return s;
    return insert_paths(s, g, 0, "pullback_h_to_g");
}

std::vector<int> pullback_g_to_f(const std::vector<int>& H, const ColoringPrefix& f,
                                 const ColoringPrefix& g) {
    auto s = clean_set(H);
    auto pre = check_pseudo_homogeneous(s, g);
    if (!pre.ok) throw std::invalid_argument("pullback_g_to_f: set not pseudo-homogeneous for g: " + pre.detail);
    if (s.size() < 2) return s;
    int color = g.pair(s[0], s[1]);
    if (color == 0) return s;
    return insert_paths(s, f, 1, "pullback_g_to_f");
}

PartialOrderPrefix semitransitive_to_order(const ColoringPrefix& f) {
    require_22(f, "semitransitive_to_order");
    if (auto w = check_semi_transitive(f))
        throw std::invalid_argument("semitransitive_to_order: input not semi-transitive at (" +
                                    std::to_string(w->x) + "," + std::to_string(w->y) + "," +
                                    std::to_string(w->z) + ")");
    int n = f.size();
    RelationMatrix leq(n, std::vector<std::uint8_t>(n, 0));
    for (int x = 0; x < n; ++x) leq[x][x] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (f.pair(x, y) == 1) leq[x][y] = 1;
    return PartialOrderPrefix::from_construction(std::move(leq));
}

namespace {

/// Longest subsequence of `pool` (numerically increasing) that is monotone in
/// the given direction of <_L. Quadratic DP, leftmost optimum.
std::vector<int> longest_monotone(const std::vector<int>& pool, const LinearOrderPrefix& h, bool ascending) {
    int m = static_cast<int>(pool.size());
    std::vector<int> best(m, 1), pred(m, -1);
    int bestEnd = -1, bestLen = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            bool ok = ascending ? h.less(pool[j], pool[i]) : h.less(pool[i], pool[j]);
            if (ok && best[j] + 1 > best[i]) { best[i] = best[j] + 1; pred[i] = j; }
        }
        if (best[i] > bestLen) { bestLen = best[i]; bestEnd = i; }
    }
    std::vector<int> out;
    for (int i = bestEnd; i >= 0; i = pred[i]) out.push_back(pool[i]);
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

MonotoneSolution solve_stable_linear(const LinearOrderPrefix& h, const ElementClassification& cls) {
    if (static_cast<int>(cls.kind.size()) != h.size())
        throw std::invalid_argument("solve_stable_linear: classification size mismatch");
    std::vector<int> pool;
    for (int x = 0; x < h.size(); ++x)
        if (cls.kind[x] != ElementKind::Unstable) pool.push_back(x);
    if (pool.empty()) throw std::invalid_argument("solve_stable_linear: empty classification");

    auto asc = longest_monotone(pool, h, true);
    auto desc = longest_monotone(pool, h, false);
    MonotoneSolution sol;
    if (asc.size() >= desc.size()) {
        sol.ascending = true;
        sol.elements = std::move(asc);
    } else {
        sol.ascending = false;
        sol.elements = std::move(desc);
    }
    return sol;
}

} // namespace orderlab::reductions
