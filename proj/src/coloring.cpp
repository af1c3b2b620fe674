#include "orderlab/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace orderlab {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

ColoringPrefix::ColoringPrefix(int size, int arity, int colors, std::vector<int> upper)
    : size_(size), arity_(arity), colors_(colors), upper_(std::move(upper)) {
    if (size < 0) throw std::invalid_argument("coloring: negative size");
    if (arity < 1) throw std::invalid_argument("coloring: arity must be positive");
    if (colors < 1) throw std::invalid_argument("coloring: colors must be positive");
    std::int64_t want = binomial(size, arity);
    if (static_cast<std::int64_t>(upper_.size()) != want)
        throw std::invalid_argument("coloring: expected " + std::to_string(want) +
                                    " colors, got " + std::to_string(upper_.size()));
    for (int c : upper_)
        if (c < 0 || c >= colors)
            throw std::invalid_argument("coloring: color out of range");
}

ColoringPrefix ColoringPrefix::constant(int size, int arity, int colors, int color) {
    std::vector<int> up(static_cast<std::size_t>(binomial(size, arity)), color);
    return ColoringPrefix(size, arity, colors, std::move(up));
}

std::size_t ColoringPrefix::rank(const std::vector<int>& sorted) const {
    // Colex rank of a strictly increasing tuple: sum of C(t_i, i+1).
    std::int64_t r = 0;
    for (int i = 0; i < arity_; ++i) r += binomial(sorted[i], i + 1);
    return static_cast<std::size_t>(r);
}

int ColoringPrefix::at(std::vector<int> tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw std::invalid_argument("coloring: tuple arity mismatch");
    std::sort(tuple.begin(), tuple.end());
    for (int i = 0; i < arity_; ++i) {
        if (tuple[i] < 0 || tuple[i] >= size_)
            throw std::invalid_argument("coloring: element out of range");
        if (i > 0 && tuple[i] == tuple[i - 1])
            throw std::invalid_argument("coloring: repeated element in tuple");
    }
    return upper_[rank(tuple)];
}

int ColoringPrefix::pair(int x, int y) const {
    if (arity_ != 2) throw std::invalid_argument("coloring: pair query needs arity 2");
    if (x == y) throw std::invalid_argument("coloring: repeated element in pair");
    if (x > y) std::swap(x, y);
    if (x < 0 || y >= size_) throw std::invalid_argument("coloring: element out of range");
    return upper_[static_cast<std::size_t>(y) * (y - 1) / 2 + x];
}

void ColoringPrefix::set_pair(int x, int y, int color) {
    if (arity_ != 2) throw std::invalid_argument("coloring: pair update needs arity 2");
    if (x == y) throw std::invalid_argument("coloring: repeated element in pair");
    if (x > y) std::swap(x, y);
    if (x < 0 || y >= size_) throw std::invalid_argument("coloring: element out of range");
    if (color < 0 || color >= colors_) throw std::invalid_argument("coloring: color out of range");
    upper_[static_cast<std::size_t>(y) * (y - 1) / 2 + x] = color;
}

std::optional<TripleWitness> check_semi_transitive(const ColoringPrefix& f) {
    if (f.arity() != 2 || f.colors() != 2)
        throw std::invalid_argument("check_semi_transitive: needs a [2,2] coloring");
    int n = f.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (f.pair(x, y) != 1) continue;
            for (int z = y + 1; z < n; ++z)
                if (f.pair(y, z) == 1 && f.pair(x, z) != 1)
                    return TripleWitness{x, y, z};
        }
    return std::nullopt;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> S, int bound, const char* who) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (!S.empty() && (S.front() < 0 || S.back() >= bound))
        throw std::invalid_argument(std::string(who) + ": element out of prefix range");
    return S;
}

} // namespace

SetPropertyResult check_homogeneous(const std::vector<int>& S, const ColoringPrefix& f) {
    auto s = sorted_unique(S, f.size(), "check_homogeneous");
    int n = f.arity();
    int m = static_cast<int>(s.size());
    if (m < n) return {};

    // Walk all increasing n-subsets of s in lex order of index vectors,
    // comparing each tuple's color against the first one.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<int> firstTuple;
    int firstColor = -1;
    while (true) {
        std::vector<int> tuple(n);
        for (int i = 0; i < n; ++i) tuple[i] = s[idx[i]];
        int c = f.at(tuple);
        if (firstColor < 0) {
            firstColor = c;
            firstTuple = tuple;
        } else if (c != firstColor) {
            SetPropertyResult r;
            r.ok = false;
            r.witness = firstTuple;
            r.witness.insert(r.witness.end(), tuple.begin(), tuple.end());
            r.detail = "tuples disagree: colors " + std::to_string(firstColor) + " vs " + std::to_string(c);
            return r;
        }
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {};
}

SetPropertyResult check_pseudo_homogeneous(const std::vector<int>& S, const ColoringPrefix& f) {
    auto s = sorted_unique(S, f.size(), "check_pseudo_homogeneous");
    int n = f.arity();
    int m = static_cast<int>(s.size());
    if (m <= n) return {}; // fewer than two consecutive tuples
    std::vector<int> prev(s.begin(), s.begin() + n);
    int color = f.at(prev);
    for (int i = 1; i + n <= m; ++i) {
        std::vector<int> cur(s.begin() + i, s.begin() + i + n);
        int c = f.at(cur);
        if (c != color) {
            SetPropertyResult r;
            r.ok = false;
            r.witness = prev;
            r.witness.insert(r.witness.end(), cur.begin(), cur.end());
            r.detail = "consecutive tuples disagree: colors " + std::to_string(color) + " vs " + std::to_string(c);
            return r;
        }
        prev = std::move(cur);
    }
    return {};
}

std::vector<std::optional<int>> column_limits(const ColoringPrefix& f, int tailWindow) {
    if (f.arity() != 2) throw std::invalid_argument("column_limits: needs arity 2");
    int n = f.size();
    if (tailWindow < 0 || tailWindow >= n)
        throw std::invalid_argument("column_limits: tail window must fit inside the prefix");
    std::vector<std::optional<int>> out(n);
    for (int x = 0; x < n; ++x) {
        int from = std::max(x + 1, n - tailWindow);
        if (from >= n) continue; // no sample for x at this horizon
        int c = f.pair(x, from);
        bool uniform = true;
        for (int y = from + 1; y < n; ++y)
            if (f.pair(x, y) != c) { uniform = false; break; }
        if (uniform) out[x] = c;
    }
    return out;
}

} // namespace orderlab
