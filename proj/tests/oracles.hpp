#pragma once

// Brute-force reference computations used only by tests. Nothing here goes
// through the bit-array kernels.

#include <sumsetlab/intset.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using sumsetlab::Int;

/// hA by enumerating every h-tuple of elements.
inline auto naive_h_fold(const std::vector<Int> & a, std::size_t h) -> std::set<Int>
{
    std::set<Int> out;
    std::function<void(std::size_t, Int)> rec = [&](std::size_t depth, Int sum) {
        if (depth == h) {
            out.insert(sum);
            return;
        }
        for (auto x : a)
            rec(depth + 1, sum + x);
    };
    rec(0, 0);
    return out;
}

inline auto naive_h_fold(const sumsetlab::IntSet & a, std::size_t h) -> std::set<Int>
{
    return naive_h_fold(a.elements(), h);
}

/// Members of the semigroup generated by a (nonnegative) up to limit, by
/// closing {0} under addition of generators.
inline auto naive_semigroup(const std::vector<Int> & gens, Int limit) -> std::set<Int>
{
    std::set<Int> s{0};
    std::vector<Int> frontier{0};
    while (! frontier.empty()) {
        std::vector<Int> next;
        for (auto x : frontier)
            for (auto g : gens)
                if (g > 0 && x + g <= limit && s.insert(x + g).second)
                    next.push_back(x + g);
        frontier.swap(next);
    }
    return s;
}

/// Gaps of the semigroup, assuming gcd 1, using the classical bound
/// g <= (m - 1)(M - 1) - 1 for smallest/largest positive generators m, M.
inline auto naive_gaps(const std::vector<Int> & gens) -> std::vector<Int>
{
    Int m = 0, big = 0;
    for (auto g : gens)
        if (g > 0) {
            m = m == 0 ? g : std::min(m, g);
            big = std::max(big, g);
        }
    const Int limit = std::max<Int>(2, (m - 1) * (big - 1) + 2);
    auto s = naive_semigroup(gens, limit);
    std::vector<Int> gaps;
    for (Int n = 0; n <= limit; ++n)
        if (! s.count(n))
            gaps.push_back(n);
    return gaps;
}

inline auto binomial(Int n, Int k) -> Int
{
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// All normalized sets (min 0, gcd 1, at least two elements) with max <= top.
inline auto normalized_sets(Int top) -> std::vector<std::vector<Int>>
{
    std::vector<std::vector<Int>> out;
    for (Int a = 1; a <= top; ++a) {
        const std::uint64_t inner = a - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
            std::vector<Int> s{0};
            Int g = a;
            for (std::uint64_t i = 0; i < inner; ++i)
                if (mask >> i & 1u) {
                    s.push_back(static_cast<Int>(i + 1));
                    g = std::gcd(g, static_cast<Int>(i + 1));
                }
            s.push_back(a);
            if (g == 1)
                out.push_back(std::move(s));
        }
    }
    return out;
}

/// Sum over intervals jw + (h - j)[0, ell] of hA_{ell,w}, merging overlaps:
/// an independent count of |h([0,ell] u {w})|.
inline auto interval_family_count(Int ell, Int w, Int h) -> Int
{
    std::set<Int> s;
    for (Int j = 0; j <= h; ++j)
        for (Int x = j * w; x <= j * w + (h - j) * ell; ++x)
            s.insert(x);
    return static_cast<Int>(s.size());
}

}
