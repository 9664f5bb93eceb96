#include <sumsetlab/checked.hpp>
#include <sumsetlab/error.hpp>
#include <sumsetlab/semigroup.hpp>

#include <algorithm>
#include <numeric>

namespace sumsetlab {

namespace {

constexpr std::size_t max_sieve_length = std::size_t{1} << 28;

// Membership flags for S(A) on [0, n), extended in doubling steps until a
// run of max(A) consecutive members certifies that no later gap exists.
auto sieve(const IntSet & generators) -> std::vector<char>
{
    if (generators.min() < 0)
        throw InputError("semigroup generators must be nonnegative");
    std::vector<std::size_t> steps;
    Int g = 0;
    for (auto x : generators) {
        if (x > 0) {
            steps.push_back(static_cast<std::size_t>(x));
            g = std::gcd(g, x);
        }
    }
    if (g != 1)
        throw InputError("infinite gap set");

    const auto top = steps.back();
    std::vector<char> member;
    member.reserve(2 * top + 2);
    member.push_back(1);
    std::size_t run = 1;
    std::size_t target = 2 * top + 2;
    while (run < top) {
        if (member.size() == target) {
            if (target >= max_sieve_length)
                throw BudgetError("budget exceeded: semigroup sieve");
            target *= 2;
            member.reserve(target);
        }
        const std::size_t n = member.size();
        char in = 0;
        for (auto s : steps) {
            if (s > n)
                break;
            if (member[n - s]) {
                in = 1;
                break;
            }
        }
        member.push_back(in);
        run = in ? run + 1 : 0;
    }
    // Trim the certifying run; everything past the last gap is a member.
    while (member.size() > 1 && member[member.size() - 1] && member[member.size() - 2])
        member.pop_back();
    return member;
}

void require_stabilizable(const IntSet & a)
{
    if (a.size() < 2)
        throw InputError("set must have at least 2 elements");
    if (! is_normalized(a))
        throw InputError("set must be normalized (min 0, gcd 1)");
}

// hA equals fringe_C u [C, ha-D] u (ha - fringe_D), with a nonempty middle interval.
auto identity_holds(const StabilizationProfile & p, const SumsetLadder & ladder) -> bool
{
    const Int h = static_cast<Int>(ladder.h());
    const Int top = p.a * h;
    const Int lo = p.C, hi = top - p.D;
    if (lo > hi)
        return false;
    const auto expected = static_cast<std::uint64_t>(p.fringe_C.size() + p.fringe_D.size())
        + static_cast<std::uint64_t>(hi - lo + 1);
    if (ladder.size() != expected)
        return false;
    for (auto x : p.fringe_C)
        if (! ladder.contains(x))
            return false;
    for (auto x : p.fringe_D)
        if (! ladder.contains(top - x))
            return false;
    for (Int x = lo; x <= hi; ++x)
        if (! ladder.contains(x))
            return false;
    return true;
}

}

auto semigroup_profile(const IntSet & generators) -> SemigroupProfile
{
    auto member = sieve(generators);
    SemigroupProfile p{generators, -1, 0, {}};
    for (std::size_t n = 0; n < member.size(); ++n)
        if (! member[n])
            p.gaps.push_back(static_cast<Int>(n));
    p.genus = static_cast<Int>(p.gaps.size());
    if (! p.gaps.empty())
        p.frobenius = p.gaps.back();
    return p;
}

auto frobenius(const IntSet & generators) -> Int
{
    return semigroup_profile(generators).frobenius;
}

auto genus(const IntSet & generators) -> Int
{
    return semigroup_profile(generators).genus;
}

auto semigroup_members_upto(const IntSet & generators, Int limit) -> std::vector<Int>
{
    std::vector<Int> out;
    if (limit < 0)
        return out;
    auto member = sieve(generators);
    for (Int n = 0; n <= limit; ++n)
        if (static_cast<std::size_t>(n) >= member.size() || member[static_cast<std::size_t>(n)])
            out.push_back(n);
    return out;
}

auto StabilizationProfile::reconstruct(std::size_t h) const -> std::vector<Int>
{
    const Int top = checked_mul(a, static_cast<Int>(h));
    std::vector<Int> out(fringe_C.begin(), fringe_C.end());
    for (Int x = C; x <= top - D; ++x)
        out.push_back(x);
    for (auto it = fringe_D.rbegin(); it != fringe_D.rend(); ++it)
        out.push_back(top - *it);
    return out;
}

auto stabilization(const IntSet & a, std::size_t window, Budget budget) -> StabilizationProfile
{
    require_stabilizable(a);
    const auto left = semigroup_profile(a);
    const auto reflected = reflect(a);
    const auto right = semigroup_profile(reflected);

    StabilizationProfile p;
    p.a = a.max();
    p.frobenius_left = left.frobenius;
    p.frobenius_right = right.frobenius;
    p.genus_left = left.genus;
    p.genus_right = right.genus;
    p.C = left.frobenius + 1;
    p.D = right.frobenius + 1;
    p.fringe_C = semigroup_members_upto(a, p.C - 2);
    p.fringe_D = semigroup_members_upto(reflected, p.D - 2);

    std::size_t limit = gsw_bound(a) + window;
    for (;;) {
        SumsetLadder ladder(a, limit, budget);
        std::vector<char> holds;
        holds.reserve(limit);
        for (;;) {
            holds.push_back(identity_holds(p, ladder) ? 1 : 0);
            if (ladder.h() == limit)
                break;
            ladder.advance();
        }
        if (! holds.back())
            throw MismatchError("decomposition does not hold at h = " + std::to_string(limit) + " for " + a.to_string());
        std::size_t first = limit;
        while (first > 1 && holds[first - 2])
            --first;
        if (first + window <= limit) {
            p.h0 = first;
            p.verified_through = limit;
            return p;
        }
        limit = first + window;
    }
}

auto eventual_size(const IntSet & a, std::size_t h) -> Int
{
    require_stabilizable(a);
    const Int top = checked_mul(a.max(), static_cast<Int>(h));
    return top + 1 - genus(a) - genus(reflect(a));
}

auto gsw_bound(const IntSet & a) -> std::size_t
{
    const Int b = a.max() - static_cast<Int>(a.size()) + 2;
    return static_cast<std::size_t>(std::max<Int>(1, b));
}

auto check_gsw(const IntSet & a, Budget budget) -> GswCheck
{
    const auto p = stabilization(a, 10, budget);
    const auto bound = gsw_bound(a);
    return {p.h0, bound, p.h0 <= bound};
}

auto check_lev(const IntSet & a, std::size_t h_max, Budget budget) -> std::vector<LevRow>
{
    require_stabilizable(a);
    const auto seq = size_sequence(a, h_max, budget);
    const Int k = static_cast<Int>(a.size());
    std::vector<LevRow> rows;
    for (std::size_t h = 2; h <= h_max; ++h) {
        const Int inc = static_cast<Int>(seq.at(h)) - static_cast<Int>(seq.at(h - 1));
        const Int bound = std::min<Int>(a.max(), static_cast<Int>(h) * (k - 2) + 1);
        rows.push_back({h, inc, bound, inc >= bound});
    }
    return rows;
}

auto interval_characterization(const IntSet & a, std::size_t h_max, Budget budget) -> bool
{
    if (h_max < 3)
        throw InputError("h_max must be at least 3");
    if (! is_normalized(a))
        throw InputError("set must be normalized (min 0, gcd 1)");
    const auto seq = size_sequence(a, h_max, budget);
    for (std::size_t h = 2; h < h_max; ++h)
        if (2 * seq.at(h) != seq.at(h - 1) + seq.at(h + 1))
            return false;
    return true;
}

}
