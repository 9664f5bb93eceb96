#include <sumsetlab/checked.hpp>
#include <sumsetlab/error.hpp>
#include <sumsetlab/families.hpp>
#include <sumsetlab/semigroup.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace sumsetlab {

namespace {

auto floor_div(__int128 n, __int128 d) -> __int128
{
    auto q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0)))
        --q;
    return q;
}

auto hh(std::size_t h) -> __int128 { return static_cast<__int128>(h); }

auto big_branch_value(Int ell, Int w, std::size_t h, __int128 j) -> Int
{
    const __int128 rest = hh(h) - j;
    return narrow_checked(j * w + 1 + rest * (2 + ell * (rest + 1)) / 2);
}

// Eventual |hA| = slope * h + intercept, valid from `from` onward.
struct Line {
    Int slope;
    Int intercept;
    std::size_t from;
};

auto eventual_line(const IntSet & s) -> Line
{
    if (s.size() == 1)
        return {0, 1, 1};
    auto n = normalize(s).set;
    return {n.max(), 1 - genus(n) - genus(reflect(n)), gsw_bound(n)};
}

}

FamilyParams::FamilyParams(Int ell, Int w) : ell_(ell), w_(w)
{
    if (ell < 1)
        throw InputError("ell must be at least 1");
    if (w < ell + 1)
        throw InputError("w must exceed ell");
}

auto FamilyParams::set() const -> IntSet
{
    return IntSet::interval(0, ell_).unite(IntSet{w_});
}

auto j0(std::size_t h, const FamilyParams & p) -> Int
{
    const auto q = floor_div((hh(h) + 1) * p.ell() - p.w(), p.ell());
    return narrow_checked(std::max<__int128>(0, q));
}

auto in_small_branch(std::size_t h, const FamilyParams & p) -> bool
{
    return hh(h) * p.ell() <= static_cast<__int128>(p.w()) - 1;
}

auto interval_family_big_branch(const FamilyParams & p, std::size_t h) -> Int
{
    if (in_small_branch(h, p))
        throw InputError("large-h formula requires h >= w/ell");
    return big_branch_value(p.ell(), p.w(), h, j0(h, p));
}

auto interval_family_size(const FamilyParams & p, std::size_t h) -> Int
{
    if (h == 0)
        throw InputError("h must be at least 1");
    if (in_small_branch(h, p))
        return narrow_checked((hh(h) + 1) * (p.ell() * hh(h) + 2) / 2);
    return interval_family_big_branch(p, h);
}

auto a1w_size(Int w, std::size_t h) -> Int
{
    if (w < 2)
        throw InputError("w must be at least 2");
    if (h == 0)
        throw InputError("h must be at least 1");
    if (hh(h) <= w - 1)
        return narrow_checked((hh(h) + 1) * (hh(h) + 2) / 2);
    return narrow_checked(hh(h) * w + 1 - static_cast<__int128>(w - 1) * (w - 2) / 2);
}

auto sylvester_genus(Int v, Int w) -> Int
{
    if (v < 1 || w < 1)
        throw InputError("generators must be positive");
    if (std::gcd(v, w) != 1)
        throw InputError("generators must be coprime");
    return narrow_checked(static_cast<__int128>(v - 1) * (w - 1) / 2);
}

auto subset_upper_bound_check(const IntSet & a_prime, Int ell, Int w, std::size_t h, Budget budget) -> BoundCheck
{
    FamilyParams p(ell, w);
    if (a_prime.min() < 0 || a_prime.max() > ell)
        throw InputError("A' must lie inside [0, ell]");
    if (in_small_branch(h, p))
        throw InputError("subset bound requires h >= w/ell");
    const auto observed = static_cast<Int>(h_fold(a_prime.unite(IntSet{w}), h, budget).size());
    const auto bound = interval_family_big_branch(p, h);
    return {observed, bound, observed <= bound};
}

auto bigsplit_pair(Int k, Int h1) -> BigSplitPair
{
    if (k < 3)
        throw InputError("k >= 3 required");
    if (h1 < 1)
        throw InputError("h1 >= 1 required");
    const Int ell = k - 2;
    const Int w = checked_mul(ell, checked_add(h1, 1));
    const auto base = IntSet::interval(0, ell);
    return {base.unite(IntSet{w}), base.unite(IntSet{checked_add(w, 1)}), ell, w};
}

auto geometric_pair(const GeometricParams & p) -> GeometricPair
{
    if (! (2 <= p.h2))
        throw InputError("2 <= h2 violated");
    if (! (p.h2 < p.g))
        throw InputError("h2 < g violated");
    if (p.ell < 1)
        throw InputError("ell >= 1 violated");
    std::vector<Int> powers{1};
    Int power = 1;
    bool overflow = false;
    for (Int i = 1; i <= p.ell; ++i) {
        if (__builtin_mul_overflow(power, p.g, &power)) {
            overflow = true;
            break;
        }
        if (i < p.ell)
            powers.push_back(power);
    }
    if (! overflow && ! (p.g < power))
        throw InputError("g < g^ell violated");
    if (overflow || ! (power < p.b))
        throw InputError("g^ell < b violated");
    if (! (p.b < p.w))
        throw InputError("b < w violated");
    if (! (static_cast<__int128>(p.h2) * p.ell < p.w))
        throw InputError("h2*ell < w violated");
    powers.push_back(p.b);
    return {IntSet::interval(0, p.ell).unite(IntSet{p.w}), IntSet(powers)};
}

auto eventual_dominance(const IntSet & a, const IntSet & b, Budget budget) -> std::optional<std::size_t>
{
    const auto la = eventual_line(a), lb = eventual_line(b);
    const Int ds = la.slope - lb.slope, di = la.intercept - lb.intercept;
    if (ds < 0 || (ds == 0 && di <= 0))
        return std::nullopt;
    std::size_t start = std::max(la.from, lb.from);
    if (ds > 0) {
        // (ds) h + di > 0  <=>  h > -di / ds
        const auto crossing = floor_div(-static_cast<__int128>(di), ds) + 1;
        if (crossing > static_cast<__int128>(start))
            start = static_cast<std::size_t>(crossing);
    }
    const auto sa = size_sequence(a, start, budget);
    const auto sb = size_sequence(b, start, budget);
    const auto law_a = la.slope * static_cast<Int>(start) + la.intercept;
    const auto law_b = lb.slope * static_cast<Int>(start) + lb.intercept;
    if (static_cast<Int>(sa.at(start)) != law_a || static_cast<Int>(sb.at(start)) != law_b)
        throw MismatchError("eventual size law disagrees with enumeration");
    std::size_t h3 = 1;
    for (std::size_t h = start; h >= 1; --h) {
        if (sa.at(h) <= sb.at(h)) {
            h3 = h + 1;
            break;
        }
    }
    return h3;
}

auto verify_geometric(const GeometricParams & p, std::size_t window, Budget budget) -> GeometricReport
{
    auto pair = geometric_pair(p);
    const auto h2 = static_cast<std::size_t>(p.h2);
    const auto sa = size_sequence(pair.a, h2, budget);
    const auto sg = size_sequence(pair.g, h2, budget);

    GeometricReport r{pair, 0, 0, 0, 0, {}, false, false, std::nullopt, 0, false, false, false};
    r.size_a_1 = static_cast<Int>(sa.at(1));
    r.size_g_1 = static_cast<Int>(sg.at(1));
    r.size_a_h2 = static_cast<Int>(sa.at(h2));
    r.size_g_h2 = static_cast<Int>(sg.at(h2));
    for (std::size_t j = 2; j <= h2; ++j) {
        const Int interval_layer = static_cast<Int>(j) * p.ell + 1;
        const Int bh = bh_layer_size(p.ell, static_cast<Int>(j));
        r.layers.push_back({j, interval_layer, bh, interval_layer < bh});
    }
    std::vector<Int> g0(pair.g.begin(), pair.g.end() - 1);
    r.g0_is_bh = is_bh_set(IntSet(g0), h2);
    r.g_is_bh = is_bh_set(pair.g, h2);
    r.inequality_1 = r.size_a_1 > r.size_g_1;
    r.inequality_2 = r.size_a_h2 < r.size_g_h2;

    r.h3 = eventual_dominance(pair.a, pair.g, budget);
    if (r.h3) {
        const auto top = *r.h3 + window;
        const auto wa = size_sequence(pair.a, top, budget);
        const auto wg = size_sequence(pair.g, top, budget);
        bool all = true;
        for (std::size_t h = *r.h3; h <= top; ++h)
            all = all && wa.at(h) > wg.at(h);
        r.window_checked = all ? window : 0;
        r.inequality_3 = all && *r.h3 > h2;
    }
    return r;
}

auto is_bh_set(const IntSet & s, std::size_t h, BhLimits limits) -> bool
{
    if (h == 0)
        throw InputError("h must be at least 1");
    const auto k = static_cast<Int>(s.size());
    __int128 total = 0;
    for (std::size_t j = 1; j <= h; ++j) {
        total += bh_layer_size(k, static_cast<Int>(j));
        if (total > static_cast<__int128>(limits.max_multisets))
            throw BudgetError("budget exceeded: too many multisets to enumerate");
    }

    const auto & e = s.elements();
    std::unordered_set<__int128> seen;
    std::vector<std::size_t> idx;
    for (std::size_t j = 1; j <= h; ++j) {
        seen.clear();
        idx.assign(j, 0);
        for (;;) {
            __int128 sum = 0;
            for (auto i : idx)
                sum += e[i];
            if (! seen.insert(sum).second)
                return false;
            // next non-decreasing index tuple
            std::size_t pos = j;
            while (pos > 0 && idx[pos - 1] == e.size() - 1)
                --pos;
            if (pos == 0)
                break;
            const auto v = idx[pos - 1] + 1;
            for (std::size_t q = pos - 1; q < j; ++q)
                idx[q] = v;
        }
    }
    return true;
}

auto bh_layer_size(Int ell, Int j) -> Int
{
    if (ell < 1 || j < 0)
        throw InputError("bh_layer_size requires ell >= 1 and j >= 0");
    __int128 r = 1;
    for (Int i = 1; i <= j; ++i) {
        r = r * (ell + i - 1) / i;
        if (r > std::numeric_limits<Int>::max())
            throw BudgetError("range overflow");
    }
    return static_cast<Int>(r);
}

auto size_table(Int ell, const std::vector<Int> & ws, const std::vector<std::size_t> & hs, Budget budget) -> SizeTable
{
    if (hs.empty() || ws.empty())
        throw InputError("table needs at least one w and one h");
    SizeTable t{ell, ws, hs, {}};
    std::vector<FamilyParams> params;
    for (auto w : ws)
        params.emplace_back(ell, w);
    const auto h_top = *std::max_element(hs.begin(), hs.end());
    if (*std::min_element(hs.begin(), hs.end()) == 0)
        throw InputError("h must be at least 1");
    for (const auto & p : params) {
        const auto seq = size_sequence(p.set(), h_top, budget);
        std::vector<Int> row;
        row.reserve(hs.size());
        for (auto h : hs) {
            const auto formula = interval_family_size(p, h);
            const auto counted = static_cast<Int>(seq.at(h));
            if (formula != counted)
                throw MismatchError("formula/enumeration mismatch at w=" + std::to_string(p.w()) + ", h="
                    + std::to_string(h) + ": " + std::to_string(formula) + " vs " + std::to_string(counted));
            row.push_back(counted);
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

}
