#include <sumsetlab/error.hpp>
#include <sumsetlab/tau.hpp>

#include <algorithm>

namespace sumsetlab {

TauTuple::TauTuple(std::vector<Int> ranks) : ranks_(std::move(ranks))
{
    if (ranks_.empty())
        throw InputError("tau tuple must be nonempty");
    if (tau(ranks_).ranks() != ranks_)
        throw InputError("not a tau tuple: ranks must be dense, starting at 1");
}

auto tau(std::span<const Int> u) -> TauTuple
{
    if (u.empty())
        throw InputError("tau of an empty tuple");
    std::vector<Int> distinct(u.begin(), u.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Int> ranks;
    ranks.reserve(u.size());
    for (auto x : u)
        ranks.push_back(std::lower_bound(distinct.begin(), distinct.end(), x) - distinct.begin() + 1);
    return TauTuple(std::move(ranks), TauTuple::Trusted{});
}

auto size_profile(std::span<const IntSet> sets, std::size_t h, Budget budget) -> std::vector<Int>
{
    std::vector<Int> out;
    out.reserve(sets.size());
    for (const auto & s : sets)
        out.push_back(static_cast<Int>(h_fold(s, h, budget).size()));
    return out;
}

}
