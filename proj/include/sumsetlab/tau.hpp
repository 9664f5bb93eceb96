#pragma once

#include <sumsetlab/intset.hpp>
#include <sumsetlab/sumset.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace sumsetlab {

/// Dense ranks: the values present are exactly 1..d for some d <= n.
class TauTuple {
public:
    /// Throws InputError unless ranks is already a fixed point of tau().
    explicit TauTuple(std::vector<Int> ranks);

    auto ranks() const noexcept -> const std::vector<Int> & { return ranks_; }
    auto size() const noexcept -> std::size_t { return ranks_.size(); }
    auto operator[](std::size_t i) const -> Int { return ranks_[i]; }

    friend auto operator==(const TauTuple &, const TauTuple &) -> bool = default;

private:
    struct Trusted {};
    TauTuple(std::vector<Int> ranks, Trusted) : ranks_(std::move(ranks)) {}
    friend auto tau(std::span<const Int> u) -> TauTuple;

    std::vector<Int> ranks_;
};

/// Replace every entry by the 1-based rank of its value among the distinct
/// values of u. Ties share a rank.
auto tau(std::span<const Int> u) -> TauTuple;

/// (|hA_1|, ..., |hA_n|).
auto size_profile(std::span<const IntSet> sets, std::size_t h, Budget budget = {}) -> std::vector<Int>;

}
