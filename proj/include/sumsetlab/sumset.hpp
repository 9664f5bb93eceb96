#pragma once

#include <sumsetlab/dense_bits.hpp>
#include <sumsetlab/intset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sumsetlab {

/// Cap on the dense bit range a single sumset computation may allocate.
struct Budget {
    static constexpr std::uint64_t default_bits = std::uint64_t{1} << 26;
    std::uint64_t bits = default_bits;
};

/// {a + b : a in A, b in B}.
auto sumset(const IntSet & a, const IntSet & b, Budget budget = {}) -> IntSet;

/// hA for h >= 1.
auto h_fold(const IntSet & a, std::size_t h, Budget budget = {}) -> IntSet;

/// |hA| for h = 1..h_max, plus a description of the observed linear tail.
struct SizeSequence {
    std::vector<std::uint64_t> sizes; // sizes[i] = |(i+1)A|

    /// Smallest h such that sizes from h to h_max form an arithmetic
    /// progression (trivially h_max - 1 or h_max for short prefixes).
    std::size_t tail_start = 1;
    /// Common difference of that progression; 0 when h_max == 1.
    std::int64_t tail_difference = 0;

    auto at(std::size_t h) const -> std::uint64_t { return sizes.at(h - 1); }
    auto h_max() const noexcept -> std::size_t { return sizes.size(); }
};

auto size_sequence(const IntSet & a, std::size_t h_max, Budget budget = {}) -> SizeSequence;

/// Walks 1A, 2A, 3A, ... in place. The bit range for h_max folds is
/// reserved (and budget-checked) up front.
class SumsetLadder {
public:
    SumsetLadder(const IntSet & base, std::size_t h_max, Budget budget = {});

    auto h() const noexcept -> std::size_t { return h_; }
    auto h_max() const noexcept -> std::size_t { return h_max_; }

    /// Moves from hA to (h+1)A. Throws once h_max has been reached.
    void advance();

    auto size() const -> std::uint64_t { return current_.count(used_words()); }
    auto contains(Int x) const -> bool;
    auto set() const -> IntSet;

    /// Elements of hA shifted so that h*min(A) sits at bit 0.
    auto bits() const noexcept -> const DenseBits & { return current_; }
    auto offset() const -> Int;

private:
    auto used_words() const -> std::size_t;

    std::vector<std::size_t> shifts_;
    Int min_;
    std::uint64_t span_;
    std::size_t h_ = 1;
    std::size_t h_max_;
    DenseBits current_;
    DenseBits scratch_;
};

}
