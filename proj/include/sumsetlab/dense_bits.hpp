#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumsetlab {

/// Fixed-capacity bit array over [0, capacity). The workhorse for sumset
/// kernels: hA + A is an OR of shifted copies of hA, one per element of A.
class DenseBits {
public:
    DenseBits() = default;
    explicit DenseBits(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    auto capacity() const noexcept -> std::size_t { return capacity_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    auto test(std::size_t i) const -> bool
    {
        return i < capacity_ && ((words_[i >> 6] >> (i & 63)) & 1u);
    }

    void clear_all()
    {
        for (auto & w : words_)
            w = 0;
    }

    /// this |= src << shift, restricted to the first src_words words of src.
    /// Bits pushed past capacity are dropped; callers size the array so that
    /// never happens.
    void or_shifted(const DenseBits & src, std::size_t shift, std::size_t src_words)
    {
        const std::size_t word_shift = shift >> 6;
        const unsigned bit_shift = static_cast<unsigned>(shift & 63);
        const std::size_t n = words_.size();
        if (bit_shift == 0) {
            for (std::size_t i = 0; i < src_words && i + word_shift < n; ++i)
                words_[i + word_shift] |= src.words_[i];
        }
        else {
            for (std::size_t i = 0; i < src_words && i + word_shift < n; ++i) {
                const std::uint64_t w = src.words_[i];
                words_[i + word_shift] |= w << bit_shift;
                if (i + word_shift + 1 < n)
                    words_[i + word_shift + 1] |= w >> (64 - bit_shift);
            }
        }
    }

    auto count(std::size_t word_limit) const -> std::size_t
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < word_limit && i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i]));
        return c;
    }

    auto count() const -> std::size_t { return count(words_.size()); }

    auto word_count() const noexcept -> std::size_t { return words_.size(); }

    /// Calls f(i) for every set bit in increasing order.
    template <typename F>
    void for_each_set(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend void swap(DenseBits & a, DenseBits & b) noexcept
    {
        std::swap(a.capacity_, b.capacity_);
        a.words_.swap(b.words_);
    }

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}
