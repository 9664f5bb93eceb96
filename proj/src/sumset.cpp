#include <sumsetlab/checked.hpp>
#include <sumsetlab/error.hpp>
#include <sumsetlab/sumset.hpp>

#include <string>

namespace sumsetlab {

namespace {

auto span_of(const IntSet & a) -> std::uint64_t
{
    return static_cast<std::uint64_t>(checked_sub(a.max(), a.min()));
}

void check_budget(std::uint64_t bits, Budget budget)
{
    if (bits > budget.bits)
        throw BudgetError("budget exceeded: " + std::to_string(bits) + " bits requested, cap is "
            + std::to_string(budget.bits));
}

auto bits_for(std::uint64_t span, std::size_t h, Budget budget) -> std::uint64_t
{
    std::uint64_t r;
    if (__builtin_mul_overflow(span, static_cast<std::uint64_t>(h), &r) || r == ~std::uint64_t{0})
        throw BudgetError("budget exceeded: range overflow");
    check_budget(r + 1, budget);
    return r + 1;
}

auto collect(const DenseBits & bits, Int offset) -> IntSet
{
    std::vector<Int> out;
    bits.for_each_set([&](std::size_t i) { out.push_back(offset + static_cast<Int>(i)); });
    return IntSet(out);
}

}

auto sumset(const IntSet & a, const IntSet & b, Budget budget) -> IntSet
{
    const Int offset = checked_add(a.min(), b.min());
    checked_add(a.max(), b.max());
    const auto sa = span_of(a), sb = span_of(b);
    const std::uint64_t total = sa + sb + 1;
    check_budget(total, budget);

    const IntSet & small = a.size() <= b.size() ? a : b;
    const IntSet & large = a.size() <= b.size() ? b : a;
    DenseBits base(static_cast<std::size_t>(span_of(large) + 1));
    for (auto x : large)
        base.set(static_cast<std::size_t>(x - large.min()));
    DenseBits out(static_cast<std::size_t>(total));
    for (auto x : small)
        out.or_shifted(base, static_cast<std::size_t>(x - small.min()), base.word_count());
    return collect(out, offset);
}

auto h_fold(const IntSet & a, std::size_t h, Budget budget) -> IntSet
{
    if (h == 0)
        throw InputError("h must be at least 1");
    SumsetLadder ladder(a, h, budget);
    while (ladder.h() < h)
        ladder.advance();
    return ladder.set();
}

auto size_sequence(const IntSet & a, std::size_t h_max, Budget budget) -> SizeSequence
{
    if (h_max == 0)
        throw InputError("h_max must be at least 1");
    SumsetLadder ladder(a, h_max, budget);
    SizeSequence seq;
    seq.sizes.reserve(h_max);
    seq.sizes.push_back(ladder.size());
    while (ladder.h() < h_max) {
        ladder.advance();
        seq.sizes.push_back(ladder.size());
    }
    if (h_max == 1) {
        seq.tail_start = 1;
        seq.tail_difference = 0;
        return seq;
    }
    const auto & s = seq.sizes;
    const auto diff = static_cast<std::int64_t>(s[h_max - 1]) - static_cast<std::int64_t>(s[h_max - 2]);
    std::size_t start = h_max - 1; // 1-based index of the first term of the tail
    while (start > 1 && static_cast<std::int64_t>(s[start - 1]) - static_cast<std::int64_t>(s[start - 2]) == diff)
        --start;
    seq.tail_start = start;
    seq.tail_difference = diff;
    return seq;
}

SumsetLadder::SumsetLadder(const IntSet & base, std::size_t h_max, Budget budget) :
    min_(base.min()), span_(span_of(base)), h_max_(h_max)
{
    if (h_max == 0)
        throw InputError("h must be at least 1");
    checked_mul(min_, static_cast<Int>(h_max));
    const auto bits = bits_for(span_, h_max, budget);
    current_ = DenseBits(static_cast<std::size_t>(bits));
    if (h_max > 1)
        scratch_ = DenseBits(static_cast<std::size_t>(bits));
    shifts_.reserve(base.size());
    for (auto x : base) {
        shifts_.push_back(static_cast<std::size_t>(x - min_));
        current_.set(shifts_.back());
    }
}

auto SumsetLadder::used_words() const -> std::size_t
{
    return static_cast<std::size_t>((span_ * h_ + 1 + 63) / 64);
}

void SumsetLadder::advance()
{
    if (h_ >= h_max_)
        throw InputError("ladder already at h_max");
    const auto words = used_words();
    scratch_.clear_all();
    for (auto s : shifts_)
        scratch_.or_shifted(current_, s, words);
    swap(current_, scratch_);
    ++h_;
}

auto SumsetLadder::offset() const -> Int
{
    return min_ * static_cast<Int>(h_);
}

auto SumsetLadder::contains(Int x) const -> bool
{
    const __int128 rel = static_cast<__int128>(x) - offset();
    if (rel < 0 || rel > static_cast<__int128>(span_ * h_))
        return false;
    return current_.test(static_cast<std::size_t>(rel));
}

auto SumsetLadder::set() const -> IntSet
{
    return collect(current_, offset());
}

}
