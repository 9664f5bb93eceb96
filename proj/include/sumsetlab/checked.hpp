#pragma once

#include <sumsetlab/error.hpp>

#include <cstdint>
#include <limits>

namespace sumsetlab {

inline auto checked_add(std::int64_t x, std::int64_t y) -> std::int64_t
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw BudgetError("range overflow");
    return r;
}

inline auto checked_sub(std::int64_t x, std::int64_t y) -> std::int64_t
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw BudgetError("range overflow");
    return r;
}

inline auto checked_mul(std::int64_t x, std::int64_t y) -> std::int64_t
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw BudgetError("range overflow");
    return r;
}

inline auto narrow_checked(__int128 x) -> std::int64_t
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw BudgetError("range overflow");
    return static_cast<std::int64_t>(x);
}

}
