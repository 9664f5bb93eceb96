#pragma once

// Published table of |hA| for A = [0,4] u {w}: rows w, columns h = 2..9.

#include <array>
#include <cstdint>

namespace published {

inline constexpr std::array<std::int64_t, 26> ws{
    5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 30, 35, 40, 45, 50};

inline constexpr std::array<std::int64_t, 8> hs{2, 3, 4, 5, 6, 7, 8, 9};

inline constexpr std::array<std::array<std::int64_t, 8>, 26> sizes{{
    {11, 16, 21, 26, 31, 36, 41, 46},
    {12, 18, 24, 30, 36, 42, 48, 54},
    {13, 20, 27, 34, 41, 48, 55, 62},
    {14, 22, 30, 38, 46, 54, 62, 70},
    {15, 24, 33, 42, 51, 60, 69, 78},
    {15, 25, 35, 45, 55, 65, 75, 85},
    {15, 26, 37, 48, 59, 70, 81, 92},
    {15, 27, 39, 51, 63, 75, 87, 99},
    {15, 28, 41, 54, 67, 80, 93, 106},
    {15, 28, 42, 56, 70, 84, 98, 112},
    {15, 28, 43, 58, 73, 88, 103, 118},
    {15, 28, 44, 60, 76, 92, 108, 124},
    {15, 28, 45, 62, 79, 96, 113, 130},
    {15, 28, 45, 63, 81, 99, 117, 135},
    {15, 28, 45, 64, 83, 102, 121, 140},
    {15, 28, 45, 65, 85, 105, 125, 145},
    {15, 28, 45, 66, 87, 108, 129, 150},
    {15, 28, 45, 66, 88, 110, 132, 154},
    {15, 28, 45, 66, 89, 112, 135, 158},
    {15, 28, 45, 66, 90, 114, 138, 162},
    {15, 28, 45, 66, 91, 116, 141, 166},
    {15, 28, 45, 66, 91, 120, 150, 180},
    {15, 28, 45, 66, 91, 120, 153, 188},
    {15, 28, 45, 66, 91, 120, 153, 190},
    {15, 28, 45, 66, 91, 120, 153, 190},
    {15, 28, 45, 66, 91, 120, 153, 190},
}};

}
