#pragma once

#include <sumsetlab/intset.hpp>

#include <string_view>
#include <vector>

namespace sumsetlab {

/// Comma-separated integers and inclusive ranges: "5..25,30,35".
auto parse_int_list(std::string_view text) -> std::vector<Int>;

/// "{0,2,7}" or the JSON array "[0,2,7]"; ranges such as "{0..4,9}" expand.
auto parse_set(std::string_view text) -> IntSet;

/// Like parse_set but keeps order and repeats: "(-2,13,11)", "[1,2]" or bare "1,2".
auto parse_tuple(std::string_view text) -> std::vector<Int>;

}
