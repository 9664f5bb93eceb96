#pragma once

#include <sumsetlab/families.hpp>
#include <sumsetlab/intset.hpp>
#include <sumsetlab/search.hpp>
#include <sumsetlab/semigroup.hpp>

#include <json.hpp>

#include <variant>

namespace sumsetlab::cli {

using nlohmann::json;

auto to_json(const IntSet & s) -> json;
auto to_json(const Rational & r) -> json;
auto to_json(const AffineMap & f) -> json;
auto to_json(const StabilizationProfile & p) -> json;
auto to_json(const GeometricReport & r) -> json;
auto to_json(const SearchResult & r) -> json;
auto to_json(const SizeTable & t) -> json;

/// Either a tau-pattern query or a two-set sign query; constraints carrying
/// "rel" (or "type": "sign") select the latter.
using AnyQuery = std::variant<PatternQuery, SignPatternQuery>;

auto parse_query(const json & doc) -> AnyQuery;

}
