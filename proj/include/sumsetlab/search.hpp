#pragma once

#include <sumsetlab/intset.hpp>
#include <sumsetlab/sumset.hpp>
#include <sumsetlab/tau.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sumsetlab {

/// Where witnesses are looked for: subsets of [0, bound_n] containing 0 with
/// at least two elements, optionally of a fixed size and/or a common maximum.
struct SearchSpace {
    Int bound_n = 8;
    std::optional<std::size_t> k;
    bool equal_max = false;
    std::uint64_t node_cap = 100'000'000;
};

struct TauConstraint {
    std::size_t h;
    TauTuple target;
};

struct TailConstraint {
    TauTuple target;
    std::size_t h_check_max;
};

struct PatternQuery {
    std::size_t n = 1;
    std::vector<TauConstraint> constraints; // strictly increasing h
    std::optional<TailConstraint> tail;
    SearchSpace space;
};

enum class Relation { less, equal, greater };

auto relation_symbol(Relation r) -> std::string;
auto parse_relation(const std::string & s) -> Relation;

struct SignConstraint {
    std::size_t h;
    Relation rel; // |hA| rel |hB|
};

struct SignPatternQuery {
    std::vector<SignConstraint> constraints; // strictly increasing h
    SearchSpace space;
};

enum class SearchStatus { found, exhausted, capped };

auto status_name(SearchStatus s) -> std::string;

struct CheckRecord {
    std::size_t h;
    std::vector<Int> sizes;
    std::string expected; // tau tuple or relation, rendered
    bool ok;
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<IntSet> witness;
    std::uint64_t nodes = 0;
    std::vector<IntSet> frontier; // partial tuple under exploration when the cap hit
    std::vector<CheckRecord> checks;
    /// For tail queries: the sign pattern was certified for every h past the
    /// last explicit constraint, not just up to h_check_max.
    bool tail_certified = false;
};

struct SearchLimits {
    Int max_bound_n = 24;
    std::uint64_t max_profile_cells = std::uint64_t{1} << 26;
    std::size_t max_sets = 8;
};

struct SearchOptions {
    unsigned workers = 0; // 0 picks hardware concurrency
    SearchLimits limits;
    Budget budget;
};

/// Lexicographically least tuple (sets ordered by their characteristic mask
/// sum 2^x) whose size profiles have the requested tau patterns.
auto search_tau(const PatternQuery & query, const SearchOptions & options = {}) -> SearchResult;

/// Lexicographically least pair (A, B) meeting every (h, relation).
auto search_sign_pattern(const SignPatternQuery & query, const SearchOptions & options = {}) -> SearchResult;

/// Recomputes every constraint with h_fold. For tail queries the tail must
/// hold through h_check_max and be certified beyond it.
auto verify_witness(std::span<const IntSet> sets, const PatternQuery & query, Budget budget = {}) -> bool;
auto verify_witness(std::span<const IntSet> sets, const SignPatternQuery & query, Budget budget = {}) -> bool;

}
