#pragma once

#include <sumsetlab/intset.hpp>
#include <sumsetlab/sumset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumsetlab {

/// Gaps of the numerical semigroup generated by a set of nonnegative
/// integers with gcd 1.
struct SemigroupProfile {
    IntSet generators;
    Int frobenius = -1;    // largest gap, -1 when there is none
    Int genus = 0;         // number of gaps
    std::vector<Int> gaps; // increasing
};

/// Errors with "infinite gap set" when the generators have gcd != 1, and
/// rejects negative generators.
auto semigroup_profile(const IntSet & generators) -> SemigroupProfile;
auto frobenius(const IntSet & generators) -> Int;
auto genus(const IntSet & generators) -> Int;

/// Members of S(A) in [0, limit]; empty when limit < 0.
auto semigroup_members_upto(const IntSet & generators, Int limit) -> std::vector<Int>;

/// Eventual decomposition hA = C-fringe u [C, ha - D] u (ha - D-fringe).
struct StabilizationProfile {
    Int a = 0;
    Int C = 0;
    Int D = 0;
    std::vector<Int> fringe_C; // S(A) below C - 1
    std::vector<Int> fringe_D; // S(a - A) below D - 1
    std::size_t h0 = 1;
    Int genus_left = 0;  // N(A)
    Int genus_right = 0; // N(a - A)
    Int frobenius_left = -1;
    Int frobenius_right = -1;
    /// Every h in [h0, verified_through] was checked against the identity.
    std::size_t verified_through = 1;

    /// The right-hand side of the decomposition at a given h.
    auto reconstruct(std::size_t h) const -> std::vector<Int>;
};

/// Fails with InputError unless A is normalized with |A| >= 2.
auto stabilization(const IntSet & a, std::size_t window = 10, Budget budget = {}) -> StabilizationProfile;

/// ha + 1 - N(A) - N(a - A).
auto eventual_size(const IntSet & a, std::size_t h) -> Int;

struct GswCheck {
    std::size_t h0_observed;
    std::size_t bound; // max(1, a - k + 2)
    bool ok;
};

auto gsw_bound(const IntSet & a) -> std::size_t;
auto check_gsw(const IntSet & a, Budget budget = {}) -> GswCheck;

struct LevRow {
    std::size_t h;
    Int observed_increment;
    Int lev_bound;
    bool ok;
};

/// One row per h in [2, h_max].
auto check_lev(const IntSet & a, std::size_t h_max, Budget budget = {}) -> std::vector<LevRow>;

/// True iff 2|hA| = |(h-1)A| + |(h+1)A| for every h in [2, h_max - 1].
auto interval_characterization(const IntSet & a, std::size_t h_max, Budget budget = {}) -> bool;

}
