#include "oracles.hpp"

#include <sumsetlab/error.hpp>
#include <sumsetlab/semigroup.hpp>

#include <doctest.h>

using namespace sumsetlab;

TEST_CASE("semigroup_profile")
{
    auto p = semigroup_profile(IntSet{0, 2, 7});
    CHECK(p.gaps == std::vector<Int>{1, 3, 5});
    CHECK(p.frobenius == 5);
    CHECK(p.genus == 3);

    for (Int w = 2; w < 10; ++w) {
        p = semigroup_profile(IntSet{0, 1, w});
        CHECK(p.gaps.empty());
        CHECK(p.frobenius == -1);
        CHECK(p.genus == 0);
    }

    p = semigroup_profile(IntSet{0, 5, 7});
    CHECK(p.frobenius == 23);
    CHECK(p.genus == 12);

    // 0 is optional among the generators
    CHECK(semigroup_profile(IntSet{3, 5}).frobenius == 7);

    CHECK_THROWS_WITH_AS(semigroup_profile(IntSet{0, 2, 4}), "infinite gap set", InputError);
    CHECK_THROWS_WITH_AS(semigroup_profile(IntSet{0}), "infinite gap set", InputError);
    CHECK_THROWS_AS(semigroup_profile(IntSet{-1, 3}), InputError);
}

TEST_CASE("frobenius and genus")
{
    CHECK(frobenius(IntSet{0, 3, 7}) == 11);
    CHECK(frobenius(IntSet{0, 1}) == -1);
    CHECK(frobenius(IntSet{0, 2, 7}) == 5);
    CHECK(genus(IntSet{0, 2, 7}) == 3);
    CHECK(genus(IntSet{0, 4, 5}) == 6);
    CHECK(genus(IntSet{0, 1}) == 0);
}

TEST_CASE("sieve agrees with semigroup closure")
{
    for (const auto & v : oracle::normalized_sets(11)) {
        const auto p = semigroup_profile(IntSet(v));
        REQUIRE(p.gaps == oracle::naive_gaps(v));
        REQUIRE(p.genus == static_cast<Int>(p.gaps.size()));
        // certification: the max(A) integers after g are all members
        const auto members = semigroup_members_upto(IntSet(v), p.frobenius + v.back());
        REQUIRE(static_cast<Int>(members.size()) == p.frobenius + v.back() + 1 - p.genus);
    }
}

TEST_CASE("stabilization of {0,2,7} and {0,3,7}")
{
    const auto a = stabilization(IntSet{0, 2, 7});
    CHECK(a.a == 7);
    CHECK(a.C == 6);
    CHECK(a.D == 24);
    CHECK(a.fringe_C == std::vector<Int>{0, 2, 4});
    CHECK(a.fringe_D == std::vector<Int>{0, 5, 7, 10, 12, 14, 15, 17, 19, 20, 21, 22});
    CHECK(a.h0 == 5);
    CHECK(a.genus_left == 3);
    CHECK(a.genus_right == 12);
    for (std::size_t h = 5; h <= 15; ++h) {
        CHECK(a.reconstruct(h) == h_fold(IntSet{0, 2, 7}, h).elements());
    }

    const auto b = stabilization(IntSet{0, 3, 7});
    CHECK(b.C == 12);
    CHECK(b.D == 18);
    CHECK(b.fringe_C == std::vector<Int>{0, 3, 6, 7, 9, 10});
    CHECK(b.fringe_D == std::vector<Int>{0, 4, 7, 8, 11, 12, 14, 15, 16});
    CHECK(a.fringe_C.size() + a.fringe_D.size() == 15);
    CHECK(b.fringe_C.size() + b.fringe_D.size() == 15);
    for (std::size_t h = b.h0; h <= b.h0 + 10; ++h)
        CHECK(b.reconstruct(h) == h_fold(IntSet{0, 3, 7}, h).elements());
}

TEST_CASE("stabilization of an interval")
{
    const auto p = stabilization(IntSet{0, 1});
    CHECK(p.C == 0);
    CHECK(p.D == 0);
    CHECK(p.fringe_C.empty());
    CHECK(p.fringe_D.empty());
    CHECK(p.h0 == 1);
    CHECK(p.reconstruct(4) == std::vector<Int>{0, 1, 2, 3, 4});
}

TEST_CASE("stabilization preconditions")
{
    CHECK_THROWS_AS(stabilization(IntSet{0}), InputError);
    CHECK_THROWS_AS(stabilization(IntSet{1, 3, 8}), InputError);
    CHECK_THROWS_AS(stabilization(IntSet{0, 2, 6}), InputError);
}

TEST_CASE("eventual_size")
{
    CHECK(eventual_size(IntSet{0, 2, 7}, 6) == 28);
    CHECK(eventual_size(IntSet{0, 3, 7}, 6) == 28);
    CHECK(eventual_size(IntSet{0, 1, 5}, 5) == 20);
    for (std::size_t h = 1; h < 10; ++h)
        CHECK(eventual_size(IntSet{0, 1}, h) == static_cast<Int>(h) + 1);
}

TEST_CASE("check_gsw")
{
    auto c = check_gsw(IntSet{0, 2, 7});
    CHECK(c.h0_observed == 5);
    CHECK(c.bound == 6);
    CHECK(c.ok);

    c = check_gsw(IntSet{0, 1});
    CHECK(c.h0_observed == 1);
    CHECK(c.bound == 1);
    CHECK(c.ok);

    // [0,4] u {9}: the decomposition already holds at h = 1, since
    // A = [0, 9 - 5] u {9 - 0}; its size sequence 6, 15, 24, ... is 9h - 3 throughout.
    c = check_gsw(IntSet{0, 1, 2, 3, 4, 9});
    CHECK(c.h0_observed == 1);
    CHECK(c.bound == 5);
    CHECK(c.ok);
}

TEST_CASE("check_lev")
{
    auto rows = check_lev(IntSet{0, 2, 7}, 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].h == 2);
    CHECK(rows[0].observed_increment == 3);
    CHECK(rows[0].lev_bound == 3);
    CHECK(rows[0].ok);

    rows = check_lev(IntSet{0, 1}, 3);
    CHECK(rows.back().h == 3);
    CHECK(rows.back().observed_increment == 1);
    CHECK(rows.back().lev_bound == 1);

    rows = check_lev(IntSet{0, 1, 2, 3, 4, 9}, 3);
    CHECK(rows.back().observed_increment == 9);
    CHECK(rows.back().lev_bound == 9);
    CHECK(rows.back().ok);
}

TEST_CASE("interval_characterization")
{
    CHECK(interval_characterization(IntSet{0, 1, 2}, 6));
    CHECK(interval_characterization(IntSet{0, 1}, 6));
    CHECK_FALSE(interval_characterization(IntSet{0, 2, 7}, 6));
    CHECK_THROWS_AS(interval_characterization(IntSet{0, 1}, 2), InputError);

    // zero second differences do not force an interval: |h{0,1,3}| = 3h
    CHECK(interval_characterization(IntSet{0, 1, 3}, 10));

    for (const auto & v : oracle::normalized_sets(9)) {
        IntSet a(v);
        const bool is_interval = static_cast<Int>(v.size()) == v.back() + 1;
        if (is_interval)
            REQUIRE(interval_characterization(a, 8));
        const auto seq = size_sequence(a, 8);
        bool linear = true;
        for (std::size_t h = 2; h < 8; ++h)
            linear = linear && seq.at(h) - seq.at(h - 1) == seq.at(h + 1) - seq.at(h);
        REQUIRE(interval_characterization(a, 8) == linear);
    }
}

TEST_CASE("eventual structure over all normalized sets with max <= 12")
{
    for (const auto & v : oracle::normalized_sets(12)) {
        IntSet a(v);
        const auto p = stabilization(a);
        const auto k = static_cast<Int>(a.size());
        REQUIRE(p.h0 <= static_cast<std::size_t>(std::max<Int>(1, a.max() - k + 2)));
        REQUIRE(static_cast<Int>(p.fringe_C.size()) == p.C - p.genus_left);
        REQUIRE(static_cast<Int>(p.fringe_D.size()) == p.D - p.genus_right);
        const auto seq = size_sequence(a, p.h0 + 11);
        for (std::size_t h = p.h0; h <= p.h0 + 10; ++h) {
            REQUIRE(static_cast<Int>(seq.at(h)) == eventual_size(a, h));
            REQUIRE(static_cast<Int>(seq.at(h + 1) - seq.at(h)) == a.max());
            REQUIRE(p.reconstruct(h) == h_fold(a, h).elements());
        }
        for (const auto & r : check_lev(a, 12))
            REQUIRE(r.ok);
    }
}
