#include "oracles.hpp"

#include <sumsetlab/error.hpp>
#include <sumsetlab/intset.hpp>
#include <sumsetlab/sumset.hpp>

#include <doctest.h>

#include <random>

using namespace sumsetlab;

namespace {

auto elems(const IntSet & s) { return s.elements(); }

auto as_vector(const std::set<Int> & s) { return std::vector<Int>(s.begin(), s.end()); }

}

TEST_CASE("make_set sorts and deduplicates")
{
    std::vector<Int> v{7, 0, 2, 2};
    CHECK(make_set(v) == IntSet{0, 2, 7});
    std::vector<Int> one{5};
    CHECK(make_set(one).elements() == std::vector<Int>{5});
    std::vector<Int> none;
    CHECK_THROWS_WITH_AS(make_set(none), "empty set", InputError);
}

TEST_CASE("affine_apply")
{
    CHECK(affine_apply(IntSet{1, 4}, AffineMap(Rational(2, 3), Rational(-2, 3))) == IntSet{0, 2});
    CHECK(affine_apply(IntSet{0, 2, 7}, AffineMap(Rational(-1), Rational(7))) == IntSet{0, 5, 7});
    CHECK(affine_apply(IntSet{0, 2}, AffineMap(Rational(1, 2), Rational(0))) == IntSet{0, 1});
    CHECK_THROWS_WITH_AS(affine_apply(IntSet{0, 1}, AffineMap(Rational(1, 2), Rational(0))),
        "non-integral affine image", InputError);
    CHECK_THROWS_AS(AffineMap(Rational(0), Rational(1)), InputError);
}

TEST_CASE("normalize")
{
    auto n = normalize(IntSet{1, 4});
    CHECK(n.set == IntSet{0, 1});
    CHECK(n.map.lambda() == Rational(1, 3));
    CHECK(n.map.mu() == Rational(-1, 3));
    CHECK(affine_apply(IntSet{1, 4}, n.map) == n.set);

    n = normalize(IntSet{0, 2, 7});
    CHECK(n.set == IntSet{0, 2, 7});
    CHECK(n.map == AffineMap::identity());

    n = normalize(IntSet{6});
    CHECK(n.set == IntSet{0});
    CHECK(n.map.lambda() == Rational(1));
    CHECK(n.map.mu() == Rational(-6));

    CHECK(normalize(IntSet{-9, -3, 12}).set == IntSet{0, 2, 7});
}

TEST_CASE("reflect")
{
    CHECK(reflect(IntSet{0, 2, 7}) == IntSet{0, 5, 7});
    for (Int w = 2; w < 12; ++w)
        CHECK(reflect(IntSet{0, 1, w}) == IntSet{0, w - 1, w});
    CHECK(reflect(IntSet{3}) == IntSet{0});
    CHECK(is_normalized(reflect(IntSet{0, 3, 5, 6})));
}

TEST_CASE("affinely_equivalent")
{
    CHECK(affinely_equivalent(IntSet{0, 2}, IntSet{1, 4}));
    CHECK_FALSE(affinely_equivalent(IntSet{0, 2, 7}, IntSet{0, 3, 7}));
    CHECK_FALSE(affinely_equivalent(IntSet{0, 3, 5, 6}, IntSet{0, 4, 5, 6}));
    CHECK_FALSE(affinely_equivalent(IntSet{0, 1, 2}, IntSet{0, 1}));
    CHECK(affinely_equivalent(IntSet{4}, IntSet{-11}));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> val(-30, 30);
    for (int t = 0; t < 200; ++t) {
        std::vector<Int> v;
        for (int i = 0; i < 5; ++i)
            v.push_back(val(rng));
        auto a = make_set(v);
        CHECK(affinely_equivalent(a, reflect(a)));
        CHECK(affinely_equivalent(a, affine_apply(a, AffineMap(Rational(-3), Rational(11)))));
    }
}

TEST_CASE("sumset")
{
    CHECK(elems(sumset(IntSet{0, 2, 7}, IntSet{0, 2, 7})) == std::vector<Int>{0, 2, 4, 7, 9, 14});
    CHECK(elems(sumset(IntSet{0, 3, 7}, IntSet{0, 3, 7})) == std::vector<Int>{0, 3, 6, 7, 10, 14});
    CHECK(sumset(IntSet{-4, 1, 9}, IntSet{0}) == IntSet{-4, 1, 9});
    CHECK(sumset(IntSet{-3, 5}, IntSet{10, 11, 40}) == IntSet{7, 8, 15, 16, 37, 45});

    const Int big = std::numeric_limits<Int>::max() - 1;
    CHECK_THROWS_WITH_AS(sumset(IntSet{big}, IntSet{5}), "range overflow", BudgetError);
}

TEST_CASE("h_fold")
{
    CHECK(elems(h_fold(IntSet{0, 2, 7}, 3)) == std::vector<Int>{0, 2, 4, 6, 7, 9, 11, 14, 16, 21});
    CHECK(elems(h_fold(IntSet{0, 3, 5, 6}, 2)) == std::vector<Int>{0, 3, 5, 6, 8, 9, 10, 11, 12});
    CHECK(h_fold(IntSet{5}, 4) == IntSet{20});
    CHECK(h_fold(IntSet{-2, 1}, 3) == IntSet{-6, -3, 0, 3});

    // The k = 3 worked example.
    CHECK(elems(h_fold(IntSet{0, 2, 7}, 2)) == std::vector<Int>{0, 2, 4, 7, 9, 14});
    CHECK(elems(h_fold(IntSet{0, 3, 7}, 3)) == std::vector<Int>{0, 3, 6, 7, 9, 10, 13, 14, 17, 21});
    CHECK(elems(h_fold(IntSet{0, 2, 7}, 4))
        == std::vector<Int>{0, 2, 4, 6, 7, 8, 9, 11, 13, 14, 16, 18, 21, 23, 28});
    CHECK(elems(h_fold(IntSet{0, 3, 7}, 4))
        == std::vector<Int>{0, 3, 6, 7, 9, 10, 12, 13, 14, 16, 17, 20, 21, 24, 28});

    CHECK_THROWS_AS(h_fold(IntSet{0, 1}, 0), InputError);
    CHECK_THROWS_WITH_AS(h_fold(IntSet{0, 1000}, 100, Budget{50'000}),
        doctest::Contains("budget exceeded"), BudgetError);
    CHECK_NOTHROW(h_fold(IntSet{0, 1000}, 100, Budget{100'001}));
}

TEST_CASE("size_sequence")
{
    auto s = size_sequence(IntSet{0, 2, 7}, 4);
    CHECK(s.sizes == std::vector<std::uint64_t>{3, 6, 10, 15});
    s = size_sequence(IntSet{0, 1}, 5);
    CHECK(s.sizes == std::vector<std::uint64_t>{2, 3, 4, 5, 6});
    CHECK(s.tail_start == 1);
    CHECK(s.tail_difference == 1);
    CHECK(size_sequence(IntSet{0, 4, 5, 6}, 3).sizes == std::vector<std::uint64_t>{4, 9, 15});

    s = size_sequence(IntSet{0, 2, 7}, 12);
    CHECK(s.tail_difference == 7);
    CHECK(s.tail_start == 5); // 21, 28, ... : 7h - 14 from h = 5 on
    CHECK(size_sequence(IntSet{3}, 1).tail_difference == 0);
}

TEST_CASE("ladder walks every fold")
{
    SumsetLadder ladder(IntSet{-1, 3, 4}, 6);
    for (std::size_t h = 1; h <= 6; ++h) {
        CHECK(ladder.h() == h);
        CHECK(ladder.set().elements() == as_vector(oracle::naive_h_fold(IntSet{-1, 3, 4}, h)));
        CHECK(ladder.contains(-static_cast<Int>(h)));
        CHECK_FALSE(ladder.contains(4 * static_cast<Int>(h) + 1));
        if (h < 6)
            ladder.advance();
    }
    CHECK_THROWS_AS(ladder.advance(), InputError);
}

TEST_CASE("bitset kernel matches nested-loop enumeration")
{
    // every normalized set with max <= 10 and at most 4 elements, h <= 5
    for (const auto & v : oracle::normalized_sets(10)) {
        if (v.size() > 4)
            continue;
        IntSet a(v);
        for (std::size_t h = 1; h <= 5; ++h)
            REQUIRE(h_fold(a, h).elements() == as_vector(oracle::naive_h_fold(v, h)));
    }
}

TEST_CASE("cardinality bounds h(k-1)+1 <= |hA| <= C(k+h-1, h)")
{
    for (const auto & v : oracle::normalized_sets(12)) {
        IntSet a(v);
        const auto k = static_cast<Int>(a.size());
        const auto seq = size_sequence(a, 8);
        for (Int h = 1; h <= 8; ++h) {
            const auto s = static_cast<Int>(seq.at(static_cast<std::size_t>(h)));
            REQUIRE(s >= h * (k - 1) + 1);
            REQUIRE(s <= oracle::binomial(k + h - 1, h));
        }
    }
}

TEST_CASE("affine maps: invariance and homomorphism")
{
    std::mt19937_64 rng(20240131);
    std::uniform_int_distribution<int> size_d(1, 8), lam_d(-5, 5), mu_d(-50, 50), den_d(1, 4);
    for (int t = 0; t < 300; ++t) {
        // A = den * B + r makes lambda = p / den produce integers.
        const Int den = den_d(rng), r = mu_d(rng);
        std::uniform_int_distribution<Int> el(0, 40 / den);
        std::vector<Int> v;
        const int n = size_d(rng);
        for (int i = 0; i < n; ++i)
            v.push_back(den * el(rng) + r);
        IntSet a(v);
        Int p = 0;
        while (p == 0)
            p = lam_d(rng);
        // lambda = p/den, mu = (m*den - p*r)/den keeps every image integral
        const Int m = mu_d(rng);
        AffineMap f(Rational(p, den), Rational(m * den - p * r, den));
        const auto b = affine_apply(a, f);
        const std::size_t h = 1 + static_cast<std::size_t>(t % 12);
        const auto ha = h_fold(a, h);
        const auto hb = h_fold(b, h);
        REQUIRE(ha.size() == hb.size());
        REQUIRE(hb == affine_apply(ha, AffineMap(f.lambda(), f.mu() * static_cast<Int>(h))));
        REQUIRE(h_fold(reflect(a), h).size() == ha.size());
    }
}

TEST_CASE("nesting: 0 in A gives hA inside (h+1)A")
{
    for (const auto & v : oracle::normalized_sets(9)) {
        IntSet a(v);
        SumsetLadder ladder(a, 7);
        auto prev = ladder.set();
        while (ladder.h() < 7) {
            ladder.advance();
            for (auto x : prev)
                REQUIRE(ladder.contains(x));
            prev = ladder.set();
        }
    }
}
