#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sumsetlab {

using Int = std::int64_t;

/// A nonempty finite set of integers, stored strictly increasing.
///
/// Instances are immutable once built; the only ways in are make_set() and
/// the constructors below, all of which sort and deduplicate.
class IntSet {
public:
    explicit IntSet(std::span<const Int> values);
    IntSet(std::initializer_list<Int> values);

    /// Closed interval [lo, hi]; requires lo <= hi.
    static auto interval(Int lo, Int hi) -> IntSet;

    auto elements() const noexcept -> const std::vector<Int> & { return elements_; }
    auto size() const noexcept -> std::size_t { return elements_.size(); }
    auto min() const noexcept -> Int { return elements_.front(); }
    auto max() const noexcept -> Int { return elements_.back(); }
    auto contains(Int x) const -> bool;

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    /// Union with another set.
    auto unite(const IntSet & other) const -> IntSet;

    auto to_string() const -> std::string;

    friend auto operator==(const IntSet &, const IntSet &) -> bool = default;
    friend auto operator<=>(const IntSet &, const IntSet &) = default;

private:
    IntSet() = default;
    std::vector<Int> elements_;
};

auto operator<<(std::ostream & out, const IntSet & s) -> std::ostream &;

auto make_set(std::span<const Int> values) -> IntSet;

/// Exact rational number with positive denominator, always in lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d);

    auto is_zero() const noexcept -> bool { return num == 0; }
    auto is_integer() const noexcept -> bool { return den == 1; }
    auto to_string() const -> std::string;

    friend auto operator==(const Rational &, const Rational &) -> bool = default;
};

auto operator*(const Rational & x, Int k) -> Rational;

/// x -> lambda * x + mu over the rationals, lambda != 0.
class AffineMap {
public:
    AffineMap(Rational lambda, Rational mu);

    static auto identity() -> AffineMap { return {Rational{1}, Rational{0}}; }

    auto lambda() const noexcept -> const Rational & { return lambda_; }
    auto mu() const noexcept -> const Rational & { return mu_; }

    /// Image of a single integer; throws when it is not integral.
    auto apply(Int x) const -> Int;

    friend auto operator==(const AffineMap &, const AffineMap &) -> bool = default;

private:
    Rational lambda_;
    Rational mu_;
};

auto affine_apply(const IntSet & a, const AffineMap & f) -> IntSet;

struct Normalized {
    IntSet set;
    AffineMap map; // sends the input onto set
};

/// Translate so the minimum is 0, then divide by the gcd. Singletons are
/// only translated.
auto normalize(const IntSet & a) -> Normalized;

auto is_normalized(const IntSet & a) -> bool;

/// max(A) - A.
auto reflect(const IntSet & a) -> IntSet;

auto affinely_equivalent(const IntSet & a, const IntSet & b) -> bool;

/// gcd of |x - min(A)| over A; 0 for a singleton.
auto translated_gcd(const IntSet & a) -> Int;

}
