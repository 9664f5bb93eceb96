#include <sumsetlab/checked.hpp>
#include <sumsetlab/error.hpp>
#include <sumsetlab/intset.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sumsetlab {

IntSet::IntSet(std::span<const Int> values) : elements_(values.begin(), values.end())
{
    if (elements_.empty())
        throw InputError("empty set");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

IntSet::IntSet(std::initializer_list<Int> values) : IntSet(std::span<const Int>(values.begin(), values.size())) {}

auto IntSet::interval(Int lo, Int hi) -> IntSet
{
    if (lo > hi)
        throw InputError("empty set");
    if (static_cast<__int128>(hi) - lo > (__int128{1} << 32))
        throw BudgetError("interval too large to materialize");
    IntSet s;
    s.elements_.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int x = lo;; ++x) {
        s.elements_.push_back(x);
        if (x == hi)
            break;
    }
    return s;
}

auto IntSet::contains(Int x) const -> bool
{
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

auto IntSet::unite(const IntSet & other) const -> IntSet
{
    IntSet s;
    std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
        std::back_inserter(s.elements_));
    return s;
}

auto IntSet::to_string() const -> std::string
{
    std::ostringstream out;
    out << *this;
    return out.str();
}

auto operator<<(std::ostream & out, const IntSet & s) -> std::ostream &
{
    out << '{';
    bool first = true;
    for (auto x : s) {
        if (! first)
            out << ',';
        out << x;
        first = false;
    }
    return out << '}';
}

auto make_set(std::span<const Int> values) -> IntSet
{
    return IntSet(values);
}

Rational::Rational(Int n, Int d)
{
    if (d == 0)
        throw InputError("zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    auto g = std::gcd(static_cast<std::uint64_t>(nn < 0 ? -nn : nn), static_cast<std::uint64_t>(dd));
    if (g > 1) {
        nn /= static_cast<__int128>(g);
        dd /= static_cast<__int128>(g);
    }
    num = narrow_checked(nn);
    den = narrow_checked(dd);
}

auto Rational::to_string() const -> std::string
{
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

auto operator*(const Rational & x, Int k) -> Rational
{
    auto g = std::gcd(x.den, k);
    return Rational(checked_mul(x.num, k / g), x.den / g);
}

AffineMap::AffineMap(Rational lambda, Rational mu) : lambda_(lambda), mu_(mu)
{
    if (lambda_.is_zero())
        throw InputError("affine map requires lambda != 0");
}

auto AffineMap::apply(Int x) const -> Int
{
    // (ln*x*md + mn*ld) / (ld*md)
    const __int128 numer = static_cast<__int128>(lambda_.num) * x * mu_.den + static_cast<__int128>(mu_.num) * lambda_.den;
    const __int128 denom = static_cast<__int128>(lambda_.den) * mu_.den;
    if (numer % denom != 0)
        throw InputError("non-integral affine image");
    return narrow_checked(numer / denom);
}

auto affine_apply(const IntSet & a, const AffineMap & f) -> IntSet
{
    std::vector<Int> image;
    image.reserve(a.size());
    for (auto x : a)
        image.push_back(f.apply(x));
    return IntSet(image);
}

auto translated_gcd(const IntSet & a) -> Int
{
    Int g = 0;
    for (auto x : a)
        g = std::gcd(g, checked_sub(x, a.min()));
    return g;
}

auto normalize(const IntSet & a) -> Normalized
{
    const Int lo = a.min();
    if (a.size() == 1)
        return {IntSet{0}, AffineMap(Rational{1}, Rational{checked_sub(0, lo)})};
    const Int g = translated_gcd(a);
    AffineMap map(Rational(1, g), Rational(checked_sub(0, lo), g));
    std::vector<Int> out;
    out.reserve(a.size());
    for (auto x : a)
        out.push_back((x - lo) / g);
    return {IntSet(out), map};
}

auto is_normalized(const IntSet & a) -> bool
{
    return a.min() == 0 && (a.size() == 1 || translated_gcd(a) == 1);
}

auto reflect(const IntSet & a) -> IntSet
{
    std::vector<Int> out;
    out.reserve(a.size());
    for (auto x : a)
        out.push_back(checked_sub(a.max(), x));
    return IntSet(out);
}

auto affinely_equivalent(const IntSet & a, const IntSet & b) -> bool
{
    if (a.size() != b.size())
        return false;
    auto na = normalize(a).set;
    auto nb = normalize(b).set;
    return na == nb || na == reflect(nb);
}

}
