#include <sumsetlab/error.hpp>
#include <sumsetlab/parse.hpp>

#include <charconv>
#include <string>

namespace sumsetlab {

namespace {

constexpr std::size_t max_range_expansion = 1u << 22;

auto trim(std::string_view s) -> std::string_view
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

auto parse_int(std::string_view token, std::string_view whole) -> Int
{
    token = trim(token);
    if (! token.empty() && token.front() == '+')
        token.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw InputError("malformed integer '" + std::string(token) + "' in '" + std::string(whole) + "'");
    return v;
}

auto strip_brackets(std::string_view text, char open, char close, bool required) -> std::string_view
{
    auto t = trim(text);
    if (! t.empty() && t.front() == open) {
        if (t.back() != close)
            throw InputError("unbalanced brackets in '" + std::string(text) + "'");
        return trim(t.substr(1, t.size() - 2));
    }
    if (required)
        throw InputError("expected '" + std::string(1, open) + "...'" + std::string(1, close) + " in '"
            + std::string(text) + "'");
    return t;
}

}

auto parse_int_list(std::string_view text) -> std::vector<Int>
{
    std::vector<Int> out;
    auto body = trim(text);
    if (body.empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = body.find(',', start);
        const auto token = trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        const auto dots = token.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_int(token, text));
        }
        else {
            const auto lo = parse_int(token.substr(0, dots), text);
            const auto hi = parse_int(token.substr(dots + 2), text);
            if (lo > hi)
                throw InputError("empty range '" + std::string(token) + "'");
            if (static_cast<__int128>(hi) - lo >= max_range_expansion)
                throw BudgetError("range '" + std::string(token) + "' too large to expand");
            for (Int x = lo; x <= hi; ++x)
                out.push_back(x);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

auto parse_tuple(std::string_view text) -> std::vector<Int>
{
    auto t = trim(text);
    if (! t.empty() && t.front() == '[')
        t = strip_brackets(t, '[', ']', true);
    else if (! t.empty() && t.front() == '(')
        t = strip_brackets(t, '(', ')', true);
    else if (! t.empty() && t.front() == '{')
        t = strip_brackets(t, '{', '}', true);
    auto values = parse_int_list(t);
    if (values.empty())
        throw InputError("empty tuple");
    return values;
}

auto parse_set(std::string_view text) -> IntSet
{
    auto t = trim(text);
    std::string_view body;
    if (! t.empty() && t.front() == '[')
        body = strip_brackets(t, '[', ']', true);
    else
        body = strip_brackets(t, '{', '}', true);
    auto values = parse_int_list(body);
    if (values.empty())
        throw InputError("empty set");
    return make_set(values);
}

}
