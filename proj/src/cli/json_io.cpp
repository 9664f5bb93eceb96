#include "json_io.hpp"

#include <sumsetlab/error.hpp>

namespace sumsetlab::cli {

auto to_json(const IntSet & s) -> json
{
    return json(s.elements());
}

auto to_json(const Rational & r) -> json
{
    return {{"num", r.num}, {"den", r.den}};
}

auto to_json(const AffineMap & f) -> json
{
    return {{"lambda", to_json(f.lambda())}, {"mu", to_json(f.mu())}};
}

auto to_json(const StabilizationProfile & p) -> json
{
    return {
        {"a", p.a},
        {"C", p.C},
        {"D", p.D},
        {"fringe_C", p.fringe_C},
        {"fringe_D", p.fringe_D},
        {"h0", p.h0},
        {"genus", p.genus_left},
        {"genus_reflected", p.genus_right},
        {"frobenius", p.frobenius_left},
        {"frobenius_reflected", p.frobenius_right},
        {"verified_through", p.verified_through},
    };
}

auto to_json(const GeometricReport & r) -> json
{
    json layers = json::array();
    for (const auto & l : r.layers)
        layers.push_back({{"j", l.j}, {"interval_layer", l.interval_layer}, {"bh_layer", l.bh_layer},
            {"strictly_less", l.strictly_less}});
    json out{
        {"A", to_json(r.pair.a)},
        {"G", to_json(r.pair.g)},
        {"size_A_1", r.size_a_1},
        {"size_G_1", r.size_g_1},
        {"size_A_h2", r.size_a_h2},
        {"size_G_h2", r.size_g_h2},
        {"layers", layers},
        {"G0_is_bh", r.g0_is_bh},
        {"G_is_bh", r.g_is_bh},
        {"inequality_1", r.inequality_1},
        {"inequality_2", r.inequality_2},
        {"inequality_3", r.inequality_3},
        {"window_checked", r.window_checked},
    };
    out["h3"] = r.h3 ? json(*r.h3) : json(nullptr);
    return out;
}

auto to_json(const SearchResult & r) -> json
{
    json witness = json::array();
    for (const auto & s : r.witness)
        witness.push_back(to_json(s));
    json checks = json::array();
    for (const auto & c : r.checks)
        checks.push_back({{"h", c.h}, {"sizes", c.sizes}, {"expected", c.expected}, {"ok", c.ok}});
    json out{
        {"status", status_name(r.status)},
        {"witness", witness},
        {"checks", checks},
        {"nodes", r.nodes},
    };
    if (r.status == SearchStatus::capped) {
        json frontier = json::array();
        for (const auto & s : r.frontier)
            frontier.push_back(to_json(s));
        out["frontier"] = frontier;
    }
    return out;
}

auto to_json(const SizeTable & t) -> json
{
    json rows = json::array();
    for (std::size_t i = 0; i < t.ws.size(); ++i)
        rows.push_back({{"w", t.ws[i]}, {"sizes", t.cells[i]}});
    return {{"ell", t.ell}, {"ws", t.ws}, {"hs", t.hs}, {"rows", rows}, {"agreement", true}};
}

namespace {

template <typename T>
auto field(const json & doc, const char * name) -> T
{
    if (! doc.contains(name))
        throw InputError(std::string("query is missing '") + name + "'");
    try {
        return doc.at(name).get<T>();
    }
    catch (const json::exception &) {
        throw InputError(std::string("query field '") + name + "' has the wrong type");
    }
}

auto parse_space(const json & doc) -> SearchSpace
{
    SearchSpace s;
    s.bound_n = field<Int>(doc, "bound_N");
    if (doc.contains("k") && ! doc.at("k").is_null()) {
        const auto k = field<Int>(doc, "k");
        if (k < 2)
            throw InputError("k must be at least 2");
        s.k = static_cast<std::size_t>(k);
    }
    if (doc.contains("equal_max"))
        s.equal_max = field<bool>(doc, "equal_max");
    if (doc.contains("node_cap"))
        s.node_cap = field<std::uint64_t>(doc, "node_cap");
    return s;
}

auto positive_h(const json & c) -> std::size_t
{
    const auto h = field<Int>(c, "h");
    if (h < 1)
        throw InputError("constraint h must be at least 1");
    return static_cast<std::size_t>(h);
}

}

auto parse_query(const json & doc) -> AnyQuery
{
    if (! doc.is_object())
        throw InputError("query must be a JSON object");
    const auto constraints = doc.contains("constraints") ? doc.at("constraints") : json::array();
    if (! constraints.is_array())
        throw InputError("query field 'constraints' must be an array");

    bool sign = doc.contains("type") && doc.at("type") == "sign";
    for (const auto & c : constraints)
        sign = sign || (c.is_object() && c.contains("rel"));

    if (sign) {
        if (doc.contains("n") && field<Int>(doc, "n") != 2)
            throw InputError("sign-pattern queries compare exactly 2 sets");
        SignPatternQuery q;
        q.space = parse_space(doc);
        for (const auto & c : constraints)
            q.constraints.push_back({positive_h(c), parse_relation(field<std::string>(c, "rel"))});
        return q;
    }

    PatternQuery q;
    const auto n = field<Int>(doc, "n");
    if (n < 1)
        throw InputError("n must be at least 1");
    q.n = static_cast<std::size_t>(n);
    q.space = parse_space(doc);
    for (const auto & c : constraints)
        q.constraints.push_back({positive_h(c), TauTuple(field<std::vector<Int>>(c, "tau"))});
    if (doc.contains("tail") && ! doc.at("tail").is_null()) {
        const auto & t = doc.at("tail");
        const auto h_max = field<Int>(t, "h_max");
        if (h_max < 1)
            throw InputError("tail h_max must be at least 1");
        q.tail = TailConstraint{TauTuple(field<std::vector<Int>>(t, "tau")), static_cast<std::size_t>(h_max)};
    }
    return q;
}

}
