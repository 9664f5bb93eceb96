#include "cli.hpp"
#include "json_io.hpp"

#include <sumsetlab/error.hpp>
#include <sumsetlab/families.hpp>
#include <sumsetlab/parse.hpp>
#include <sumsetlab/search.hpp>
#include <sumsetlab/semigroup.hpp>
#include <sumsetlab/sumset.hpp>
#include <sumsetlab/tau.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace sumsetlab::cli {

auto Environment::from_process() -> Environment
{
    Environment env;
    if (const char * v = std::getenv("SUMSETLAB_BUDGET_BITS"))
        env.budget_bits = v;
    return env;
}

namespace {

enum class Format { json, csv, pretty };

struct Globals {
    Format format = Format::json;
    std::optional<std::uint64_t> budget_bits;
    std::optional<std::uint64_t> node_cap;
    Budget budget;
};

auto positive(Int v, const char * name) -> std::size_t
{
    if (v < 1)
        throw InputError(std::string(name) + " must be at least 1");
    return static_cast<std::size_t>(v);
}

auto h_list(const std::string & text) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (auto v : parse_int_list(text))
        out.push_back(positive(v, "h"));
    if (out.empty())
        throw InputError("empty h list");
    return out;
}

void emit(std::ostream & out, const std::string & command, json inputs, json result)
{
    json env{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"version", version}};
    out << env.dump(2) << '\n';
}

[[noreturn]] void no_csv(const std::string & command)
{
    throw InputError("--format csv is not available for '" + command + "'");
}

template <typename T>
auto join(const std::vector<T> & v, const char * sep = ",") -> std::string
{
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? sep : "") << v[i];
    return s.str();
}

// ---- commands -------------------------------------------------------------

struct SumsetArgs {
    std::string set;
    Int h = 1;
};

void cmd_sumset(const SumsetArgs & a, const Globals & g, std::ostream & out)
{
    const auto set = parse_set(a.set);
    const auto h = positive(a.h, "h");
    const auto result = h_fold(set, h, g.budget);
    switch (g.format) {
    case Format::json:
        emit(out, "sumset", {{"set", to_json(set)}, {"h", h}},
            {{"elements", to_json(result)}, {"size", result.size()}});
        break;
    case Format::csv:
        out << "element\n";
        for (auto x : result)
            out << x << '\n';
        break;
    case Format::pretty:
        out << h << "A for A = " << set << "\n" << result << "\nsize " << result.size() << '\n';
        break;
    }
}

struct SizesArgs {
    std::string set;
    Int h_max = 10;
};

void cmd_sizes(const SizesArgs & a, const Globals & g, std::ostream & out)
{
    const auto set = parse_set(a.set);
    const auto seq = size_sequence(set, positive(a.h_max, "h-max"), g.budget);
    switch (g.format) {
    case Format::json:
        emit(out, "sizes", {{"set", to_json(set)}, {"h_max", seq.h_max()}},
            {{"sizes", seq.sizes}, {"tail_start", seq.tail_start}, {"tail_difference", seq.tail_difference}});
        break;
    case Format::csv:
        out << "h,size\n";
        for (std::size_t h = 1; h <= seq.h_max(); ++h)
            out << h << ',' << seq.at(h) << '\n';
        break;
    case Format::pretty:
        out << "|hA| for A = " << set << '\n';
        for (std::size_t h = 1; h <= seq.h_max(); ++h)
            out << "  h=" << h << "  " << seq.at(h) << '\n';
        break;
    }
}

struct AnalyzeArgs {
    std::string set;
    Int h_max = 0; // 0: through h0 + window
    Int window = 10;
};

void cmd_analyze(const AnalyzeArgs & a, const Globals & g, std::ostream & out)
{
    const auto input = parse_set(a.set);
    const auto norm = normalize(input);
    const auto & set = norm.set;
    const auto window = positive(a.window, "window");
    const auto profile = stabilization(set, window, g.budget);
    const auto h_max = a.h_max > 0 ? static_cast<std::size_t>(a.h_max) : profile.h0 + window;
    const auto seq = size_sequence(set, h_max, g.budget);
    const auto gsw = check_gsw(set, g.budget);
    const auto lev = check_lev(set, std::max<std::size_t>(h_max, 2), g.budget);
    const bool linear = interval_characterization(set, std::max<std::size_t>(h_max, 3), g.budget);
    const bool interval = static_cast<Int>(set.size()) == set.max() + 1;
    const Int intercept = 1 - profile.genus_left - profile.genus_right;

    json lev_rows = json::array();
    bool lev_ok = true;
    for (const auto & r : lev) {
        lev_rows.push_back({{"h", r.h}, {"increment", r.observed_increment}, {"bound", r.lev_bound}, {"ok", r.ok}});
        lev_ok = lev_ok && r.ok;
    }

    switch (g.format) {
    case Format::json: {
        auto result = to_json(profile);
        result["set"] = to_json(input);
        result["normalized"] = to_json(set);
        result["map"] = to_json(norm.map);
        result["k"] = set.size();
        result["eventual"] = {{"slope", profile.a}, {"intercept", intercept}};
        result["interval"] = interval;
        result["linear_sizes"] = linear;
        result["gsw"] = {{"h0_observed", gsw.h0_observed}, {"bound", gsw.bound}, {"ok", gsw.ok}};
        result["lev"] = {{"ok", lev_ok}, {"rows", lev_rows}};
        result["sizes"] = seq.sizes;
        emit(out, "analyze", {{"set", to_json(input)}, {"h_max", h_max}, {"window", window}}, result);
        break;
    }
    case Format::csv:
        no_csv("analyze");
    case Format::pretty:
        out << "set          " << input << '\n'
            << "normalized   " << set << "  (x -> " << norm.map.lambda().to_string() << "*x + "
            << norm.map.mu().to_string() << ")\n"
            << "a, k         " << profile.a << ", " << set.size() << '\n'
            << "C, D         " << profile.C << ", " << profile.D << '\n'
            << "fringe C     {" << join(profile.fringe_C) << "}\n"
            << "fringe D     {" << join(profile.fringe_D) << "}\n"
            << "frobenius    " << profile.frobenius_left << " / " << profile.frobenius_right << " (reflected)\n"
            << "genus        " << profile.genus_left << " / " << profile.genus_right << " (reflected)\n"
            << "h0           " << profile.h0 << "  (bound a-k+2 = " << gsw.bound << ")\n"
            << "eventual     |hA| = " << profile.a << "h " << (intercept < 0 ? "- " : "+ ")
            << (intercept < 0 ? -intercept : intercept) << '\n'
            << "interval     " << (interval ? "yes" : "no") << '\n'
            << "linear sizes " << (linear ? "yes" : "no") << " through h=" << std::max<std::size_t>(h_max, 3) << '\n'
            << "lev bound    " << (lev_ok ? "holds" : "VIOLATED") << '\n'
            << "sizes        " << join(seq.sizes) << '\n';
        break;
    }
}

struct EquivArgs {
    std::string a, b;
};

void cmd_equiv(const EquivArgs & a, const Globals & g, std::ostream & out)
{
    const auto sa = parse_set(a.a), sb = parse_set(a.b);
    const bool eq = affinely_equivalent(sa, sb);
    const auto na = normalize(sa), nb = normalize(sb);
    switch (g.format) {
    case Format::json:
        emit(out, "equiv", {{"a", to_json(sa)}, {"b", to_json(sb)}},
            {{"equivalent", eq}, {"normalized_a", to_json(na.set)}, {"normalized_b", to_json(nb.set)},
                {"map_a", to_json(na.map)}, {"map_b", to_json(nb.map)}});
        break;
    case Format::csv:
        no_csv("equiv");
    case Format::pretty:
        out << sa << " ~ " << na.set << '\n' << sb << " ~ " << nb.set << '\n'
            << (eq ? "affinely equivalent" : "affinely inequivalent") << '\n';
        break;
    }
}

struct TableArgs {
    Int ell = 4;
    std::string ws;
    std::string hs;
};

void cmd_table(const TableArgs & a, const Globals & g, std::ostream & out)
{
    const auto ws = parse_int_list(a.ws);
    const auto hs = h_list(a.hs);
    if (ws.empty())
        throw InputError("empty w list");
    const auto t = size_table(a.ell, ws, hs, g.budget);
    switch (g.format) {
    case Format::json:
        emit(out, "table", {{"ell", a.ell}, {"w", ws}, {"h", hs}}, to_json(t));
        break;
    case Format::csv:
        out << "w," << join(hs) << '\n';
        for (std::size_t i = 0; i < ws.size(); ++i)
            out << ws[i] << ',' << join(t.cells[i]) << '\n';
        break;
    case Format::pretty: {
        out << "|hA| for A = [0," << a.ell << "] u {w}\n";
        out << std::string(6, ' ');
        for (auto h : hs)
            out << std::setw(7) << ("h=" + std::to_string(h));
        out << '\n';
        for (std::size_t i = 0; i < ws.size(); ++i) {
            out << "w=" << std::left << std::setw(4) << ws[i] << std::right;
            for (auto c : t.cells[i])
                out << std::setw(7) << c;
            out << '\n';
        }
        break;
    }
    }
}

struct BigSplitArgs {
    Int k = 3;
    Int h1 = 1;
    Int h_max = 0; // 0: h1 + 10
};

void cmd_bigsplit(const BigSplitArgs & a, const Globals & g, std::ostream & out)
{
    const auto pair = bigsplit_pair(a.k, a.h1);
    const auto h_max = a.h_max > 0 ? static_cast<std::size_t>(a.h_max) : static_cast<std::size_t>(a.h1) + 10;
    const auto sa = size_sequence(pair.a, h_max, g.budget);
    const auto sb = size_sequence(pair.b, h_max, g.budget);
    std::vector<Int> diffs;
    for (std::size_t h = 1; h <= h_max; ++h) {
        const Int d = static_cast<Int>(sb.at(h)) - static_cast<Int>(sa.at(h));
        const Int law = std::max<Int>(0, static_cast<Int>(h) - a.h1);
        if (d != law)
            throw MismatchError("split law fails at h=" + std::to_string(h));
        diffs.push_back(d);
    }
    switch (g.format) {
    case Format::json:
        emit(out, "bigsplit", {{"k", a.k}, {"h1", a.h1}, {"h_max", h_max}},
            {{"A", to_json(pair.a)}, {"B", to_json(pair.b)}, {"ell", pair.ell}, {"w", pair.w},
                {"sizes_A", sa.sizes}, {"sizes_B", sb.sizes}, {"differences", diffs}, {"law_holds", true}});
        break;
    case Format::csv:
        out << "h,size_A,size_B,difference\n";
        for (std::size_t h = 1; h <= h_max; ++h)
            out << h << ',' << sa.at(h) << ',' << sb.at(h) << ',' << diffs[h - 1] << '\n';
        break;
    case Format::pretty:
        out << "A = " << pair.a << "\nB = " << pair.b << "\n|hB| - |hA| = " << join(diffs) << '\n';
        break;
    }
}

struct OscillateArgs {
    Int h2 = 2, g = 3, ell = 5, b = 244, w = 245;
    Int window = 20;
};

void cmd_oscillate(const OscillateArgs & a, const Globals & g, std::ostream & out)
{
    const GeometricParams p{a.h2, a.g, a.ell, a.b, a.w};
    const auto r = verify_geometric(p, positive(a.window, "window"), g.budget);
    switch (g.format) {
    case Format::json:
        emit(out, "oscillate", {{"h2", a.h2}, {"g", a.g}, {"ell", a.ell}, {"b", a.b}, {"w", a.w}, {"window", a.window}},
            to_json(r));
        break;
    case Format::csv:
        no_csv("oscillate");
    case Format::pretty:
        out << "A = " << r.pair.a << "\nG = " << r.pair.g << '\n'
            << "|1A| = " << r.size_a_1 << ", |1G| = " << r.size_g_1 << (r.inequality_1 ? "  (A larger)" : "") << '\n'
            << "|" << a.h2 << "A| = " << r.size_a_h2 << ", |" << a.h2 << "G| = " << r.size_g_h2
            << (r.inequality_2 ? "  (G larger)" : "") << '\n';
        if (r.h3)
            out << "|hA| > |hG| for all h >= " << *r.h3 << '\n';
        else
            out << "A never overtakes G\n";
        for (const auto & l : r.layers)
            out << "  j=" << l.j << ": " << l.interval_layer << (l.strictly_less ? " < " : " >= ") << l.bh_layer << '\n';
        break;
    }
}

struct BhArgs {
    std::string set;
    Int h = 2;
};

void cmd_bh(const BhArgs & a, const Globals & g, std::ostream & out)
{
    const auto set = parse_set(a.set);
    const auto h = positive(a.h, "h");
    const bool bh = is_bh_set(set, h);
    json layers = json::array();
    for (std::size_t j = 1; j <= h; ++j)
        layers.push_back({{"j", j}, {"size", h_fold(set, j, g.budget).size()},
            {"multisets", bh_layer_size(static_cast<Int>(set.size()), static_cast<Int>(j))}});
    switch (g.format) {
    case Format::json:
        emit(out, "bh-check", {{"set", to_json(set)}, {"h", h}}, {{"bh", bh}, {"layers", layers}});
        break;
    case Format::csv:
        no_csv("bh-check");
    case Format::pretty:
        out << set << (bh ? " is" : " is not") << " a B_" << h << " set\n";
        break;
    }
}

struct TauArgs {
    std::string u;
};

void cmd_tau(const TauArgs & a, const Globals & g, std::ostream & out)
{
    const auto u = parse_tuple(a.u);
    const auto t = tau(u);
    switch (g.format) {
    case Format::json:
        emit(out, "tau", {{"u", u}}, {{"tau", t.ranks()}});
        break;
    case Format::csv:
        out << join(t.ranks()) << '\n';
        break;
    case Format::pretty:
        out << "tau(" << join(u) << ") = (" << join(t.ranks()) << ")\n";
        break;
    }
}

struct SearchArgs {
    std::string query_file;
    unsigned workers = 0;
};

void cmd_search(const SearchArgs & a, const Globals & g, std::ostream & out)
{
    json doc;
    try {
        if (a.query_file == "-") {
            doc = json::parse(std::cin);
        }
        else {
            std::ifstream in(a.query_file);
            if (! in)
                throw InputError("cannot open query file '" + a.query_file + "'");
            doc = json::parse(in);
        }
    }
    catch (const json::parse_error & e) {
        throw InputError(std::string("malformed query JSON: ") + e.what());
    }
    auto query = parse_query(doc);
    SearchOptions options;
    options.workers = a.workers;
    options.budget = g.budget;

    SearchResult r;
    json echo = doc;
    if (auto * p = std::get_if<PatternQuery>(&query)) {
        if (g.node_cap)
            p->space.node_cap = *g.node_cap;
        echo["node_cap"] = p->space.node_cap;
        r = search_tau(*p, options);
    }
    else {
        auto & s = std::get<SignPatternQuery>(query);
        if (g.node_cap)
            s.space.node_cap = *g.node_cap;
        echo["node_cap"] = s.space.node_cap;
        r = search_sign_pattern(s, options);
    }
    auto result = to_json(r);
    if (std::holds_alternative<PatternQuery>(query) && std::get<PatternQuery>(query).tail)
        result["tail_certified"] = r.tail_certified;
    switch (g.format) {
    case Format::json:
        emit(out, "search", echo, result);
        break;
    case Format::csv:
        no_csv("search");
    case Format::pretty:
        out << "status " << status_name(r.status) << " after " << r.nodes << " nodes\n";
        for (const auto & s : r.witness)
            out << "  " << s << '\n';
        if (r.status == SearchStatus::capped) {
            out << "frontier";
            for (const auto & s : r.frontier)
                out << ' ' << s;
            out << '\n';
        }
        break;
    }
}

auto budget_from(const Globals & g, const Environment & env) -> Budget
{
    Budget b;
    if (g.budget_bits) {
        b.bits = *g.budget_bits;
    }
    else if (env.budget_bits) {
        try {
            std::size_t used = 0;
            b.bits = std::stoull(*env.budget_bits, &used);
            if (used != env.budget_bits->size())
                throw std::invalid_argument("trailing");
        }
        catch (const std::exception &) {
            throw InputError("SUMSETLAB_BUDGET_BITS must be a positive integer");
        }
    }
    if (b.bits == 0)
        throw InputError("budget must be positive");
    return b;
}

}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, const Environment & env) -> int
{
    CLI::App app{"Sumset size sequences, eventual structure and pattern search", "sumsetlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version);
    // --h is a regular option on several subcommands, so help is long-form only
    app.set_help_flag("--help", "Print this help message and exit");

    Globals g;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--budget-bits", g.budget_bits, "Cap on dense bit range per sumset computation");
    app.add_option("--node-cap", g.node_cap, "Node cap for search");

    std::function<void()> action;
    auto bind = [&](CLI::App * sub, auto handler, auto & args_ref) {
        sub->callback([&, handler] { action = [&, handler] { handler(args_ref, g, out); }; });
    };

    SumsetArgs sumset_args;
    auto * sub = app.add_subcommand("sumset", "Compute hA");
    sub->add_option("--set", sumset_args.set, "Set literal, e.g. {0,2,7}")->required();
    sub->add_option("--h", sumset_args.h, "Number of summands")->required();
    bind(sub, cmd_sumset, sumset_args);

    SizesArgs sizes_args;
    sub = app.add_subcommand("sizes", "Size sequence |hA| for h = 1..h-max");
    sub->add_option("--set", sizes_args.set)->required();
    sub->add_option("--h-max", sizes_args.h_max);
    bind(sub, cmd_sizes, sizes_args);

    AnalyzeArgs analyze_args;
    sub = app.add_subcommand("analyze", "Normalize, then report semigroup data and the eventual decomposition");
    sub->add_option("--set", analyze_args.set)->required();
    sub->add_option("--h-max", analyze_args.h_max, "Sizes to report (default h0 + window)");
    sub->add_option("--window", analyze_args.window, "Verification window past h0");
    bind(sub, cmd_analyze, analyze_args);

    EquivArgs equiv_args;
    sub = app.add_subcommand("equiv", "Test affine equivalence");
    sub->add_option("--a", equiv_args.a)->required();
    sub->add_option("--b", equiv_args.b)->required();
    bind(sub, cmd_equiv, equiv_args);

    TableArgs table_args;
    sub = app.add_subcommand("table", "Sizes of [0,ell] u {w}, closed form checked against enumeration");
    sub->add_option("--ell", table_args.ell);
    sub->add_option("--w,--w-list", table_args.ws, "w values, e.g. 5..25,30")->required();
    sub->add_option("--h,--h-list", table_args.hs, "h values, e.g. 2..9")->required();
    bind(sub, cmd_table, table_args);

    BigSplitArgs bigsplit_args;
    sub = app.add_subcommand("bigsplit", "Pair whose sizes agree through h1, then split");
    sub->add_option("--k", bigsplit_args.k)->required();
    sub->add_option("--h1", bigsplit_args.h1)->required();
    sub->add_option("--h-max", bigsplit_args.h_max);
    bind(sub, cmd_bigsplit, bigsplit_args);

    OscillateArgs osc_args;
    sub = app.add_subcommand("oscillate", "Interval-plus-point set against a geometric B_h set");
    sub->add_option("--h2", osc_args.h2);
    sub->add_option("--g", osc_args.g);
    sub->add_option("--ell", osc_args.ell);
    sub->add_option("--b", osc_args.b);
    sub->add_option("--w", osc_args.w);
    sub->add_option("--window", osc_args.window);
    bind(sub, cmd_oscillate, osc_args);

    BhArgs bh_args;
    sub = app.add_subcommand("bh-check", "Test the B_h property");
    sub->add_option("--set", bh_args.set)->required();
    sub->add_option("--h", bh_args.h)->required();
    bind(sub, cmd_bh, bh_args);

    TauArgs tau_args;
    sub = app.add_subcommand("tau", "Dense-rank normalization of a tuple");
    sub->add_option("--u", tau_args.u, "Tuple, e.g. [-2,13,11,0,22,4]")->required();
    bind(sub, cmd_tau, tau_args);

    SearchArgs search_args;
    sub = app.add_subcommand("search", "Bounded search for sets realizing tau or sign patterns");
    sub->add_option("--query", search_args.query_file, "Query JSON file, or - for stdin")->required();
    sub->add_option("--workers", search_args.workers, "Worker threads (0 = all cores)");
    bind(sub, cmd_search, search_args);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        g.format = format == "csv" ? Format::csv : format == "pretty" ? Format::pretty : Format::json;
        g.budget = budget_from(g, env);
        action();
        return exit_ok;
    }
    catch (const BudgetError & e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const MismatchError & e) {
        err << "internal mismatch: " << e.what() << '\n';
        return exit_mismatch;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::exception & e) {
        err << "internal error: " << e.what() << '\n';
        return exit_mismatch;
    }
}

}
