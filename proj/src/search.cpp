#include <sumsetlab/error.hpp>
#include <sumsetlab/search.hpp>
#include <sumsetlab/semigroup.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <sstream>
#include <thread>

namespace sumsetlab {

auto relation_symbol(Relation r) -> std::string
{
    switch (r) {
    case Relation::less: return "<";
    case Relation::equal: return "=";
    case Relation::greater: return ">";
    }
    return "?";
}

auto parse_relation(const std::string & s) -> Relation
{
    if (s == "<")
        return Relation::less;
    if (s == "=" || s == "==")
        return Relation::equal;
    if (s == ">")
        return Relation::greater;
    throw InputError("unknown relation '" + s + "' (expected <, = or >)");
}

auto status_name(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::capped: return "capped";
    }
    return "?";
}

namespace {

auto sgn(Int x) -> int { return (x > 0) - (x < 0); }

auto relation_sign(Relation r) -> int
{
    return r == Relation::less ? -1 : r == Relation::greater ? 1 : 0;
}

auto render(const TauTuple & t) -> std::string
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < t.size(); ++i)
        out << (i ? "," : "") << t[i];
    out << ')';
    return out.str();
}

// A query compiled to "for column c, sign(|h_c A_i| - |h_c A_j|) must equal
// s" over all pairs i < j, plus an optional slope condition between two
// consecutive columns that pins the sign pattern for every later h.
struct Plan {
    std::size_t n = 0;
    std::vector<std::size_t> hs;
    struct Check {
        std::size_t col;
        std::vector<int> sign; // sign[i * n + j], i < j
    };
    std::vector<Check> checks;
    struct Slope {
        std::size_t col0, col1;
        std::vector<int> sign;
    };
    std::optional<Slope> slope;
    SearchSpace space;
};

auto pair_signs(const TauTuple & t) -> std::vector<int>
{
    const auto n = t.size();
    std::vector<int> s(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            s[i * n + j] = sgn(t[i] - t[j]);
    return s;
}

auto column_of(const std::vector<std::size_t> & hs, std::size_t h) -> std::size_t
{
    return static_cast<std::size_t>(std::lower_bound(hs.begin(), hs.end(), h) - hs.begin());
}

void validate_space(const SearchSpace & space, std::size_t n, const SearchLimits & limits)
{
    if (n == 0)
        throw InputError("n must be at least 1");
    if (n > limits.max_sets)
        throw BudgetError("budget exceeded: at most " + std::to_string(limits.max_sets) + " sets per tuple");
    if (space.bound_n < 1)
        throw InputError("bound_N must be at least 1");
    if (space.bound_n > limits.max_bound_n)
        throw BudgetError("budget exceeded: bound_N above cap " + std::to_string(limits.max_bound_n));
    if (space.k && *space.k < 2)
        throw InputError("k must be at least 2");
}

template <typename C>
void validate_increasing(const std::vector<C> & cs)
{
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].h == 0)
            throw InputError("constraint h must be at least 1");
        if (i > 0 && cs[i].h <= cs[i - 1].h)
            throw InputError("constraint h values must be strictly increasing");
    }
}

// Every h past the last explicit constraint up to and including certify_at+1
// is checked against the tail, and the slope between certify_at and
// certify_at+1 must keep each pairwise sign.
auto tail_certify_at(const PatternQuery & q) -> std::size_t
{
    const std::size_t last = q.constraints.empty() ? 0 : q.constraints.back().h;
    // For any candidate, gsw_bound of its normalization is at most bound_N.
    return std::max({q.tail->h_check_max, static_cast<std::size_t>(q.space.bound_n), last + 1});
}

void validate(const PatternQuery & q, const SearchLimits & limits)
{
    validate_space(q.space, q.n, limits);
    validate_increasing(q.constraints);
    for (const auto & c : q.constraints)
        if (c.target.size() != q.n)
            throw InputError("every tau target must have length n");
    if (q.tail) {
        if (q.tail->target.size() != q.n)
            throw InputError("tail tau target must have length n");
        const std::size_t last = q.constraints.empty() ? 0 : q.constraints.back().h;
        if (q.tail->h_check_max <= last)
            throw InputError("tail h_max must exceed the last constraint h");
    }
}

auto compile(const PatternQuery & q) -> Plan
{
    Plan p;
    p.n = q.n;
    p.space = q.space;
    for (const auto & c : q.constraints)
        p.hs.push_back(c.h);
    std::size_t certify = 0;
    if (q.tail) {
        certify = tail_certify_at(q);
        const std::size_t last = q.constraints.empty() ? 0 : q.constraints.back().h;
        for (std::size_t h = last + 1; h <= certify + 1; ++h)
            p.hs.push_back(h);
    }
    for (const auto & c : q.constraints)
        p.checks.push_back({column_of(p.hs, c.h), pair_signs(c.target)});
    if (q.tail) {
        const auto signs = pair_signs(q.tail->target);
        const std::size_t last = q.constraints.empty() ? 0 : q.constraints.back().h;
        for (std::size_t h = last + 1; h <= certify + 1; ++h)
            p.checks.push_back({column_of(p.hs, h), signs});
        p.slope = Plan::Slope{column_of(p.hs, certify), column_of(p.hs, certify + 1), signs};
    }
    return p;
}

auto compile(const SignPatternQuery & q) -> Plan
{
    Plan p;
    p.n = 2;
    p.space = q.space;
    for (const auto & c : q.constraints)
        p.hs.push_back(c.h);
    for (const auto & c : q.constraints) {
        std::vector<int> s(4, 0);
        s[0 * 2 + 1] = relation_sign(c.rel);
        p.checks.push_back({column_of(p.hs, c.h), s});
    }
    return p;
}

auto mask_to_set(std::uint32_t mask) -> IntSet
{
    std::vector<Int> e;
    for (std::uint32_t m = mask; m; m &= m - 1)
        e.push_back(std::countr_zero(m));
    return IntSet(e);
}

auto worker_count(const SearchOptions & o) -> unsigned
{
    if (o.workers)
        return o.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

template <typename F>
void parallel_for(std::size_t count, unsigned workers, F && body)
{
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        });
}

class Engine {
public:
    Engine(Plan plan, const SearchOptions & options) : plan_(std::move(plan)), options_(options)
    {
        enumerate_candidates();
        compute_profiles();
    }

    auto run() -> std::pair<SearchStatus, std::vector<std::size_t>>;

    auto nodes() const -> std::uint64_t { return nodes_; }
    auto frontier() const -> const std::vector<std::size_t> & { return frontier_; }
    auto candidate(std::size_t i) const -> IntSet { return mask_to_set(masks_[i]); }

private:
    struct Sub {
        bool found = false;
        bool capped = false;
        std::uint64_t nodes = 0;
        std::vector<std::size_t> tuple; // witness or frontier
    };

    void enumerate_candidates();
    void compute_profiles();
    auto compatible(std::size_t ci, std::size_t i, std::size_t cj, std::size_t j) const -> bool;
    auto subtree(std::size_t outer, std::uint64_t cap) const -> Sub;

    Plan plan_;
    SearchOptions options_;
    std::vector<std::uint32_t> masks_;
    std::vector<Int> maxes_;
    std::vector<std::uint32_t> profile_; // candidate-major, one column per plan_.hs
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> frontier_;
};

void Engine::enumerate_candidates()
{
    const auto top = static_cast<std::uint32_t>(plan_.space.bound_n);
    const std::uint64_t limit = std::uint64_t{1} << (top + 1);
    for (std::uint64_t m = 3; m < limit; m += 2) {
        const auto mask = static_cast<std::uint32_t>(m);
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        if (plan_.space.k && k != *plan_.space.k)
            continue;
        masks_.push_back(mask);
        maxes_.push_back(31 - std::countl_zero(mask));
    }
    const auto cols = std::max<std::size_t>(1, plan_.hs.size());
    if (static_cast<std::uint64_t>(masks_.size()) * cols > options_.limits.max_profile_cells)
        throw BudgetError("budget exceeded: search space too large to profile");
}

void Engine::compute_profiles()
{
    const auto cols = plan_.hs.size();
    profile_.assign(masks_.size() * cols, 0);
    if (cols == 0)
        return;
    const auto h_top = plan_.hs.back();
    const std::size_t chunk = 256;
    const auto chunks = (masks_.size() + chunk - 1) / chunk;
    parallel_for(chunks, worker_count(options_), [&](std::size_t c) {
        const auto end = std::min(masks_.size(), (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
            SumsetLadder ladder(mask_to_set(masks_[i]), h_top, options_.budget);
            std::size_t col = 0;
            for (;;) {
                while (col < cols && plan_.hs[col] == ladder.h())
                    profile_[i * cols + col++] = static_cast<std::uint32_t>(ladder.size());
                if (col == cols)
                    break;
                ladder.advance();
            }
        }
    });
}

auto Engine::compatible(std::size_t ci, std::size_t i, std::size_t cj, std::size_t j) const -> bool
{
    const auto cols = plan_.hs.size();
    const auto n = plan_.n;
    const auto * pi = &profile_[ci * cols];
    const auto * pj = &profile_[cj * cols];
    for (const auto & c : plan_.checks) {
        const Int d = static_cast<Int>(pi[c.col]) - static_cast<Int>(pj[c.col]);
        if (sgn(d) != c.sign[i * n + j])
            return false;
    }
    if (plan_.slope) {
        const auto & s = *plan_.slope;
        const Int d0 = static_cast<Int>(pi[s.col0]) - static_cast<Int>(pj[s.col0]);
        const Int d1 = static_cast<Int>(pi[s.col1]) - static_cast<Int>(pj[s.col1]);
        const int want = s.sign[i * n + j];
        const int slope = sgn(d1 - d0);
        if ((want > 0 && slope < 0) || (want < 0 && slope > 0) || (want == 0 && slope != 0))
            return false;
    }
    return true;
}

auto Engine::subtree(std::size_t outer, std::uint64_t cap) const -> Sub
{
    Sub r;
    std::vector<std::size_t> chosen{outer};
    r.nodes = 1;
    if (r.nodes > cap) {
        r.capped = true;
        r.tuple = chosen;
        return r;
    }
    if (plan_.n == 1) {
        r.found = true;
        r.tuple = chosen;
        return r;
    }
    const auto n = plan_.n;
    const auto count = masks_.size();
    const Int common_max = maxes_[outer];
    std::vector<std::size_t> next(n, 0);
    std::size_t depth = 1;
    chosen.resize(n);
    while (depth > 0) {
        auto & c = next[depth];
        bool descended = false;
        while (c < count) {
            const auto cand = c++;
            if (plan_.space.equal_max && maxes_[cand] != common_max)
                continue;
            if (++r.nodes > cap) {
                r.capped = true;
                r.tuple.assign(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(depth));
                r.tuple.push_back(cand);
                return r;
            }
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i)
                ok = compatible(chosen[i], i, cand, depth);
            if (! ok)
                continue;
            chosen[depth] = cand;
            if (depth + 1 == n) {
                r.found = true;
                r.tuple = chosen;
                return r;
            }
            ++depth;
            next[depth] = 0;
            descended = true;
            break;
        }
        if (! descended)
            --depth;
    }
    return r;
}

auto Engine::run() -> std::pair<SearchStatus, std::vector<std::size_t>>
{
    const auto count = masks_.size();
    const auto cap = plan_.space.node_cap;
    std::vector<std::optional<Sub>> results(count);
    std::mutex lock;
    std::size_t prefix_done = 0;
    std::uint64_t prefix_nodes = 0;
    std::atomic<std::size_t> stop{count};

    auto advance_prefix = [&] {
        while (prefix_done < count && results[prefix_done] && ! results[prefix_done]->found
            && ! results[prefix_done]->capped) {
            prefix_nodes += results[prefix_done]->nodes;
            ++prefix_done;
            if (prefix_nodes > cap) {
                stop = std::min(stop.load(), prefix_done - 1);
                return;
            }
        }
    };

    parallel_for(count, worker_count(options_), [&](std::size_t i) {
        if (i > stop.load())
            return;
        std::uint64_t known;
        {
            std::lock_guard g(lock);
            known = prefix_nodes;
        }
        if (known > cap)
            return;
        auto r = subtree(i, cap - known);
        std::lock_guard g(lock);
        if (r.found || r.capped) {
            std::size_t cur = stop.load();
            while (i < cur && ! stop.compare_exchange_weak(cur, i)) {
            }
        }
        results[i] = std::move(r);
        advance_prefix();
    });

    // Replay in canonical order so the outcome matches a sequential search.
    std::uint64_t before = 0;
    auto capped_in = [&](std::size_t i) {
        auto r = subtree(i, cap - before);
        nodes_ = cap;
        frontier_ = r.tuple;
        return std::pair{SearchStatus::capped, std::vector<std::size_t>{}};
    };
    for (std::size_t i = 0; i < count; ++i) {
        const auto & r = *results[i];
        if (r.found) {
            if (before + r.nodes <= cap) {
                nodes_ = before + r.nodes;
                return {SearchStatus::found, r.tuple};
            }
            return capped_in(i);
        }
        if (r.capped || before + r.nodes > cap)
            return capped_in(i);
        before += r.nodes;
    }
    nodes_ = before;
    return {SearchStatus::exhausted, {}};
}

auto sizes_at(std::span<const IntSet> sets, std::size_t h, Budget budget) -> std::vector<Int>
{
    return size_profile(sets, h, budget);
}

auto space_ok(std::span<const IntSet> sets, const SearchSpace & space) -> bool
{
    for (const auto & s : sets) {
        if (space.k && s.size() != *space.k)
            return false;
        if (space.equal_max && s.max() - s.min() != sets.front().max() - sets.front().min())
            return false;
    }
    return true;
}

auto certify_bound(std::span<const IntSet> sets) -> std::size_t
{
    std::size_t b = 1;
    for (const auto & s : sets)
        if (s.size() >= 2)
            b = std::max(b, gsw_bound(normalize(s).set));
    return b;
}

auto tail_holds(std::span<const IntSet> sets, const PatternQuery & q, Budget budget, std::vector<CheckRecord> * log)
    -> bool
{
    const auto & target = q.tail->target;
    const std::size_t last = q.constraints.empty() ? 0 : q.constraints.back().h;
    const std::size_t certify = std::max({q.tail->h_check_max, certify_bound(sets), last + 1});
    bool ok = true;
    std::vector<std::vector<Int>> at(2);
    for (std::size_t h = last + 1; h <= certify + 1; ++h) {
        auto sizes = sizes_at(sets, h, budget);
        const bool good = tau(sizes) == target;
        if (log)
            log->push_back({h, sizes, render(target), good});
        ok = ok && good;
        if (h == certify)
            at[0] = sizes;
        if (h == certify + 1)
            at[1] = std::move(sizes);
    }
    const auto n = sets.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int want = sgn(target[i] - target[j]);
            const int slope = sgn((at[1][i] - at[1][j]) - (at[0][i] - at[0][j]));
            if ((want > 0 && slope < 0) || (want < 0 && slope > 0) || (want == 0 && slope != 0))
                ok = false;
        }
    return ok;
}

auto pattern_checks(std::span<const IntSet> sets, const PatternQuery & q, Budget budget, std::vector<CheckRecord> * log)
    -> bool
{
    if (sets.size() != q.n || ! space_ok(sets, q.space))
        return false;
    bool ok = true;
    for (const auto & c : q.constraints) {
        auto sizes = sizes_at(sets, c.h, budget);
        const bool good = tau(sizes) == c.target;
        if (log)
            log->push_back({c.h, sizes, render(c.target), good});
        ok = ok && good;
    }
    if (q.tail)
        ok = tail_holds(sets, q, budget, log) && ok;
    return ok;
}

auto sign_checks(std::span<const IntSet> sets, const SignPatternQuery & q, Budget budget, std::vector<CheckRecord> * log)
    -> bool
{
    if (sets.size() != 2 || ! space_ok(sets, q.space))
        return false;
    bool ok = true;
    for (const auto & c : q.constraints) {
        auto sizes = sizes_at(sets, c.h, budget);
        const bool good = sgn(sizes[0] - sizes[1]) == relation_sign(c.rel);
        if (log)
            log->push_back({c.h, sizes, relation_symbol(c.rel), good});
        ok = ok && good;
    }
    return ok;
}

template <typename Query, typename Verify>
auto execute(const Query & q, Plan plan, const SearchOptions & options, Verify && verify) -> SearchResult
{
    Engine engine(std::move(plan), options);
    auto [status, tuple] = engine.run();
    SearchResult result;
    result.status = status;
    result.nodes = engine.nodes();
    for (auto i : engine.frontier())
        result.frontier.push_back(engine.candidate(i));
    if (status == SearchStatus::found) {
        for (auto i : tuple)
            result.witness.push_back(engine.candidate(i));
        if (! verify(result.witness, q, options.budget, &result.checks))
            throw MismatchError("search returned a witness that fails independent verification");
    }
    return result;
}

}

auto search_tau(const PatternQuery & query, const SearchOptions & options) -> SearchResult
{
    validate(query, options.limits);
    auto r = execute(query, compile(query), options, pattern_checks);
    r.tail_certified = query.tail && r.status == SearchStatus::found;
    return r;
}

auto search_sign_pattern(const SignPatternQuery & query, const SearchOptions & options) -> SearchResult
{
    validate_space(query.space, 2, options.limits);
    validate_increasing(query.constraints);
    return execute(query, compile(query), options, sign_checks);
}

auto verify_witness(std::span<const IntSet> sets, const PatternQuery & query, Budget budget) -> bool
{
    return pattern_checks(sets, query, budget, nullptr);
}

auto verify_witness(std::span<const IntSet> sets, const SignPatternQuery & query, Budget budget) -> bool
{
    return sign_checks(sets, query, budget, nullptr);
}

}
