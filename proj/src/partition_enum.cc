#include <mcpart/partition_enum.hh>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

using namespace mcpart;
using detail::PruningCheck;

namespace
{
    auto any_common(std::span<const BitWord> a, std::span<const BitWord> b) -> bool
    {
        for (std::size_t w = 0 ; w < a.size() ; ++w)
            if (a[w] & b[w])
                return true;
        return false;
    }

    auto test_bit(std::span<const BitWord> a, std::size_t k) -> bool
    {
        return (a[k / bits_per_word] >> (k % bits_per_word)) & 1;
    }

    auto any_above(std::span<const BitWord> a, std::size_t k) -> bool
    {
        auto w = k / bits_per_word;
        auto shift = k % bits_per_word;
        if (shift + 1 < bits_per_word && (a[w] >> (shift + 1)) != 0)
            return true;
        for (++w ; w < a.size() ; ++w)
            if (a[w])
                return true;
        return false;
    }

    template <typename Fn_>
    auto for_each_bit(std::span<const BitWord> a, Fn_ && fn) -> bool
    {
        for (std::size_t w = 0 ; w < a.size() ; ++w) {
            auto word = a[w];
            while (word) {
                if (fn(w * bits_per_word + std::countr_zero(word)))
                    return true;
                word &= word - 1;
            }
        }
        return false;
    }
}

Configuration::Configuration(std::size_t vertices, const std::vector<VertexSet> & components) :
    _vertices(vertices),
    _words(words_for(vertices))
{
    _bits.reserve(components.size() * _words);
    for (auto & c : components) {
        if (c.size() != vertices)
            throw std::invalid_argument("Configuration: component universe does not match");
        _bits.insert(_bits.end(), c.words().begin(), c.words().end());
    }
}

auto Configuration::root(const CoverContext & ctx) -> Configuration
{
    return Configuration(ctx.graph().size(), ctx.cliques());
}

auto Configuration::component(CliqueIndex i) const -> VertexSet
{
    return VertexSet(_vertices, component_words(i));
}

auto Configuration::component_empty(CliqueIndex i) const -> bool
{
    for (auto w : component_words(i))
        if (w)
            return false;
    return true;
}

auto mcpart::apply_decision(const CoverContext & ctx, const Configuration & cfg, Vertex v, CliqueIndex i) -> Configuration
{
    if (i >= cfg.component_count() || v >= cfg.vertex_count() || ! cfg.component_contains(i, v))
        throw std::invalid_argument("apply_decision: vertex is not in the chosen component");

    auto result = cfg;
    ctx.cliques_of(v).for_each([&] (CliqueIndex k) {
        if (k != i)
            result.erase(k, v);
    });
    return result;
}

auto mcpart::repr(const Configuration & cfg) -> Partition
{
    std::vector<VertexSet> blocks;
    for (CliqueIndex i = 0 ; i < cfg.component_count() ; ++i)
        if (! cfg.component_empty(i))
            blocks.push_back(cfg.component(i));
    return Partition(std::move(blocks));
}

auto mcpart::is_t1_or_t2(const CoverContext & ctx, std::span<const CliqueIndex> decisions, const Configuration & cfg) -> bool
{
    if (decisions.empty())
        return false;
    if (decisions.size() > ctx.shared().size())
        throw std::invalid_argument("is_t1_or_t2: more decisions than shared vertices");
    PruningCheck check(ctx);
    return check(cfg, decisions);
}

auto mcpart::is_canonical(const CoverContext & ctx, const Configuration & cfg) -> bool
{
    for (CliqueIndex j = 0 ; j < cfg.component_count() ; ++j) {
        if (cfg.component_empty(j))
            continue;
        auto containing = cliques_of_set(ctx, cfg.component(j));
        if (containing.next_from(j + 1) < containing.size())
            return false;
    }
    return true;
}

PruningCheck::PruningCheck(const CoverContext & ctx) :
    _ctx(&ctx),
    _words(words_for(ctx.clique_count())),
    _signatures(ctx.clique_count() * _words),
    _have_signature(ctx.clique_count()),
    _decided(_words),
    _touched(_words)
{
    auto all = CliqueSet::full(ctx.clique_count());
    _all.assign(all.words().begin(), all.words().end());
}

auto PruningCheck::component_cliques(const Configuration & cfg, CliqueIndex k, std::span<BitWord> out) const -> void
{
    std::copy(_all.begin(), _all.end(), out.begin());

    auto component = cfg.component_words(k);
    for (std::size_t w = 0 ; w < component.size() ; ++w) {
        auto word = component[w];
        while (word) {
            auto v = w * bits_per_word + std::countr_zero(word);
            auto of_v = _ctx->cliques_of(v).words();
            for (std::size_t x = 0 ; x < _words ; ++x)
                out[x] &= of_v[x];
            word &= word - 1;
        }
    }
}

auto PruningCheck::rigid_free(const Configuration & cfg, CliqueIndex k) -> bool
{
    component_cliques(cfg, k, _touched);
    return ! any_common(_touched, _ctx->rigid().words());
}

auto PruningCheck::operator() (const Configuration & cfg, std::span<const CliqueIndex> decisions) -> bool
{
    auto rigid = _ctx->rigid().words();
    auto last = _ctx->shared()[decisions.size() - 1];

    std::fill(_decided.begin(), _decided.end(), 0);
    for (auto d : decisions)
        if (! test_bit(rigid, d))
            _decided[d / bits_per_word] |= BitWord{ 1 } << (d % bits_per_word);

    auto of_last = _ctx->cliques_of(last).words();
    bool touched_any = false;
    for (std::size_t w = 0 ; w < _words ; ++w) {
        _touched[w] = _decided[w] & of_last[w];
        touched_any = touched_any || _touched[w];
    }
    if (! touched_any)
        return false;

    std::fill(_have_signature.begin(), _have_signature.end(), 0);
    auto signature = [&] (CliqueIndex k) -> std::span<const BitWord> {
        std::span<BitWord> slot{ _signatures.data() + k * _words, _words };
        if (! _have_signature[k]) {
            component_cliques(cfg, k, slot);
            _have_signature[k] = 1;
        }
        return slot;
    };

    return for_each_bit(_touched, [&] (CliqueIndex j) {
        auto sj = signature(j);

        // component j fits inside a rigid clique, or inside a later one
        if (any_common(sj, rigid) || any_above(sj, j))
            return true;

        // component j and another decided component fit inside a common clique;
        // pairs of touched indices are examined once, from the smaller side
        return for_each_bit(_decided, [&] (CliqueIndex i) {
            if (i == j || (i < j && test_bit(_touched, i)))
                return false;
            return any_common(signature(i), sj);
        });
    });
}

PartitionEnumerator::PartitionEnumerator(const CoverContext & ctx) :
    PartitionEnumerator(ctx, {}, ctx.shared().size())
{
}

PartitionEnumerator::PartitionEnumerator(const CoverContext & ctx, std::span<const CliqueIndex> prefix, std::size_t target) :
    _ctx(&ctx),
    _check(ctx)
{
    auto & shared = ctx.shared();
    _target = std::min(target, shared.size());
    _floor = prefix.size();
    if (_floor > _target)
        throw std::invalid_argument("PartitionEnumerator: prefix longer than the search depth");

    _cfg.assign(_target + 1, Configuration::root(ctx));
    _choice.assign(_target, unassigned);

    if (ctx.clique_count() == 0) {
        _finished = true;
        return;
    }

    for (std::size_t k = 0 ; k < _floor ; ++k) {
        auto v = shared[k];
        auto i = prefix[k];
        if (i >= ctx.clique_count() || ! ctx.cliques_of(v).contains(i))
            throw std::invalid_argument("PartitionEnumerator: prefix assigns a vertex to a clique it is not in");
        if (! ctx.rigid().contains(i) && ! _check.rigid_free(_cfg[k], i))
            throw std::invalid_argument("PartitionEnumerator: prefix is not a surviving search node");
        _choice[k] = i;
        _cfg[k + 1] = apply_decision(ctx, _cfg[k], v, i);
        if (_check(_cfg[k + 1], std::span<const CliqueIndex>(_choice.data(), k + 1)))
            throw std::invalid_argument("PartitionEnumerator: prefix is not a surviving search node");
    }

    if (_floor == _target) {
        _depth = _floor;
        _pending_single = true;
    }
    else {
        _depth = _floor + 1;
        find_next();
    }
}

auto PartitionEnumerator::restricted(const CoverContext & ctx, std::span<const CliqueIndex> prefix) -> PartitionEnumerator
{
    return PartitionEnumerator(ctx, prefix, ctx.shared().size());
}

auto PartitionEnumerator::frontier(const CoverContext & ctx, std::size_t depth) -> std::vector<std::vector<CliqueIndex>>
{
    std::vector<std::vector<CliqueIndex>> result;
    PartitionEnumerator e(ctx, {}, depth);
    while (e.has_next()) {
        auto d = e.decisions();
        result.emplace_back(d.begin(), d.end());
        e.skip();
    }
    return result;
}

auto PartitionEnumerator::find_next() -> void
{
    auto & ctx = *_ctx;
    auto & shared = ctx.shared();
    auto & rigid = ctx.rigid();

    while (_depth > _floor) {
        auto v = shared[_depth - 1];
        auto & parent = _cfg[_depth - 1];
        auto & of_v = ctx.cliques_of(v);
        auto & choice = _choice[_depth - 1];

        // candidates: later cliques of v that are rigid or whose component
        // fits in no rigid clique
        auto k = of_v.next_from(choice == unassigned ? 0 : choice + 1);
        while (k < of_v.size() && ! rigid.contains(k) && ! _check.rigid_free(parent, k))
            k = of_v.next_from(k + 1);

        if (k >= of_v.size()) {
            choice = unassigned;
            --_depth;
            continue;
        }

        choice = k;
        auto & cfg = _cfg[_depth];
        cfg = parent;
        of_v.for_each([&] (CliqueIndex j) {
            if (j != k)
                cfg.erase(j, v);
        });

        if (_check(cfg, decisions()))
            continue;
        if (_depth == _target)
            return;

        ++_depth;
    }

    _finished = true;
}

auto PartitionEnumerator::current() const -> const Configuration &
{
    if (_finished)
        throw std::logic_error("PartitionEnumerator::current: enumeration is finished");
    return _cfg[_depth];
}

auto PartitionEnumerator::skip() -> void
{
    if (_finished)
        return;
    if (_pending_single) {
        _pending_single = false;
        _finished = true;
    }
    else
        find_next();
}

auto PartitionEnumerator::next() -> std::optional<Partition>
{
    if (_finished)
        return std::nullopt;
    auto result = repr(_cfg[_depth]);
    skip();
    return result;
}

auto mcpart::count_partitions(const CoverContext & ctx) -> BigCount
{
    BigCount total = 0;
    std::uint64_t batch = 0;
    PartitionEnumerator e(ctx);
    while (e.has_next()) {
        e.skip();
        if (++batch == std::numeric_limits<std::uint64_t>::max()) {
            total += batch;
            batch = 0;
        }
    }
    return total + batch;
}

auto mcpart::count_partitions_parallel(const CoverContext & ctx, unsigned threads, std::size_t split_depth) -> BigCount
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    auto prefixes = PartitionEnumerator::frontier(ctx, split_depth);
    std::atomic<std::size_t> next_prefix{ 0 };
    std::mutex total_mutex;
    BigCount total = 0;

    auto worker = [&] {
        BigCount local = 0;
        for (auto p = next_prefix++ ; p < prefixes.size() ; p = next_prefix++) {
            std::uint64_t n = 0;
            auto e = PartitionEnumerator::restricted(ctx, prefixes[p]);
            while (e.has_next()) {
                e.skip();
                ++n;
            }
            local += n;
        }
        std::lock_guard<std::mutex> guard(total_mutex);
        total += local;
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1 ; t < threads ; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();

    return total;
}
