#include <doctest.h>

#include <support/fixtures.hh>

#include <mcpart/generators.hh>

#include <algorithm>

using namespace mcpart;
using namespace mcpart::testing;

TEST_CASE("apply_decision removes the vertex from every other clique")
{
    auto ctx = build_cover_context(example2());
    auto root = Configuration::root(ctx);
    auto cfg = apply_decision(ctx, root, 1, 0);

    CHECK(cfg.component(0) == ctx.clique(0));
    CHECK(cfg.component(1) == vset(7, { 2, 3 }));
    CHECK(cfg.component(2) == ctx.clique(2));
    CHECK(cfg.component(3) == ctx.clique(3));
    CHECK(root == Configuration::root(ctx));

    CHECK_THROWS_AS(apply_decision(ctx, root, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(apply_decision(ctx, cfg, 1, 1), std::invalid_argument);
}

TEST_CASE("repr drops empty components")
{
    auto ctx = build_cover_context(example2());
    Configuration cfg(7, { vset(7, { 0, 1, 2 }), vset(7, { 3 }), VertexSet(7), vset(7, { 4, 5, 6 }) });
    CHECK(repr(cfg) == partition(7, { { 0, 1, 2 }, { 3 }, { 4, 5, 6 } }));
    CHECK(repr(Configuration::root(ctx)).size() == 4);
}

TEST_CASE("pruning conditions on the second example")
{
    auto ctx = build_cover_context(example2());
    auto root = Configuration::root(ctx);

    CHECK_FALSE(is_t1_or_t2(ctx, std::vector<CliqueIndex>{ }, root));

    // vertices 1, 2, 3 go to cliques 0, 0, 1
    auto cfg = apply_decision(ctx, root, 1, 0);
    cfg = apply_decision(ctx, cfg, 2, 0);
    CHECK_FALSE(is_t1_or_t2(ctx, std::vector<CliqueIndex>{ 0, 0 }, cfg));
    cfg = apply_decision(ctx, cfg, 3, 1);
    CHECK(cfg == Configuration(7, { ctx.clique(0), vset(7, { 3 }), vset(7, { 4, 5 }), ctx.clique(3) }));
    // {3} also fits in the later clique 2
    CHECK(is_t1_or_t2(ctx, std::vector<CliqueIndex>{ 0, 0, 1 }, cfg));

    // vertex 1 kept in clique 1 leaves {0,2} ⊆ clique 0 and {1,2,3} ⊆ clique 1; both fine
    auto other = apply_decision(ctx, root, 1, 1);
    CHECK_FALSE(is_t1_or_t2(ctx, std::vector<CliqueIndex>{ 1 }, other));
    // then vertex 2 into clique 1 leaves {0} inside rigid clique 0 only; clique 1 is {1,2,3}
    auto both = apply_decision(ctx, other, 2, 1);
    CHECK_FALSE(is_t1_or_t2(ctx, std::vector<CliqueIndex>{ 1, 1 }, both));
}

TEST_CASE("two decided components inside one clique are pruned")
{
    // triangle 0,1,2 with pendants 3-1 and 4-2: cliques {0,1,2}, {1,3}, {2,4}
    Graph g(5, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 1, 3 }, { 2, 4 } });
    auto ctx = build_cover_context(g);
    REQUIRE(ctx.clique_count() == 3);
    REQUIRE(ctx.shared() == std::vector<Vertex>{ 1, 2 });

    auto cfg = apply_decision(ctx, Configuration::root(ctx), 1, 0);
    cfg = apply_decision(ctx, cfg, 2, 0);
    // all three cliques are rigid, so nothing is decided-and-free here
    CHECK_FALSE(is_t1_or_t2(ctx, std::vector<CliqueIndex>{ 0, 0 }, cfg));
    CHECK(drain(ctx).size() == 4);
}

TEST_CASE("first example")
{
    auto ctx = build_cover_context(example1());
    auto got = drain(ctx);
    REQUIRE(got.size() == 3);
    CHECK(got.front() == partition(6, { { 0, 1, 2 }, { 3, 4 }, { 5 } }));
    CHECK(as_set(got) == std::set<Partition>{
            partition(6, { { 0, 1, 2 }, { 3, 4 }, { 5 } }),
            partition(6, { { 0, 1, 2 }, { 3, 5 }, { 4 } }),
            partition(6, { { 0, 3 }, { 1, 2 }, { 4 }, { 5 } }) });
}

TEST_CASE("second example")
{
    auto ctx = build_cover_context(example2());
    auto got = drain(ctx);
    REQUIRE(got.size() == 7);
    CHECK(got.front() == partition(7, { { 0, 1, 2 }, { 3, 4, 5 }, { 6 } }));
    CHECK(as_set(got) == std::set<Partition>{
            partition(7, { { 0 }, { 1, 2, 3 }, { 4, 5, 6 } }),
            partition(7, { { 0, 1 }, { 2, 3 }, { 4, 5, 6 } }),
            partition(7, { { 0, 1, 2 }, { 3 }, { 4, 5, 6 } }),
            partition(7, { { 0, 1, 2 }, { 3, 4 }, { 5, 6 } }),
            partition(7, { { 0, 1, 2 }, { 3, 4, 5 }, { 6 } }),
            partition(7, { { 0, 1, 2 }, { 3, 5 }, { 4, 6 } }),
            partition(7, { { 0, 2 }, { 1, 3 }, { 4, 5, 6 } }) });
}

TEST_CASE("pruned configurations never become current")
{
    auto ctx = build_cover_context(example2());
    Configuration pruned(7, { ctx.clique(0), vset(7, { 3 }), VertexSet(7), ctx.clique(3) });

    PartitionEnumerator e(ctx);
    while (e.has_next()) {
        CHECK_FALSE(e.current() == pruned);
        e.skip();
    }
}

TEST_CASE("degenerate graphs")
{
    SUBCASE("no vertices")
    {
        auto ctx = build_cover_context(Graph());
        PartitionEnumerator e(ctx);
        CHECK_FALSE(e.has_next());
        CHECK_FALSE(e.next());
        CHECK(count_partitions(ctx) == 0);
    }

    SUBCASE("a single clique")
    {
        auto ctx = build_cover_context(Graph(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } }));
        auto got = drain(ctx);
        REQUIRE(got.size() == 1);
        CHECK(got[0] == partition(3, { { 0, 1, 2 } }));
    }

    SUBCASE("isolated vertices")
    {
        auto ctx = build_cover_context(Graph(3, { }));
        auto got = drain(ctx);
        REQUIRE(got.size() == 1);
        CHECK(got[0] == partition(3, { { 0 }, { 1 }, { 2 } }));
    }

    SUBCASE("exhausted enumerator stays exhausted")
    {
        auto ctx = build_cover_context(example1());
        PartitionEnumerator e(ctx);
        while (e.next()) { }
        CHECK_FALSE(e.next());
        CHECK_FALSE(e.has_next());
        CHECK_THROWS_AS(e.current(), std::logic_error);
        e.skip();
        CHECK_FALSE(e.has_next());
    }
}

TEST_CASE("two cliques sharing n vertices give every split")
{
    for (std::size_t n = 1 ; n <= 6 ; ++n) {
        auto ctx = build_cover_context(gen_two_clique(n));
        auto got = drain(ctx);
        CHECK(got.size() == std::size_t{ 1 } << n);
        CHECK(as_set(got).size() == got.size());
    }
}

TEST_CASE("enumerated configurations are canonical leaves")
{
    std::mt19937_64 rng(77);
    for (int round = 0 ; round < 120 ; ++round) {
        auto g = random_graph(rng, 4 + round % 6, std::array{ 0.2, 0.5, 0.8 }[round % 3]);
        auto ctx = build_cover_context(g);
        PartitionEnumerator e(ctx);
        while (e.has_next()) {
            CHECK(e.decisions().size() == ctx.shared().size());
            CHECK(is_canonical(ctx, e.current()));
            for (std::size_t k = 0 ; k < e.decisions().size() ; ++k)
                CHECK(ctx.cliques_of(ctx.shared()[k]).contains(e.decisions()[k]));
            auto p = e.next();
            REQUIRE(p);
            CHECK(is_maximal_partition(g, *p));
        }
    }
}

TEST_CASE("clique order and shared order do not change the emitted set")
{
    std::mt19937_64 rng(2024);
    for (int round = 0 ; round < 60 ; ++round) {
        auto g = random_graph(rng, 5 + round % 5, 0.5);
        auto expected = as_set(drain(build_cover_context(g)));

        auto cliques = maximal_cliques(g);
        std::shuffle(cliques.begin(), cliques.end(), rng);
        auto shared = build_cover_context(g).shared();
        std::shuffle(shared.begin(), shared.end(), rng);

        auto ctx = build_cover_context(g, cliques, shared);
        auto got = drain(ctx);
        CHECK(as_set(got) == expected);
        CHECK(got.size() == expected.size());
    }
}

TEST_CASE("frontier subtrees cover the whole tree exactly once")
{
    std::mt19937_64 rng(9);
    for (int round = 0 ; round < 40 ; ++round) {
        auto g = random_graph(rng, 6 + round % 4, 0.6);
        auto ctx = build_cover_context(g);
        auto all = drain(ctx);

        for (std::size_t depth = 1 ; depth <= ctx.shared().size() ; ++depth) {
            std::vector<Partition> pieces;
            for (auto & prefix : PartitionEnumerator::frontier(ctx, depth)) {
                auto e = PartitionEnumerator::restricted(ctx, prefix);
                while (auto p = e.next())
                    pieces.push_back(std::move(*p));
            }
            CHECK(pieces == all);
        }
    }
}

TEST_CASE("restricted enumeration rejects bad prefixes")
{
    auto ctx = build_cover_context(example2());
    CHECK_THROWS_AS(PartitionEnumerator::restricted(ctx, std::vector<CliqueIndex>{ 2 }), std::invalid_argument);
    CHECK_THROWS_AS(PartitionEnumerator::restricted(ctx, std::vector<CliqueIndex>{ 0, 0, 1 }), std::invalid_argument);
    CHECK_THROWS_AS(PartitionEnumerator::restricted(ctx, std::vector<CliqueIndex>(6, 0)), std::invalid_argument);
}

TEST_CASE("parallel count matches the sequential count")
{
    for (auto & g : { example2(), gen_gn(6), gen_hn(4), gen_gmn(5, 4), gen_two_clique(8) }) {
        auto ctx = build_cover_context(g);
        auto expected = count_partitions(ctx);
        for (unsigned threads : { 1u, 2u, 4u })
            for (std::size_t depth : { std::size_t{ 1 }, std::size_t{ 3 } })
                CHECK(count_partitions_parallel(ctx, threads, depth) == expected);
    }
}
