#pragma once

#include <mcpart/clique_cover.hh>
#include <mcpart/graph.hh>
#include <mcpart/oracle.hh>
#include <mcpart/partition_enum.hh>

#include <random>
#include <set>
#include <vector>

namespace mcpart::testing
{
    // x1..x6 get ids 0..5 by first appearance
    inline const char * const example1_edges = "x1 x2\nx2 x3\nx1 x3\nx1 x4\nx4 x5\nx4 x6\n";

    // labels 1..7 get ids 0..6 by first appearance
    inline const char * const example2_edges = "1 2\n1 3\n2 3\n2 4\n3 4\n4 5\n4 6\n5 6\n5 7\n6 7\n";

    inline auto example1() -> Graph
    {
        return parse_edge_list(example1_edges);
    }

    inline auto example2() -> Graph
    {
        return parse_edge_list(example2_edges);
    }

    inline auto vset(std::size_t n, std::initializer_list<std::size_t> members) -> VertexSet
    {
        return VertexSet(n, members);
    }

    inline auto partition(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> blocks) -> Partition
    {
        std::vector<VertexSet> result;
        for (auto & b : blocks)
            result.emplace_back(n, b);
        return Partition(std::move(result));
    }

    /// Every emitted partition, in emission order.
    inline auto drain(const CoverContext & ctx) -> std::vector<Partition>
    {
        std::vector<Partition> result;
        PartitionEnumerator e(ctx);
        while (auto p = e.next())
            result.push_back(std::move(*p));
        return result;
    }

    inline auto as_set(const std::vector<Partition> & ps) -> std::set<Partition>
    {
        return { ps.begin(), ps.end() };
    }

    /// G(n, p) with a fixed seed per call site.
    inline auto random_graph(std::mt19937_64 & rng, std::size_t n, double density) -> Graph
    {
        std::bernoulli_distribution edge(density);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex a = 0 ; a < n ; ++a)
            for (Vertex b = a + 1 ; b < n ; ++b)
                if (edge(rng))
                    edges.emplace_back(a, b);
        return Graph(n, edges);
    }

    /// Maximal cliques by checking every subset; only for small graphs.
    inline auto brute_force_maximal_cliques(const Graph & g) -> std::set<std::vector<std::size_t>>
    {
        auto n = g.size();
        std::vector<bool> is_clique_mask(std::size_t{ 1 } << n, false);
        for (std::size_t mask = 1 ; mask < (std::size_t{ 1 } << n) ; ++mask) {
            bool ok = true;
            for (std::size_t a = 0 ; a < n && ok ; ++a)
                for (std::size_t b = a + 1 ; b < n && ok ; ++b)
                    if ((mask >> a & 1) && (mask >> b & 1) && ! g.adjacent(a, b))
                        ok = false;
            is_clique_mask[mask] = ok;
        }

        std::set<std::vector<std::size_t>> result;
        for (std::size_t mask = 1 ; mask < (std::size_t{ 1 } << n) ; ++mask) {
            if (! is_clique_mask[mask])
                continue;
            bool maximal = true;
            for (std::size_t v = 0 ; v < n && maximal ; ++v)
                if (! (mask >> v & 1) && is_clique_mask[mask | std::size_t{ 1 } << v])
                    maximal = false;
            if (maximal) {
                std::vector<std::size_t> members;
                for (std::size_t v = 0 ; v < n ; ++v)
                    if (mask >> v & 1)
                        members.push_back(v);
                result.insert(members);
            }
        }
        return result;
    }
}
