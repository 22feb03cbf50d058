#pragma once

#include <mcpart/graph.hh>

#include <cstddef>

namespace mcpart
{
    /// K_n on 0..n-1 with pendant n+i attached to core vertex i. Requires n >= 2.
    auto gen_gn(std::size_t n) -> Graph;

    /**
     * Three cliques of order 2n on 4n vertices: A = 0..2n-1, B = 2n..4n-1,
     * and M = n..3n-1 sharing n vertices with each. Requires n >= 2.
     */
    auto gen_hn(std::size_t n) -> Graph;

    /// m+n-1 vertices whose n windows of m consecutive vertices are the maximal cliques. Requires m, n >= 2.
    auto gen_gmn(std::size_t m, std::size_t n) -> Graph;

    /**
     * Cliques {0..n-1, n} and {0..n-1, n+1}: n shared vertices, with n and
     * n+1 non-adjacent. Requires n >= 1.
     */
    auto gen_two_clique(std::size_t n) -> Graph;
}
