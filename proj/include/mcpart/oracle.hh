#pragma once

#include <mcpart/clique_cover.hh>
#include <mcpart/partition.hh>

#include <cstdint>
#include <set>

namespace mcpart
{
    inline constexpr std::uint64_t default_oracle_leaf_cap = std::uint64_t{ 1 } << 24;

    /**
     * Ground truth by exhaustion: every assignment of each shared vertex to
     * one of its maximal cliques, kept when the resulting blocks form a
     * maximal clique-partition, deduplicated. No pruning.
     *
     * Throws SizeLimitError if the number of assignments exceeds leaf_cap.
     */
    auto brute_force_all_partitions(const CoverContext & ctx,
            std::uint64_t leaf_cap = default_oracle_leaf_cap) -> std::set<Partition>;

    /**
     * True iff the blocks partition the vertices, every block is a clique,
     * and no two blocks have a clique union.
     */
    auto is_maximal_partition(const Graph & graph, const Partition & partition) -> bool;

    /**
     * A second ground truth that never looks at maximal cliques: grows every
     * partition of the vertex set into cliques, one vertex at a time, and
     * keeps the maximal ones. Its cost is bounded by the Bell number of the
     * order, so it stays usable where the leaf count above does not.
     */
    auto brute_force_set_partitions(const Graph & graph) -> std::set<Partition>;
}
