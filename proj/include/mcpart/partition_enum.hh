#pragma once

#include <mcpart/clique_cover.hh>
#include <mcpart/count.hh>
#include <mcpart/partition.hh>

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace mcpart
{
    /**
     * A search-tree node: one component per maximal clique, index-aligned with
     * the cover, each a subset of its maximal clique. Components are stored
     * contiguously so that copying a node does not allocate once the
     * destination has the right shape.
     */
    class Configuration
    {
        private:
            std::size_t _vertices = 0;
            std::size_t _words = 0;
            std::vector<BitWord> _bits;

        public:
            Configuration() = default;

            /// All components must share the same universe size.
            Configuration(std::size_t vertices, const std::vector<VertexSet> & components);

            /// The root node: every component is the full maximal clique.
            static auto root(const CoverContext & ctx) -> Configuration;

            auto component_count() const -> std::size_t
            {
                return _words == 0 ? 0 : _bits.size() / _words;
            }

            auto vertex_count() const -> std::size_t
            {
                return _vertices;
            }

            auto component(CliqueIndex i) const -> VertexSet;

            auto component_words(CliqueIndex i) const -> std::span<const BitWord>
            {
                return { _bits.data() + i * _words, _words };
            }

            auto component_contains(CliqueIndex i, Vertex v) const -> bool
            {
                return (_bits[i * _words + v / bits_per_word] >> (v % bits_per_word)) & 1;
            }

            auto component_empty(CliqueIndex i) const -> bool;

            auto erase(CliqueIndex i, Vertex v) -> void
            {
                _bits[i * _words + v / bits_per_word] &= ~(BitWord{ 1 } << (v % bits_per_word));
            }

            friend auto operator== (const Configuration &, const Configuration &) -> bool = default;
    };

    /**
     * Keeps v in component i only, removing it from every other component.
     * Throws std::invalid_argument unless v is in component i.
     */
    auto apply_decision(const CoverContext & ctx, const Configuration & cfg, Vertex v, CliqueIndex i) -> Configuration;

    /// The nonempty components as a partition.
    auto repr(const Configuration & cfg) -> Partition;

    /**
     * Whether cfg, reached by the decisions (one clique index per shared
     * vertex, in shared order, the last one just made), is a node below which
     * no answer is wanted: every leaf would be a non-maximal partition, or a
     * duplicate of a partition produced by a canonical leaf elsewhere.
     *
     * Only the components touched by the last decision are examined, so the
     * result is meaningful when the parent node already passed this check.
     */
    auto is_t1_or_t2(const CoverContext & ctx, std::span<const CliqueIndex> decisions, const Configuration & cfg) -> bool;

    /// Whether cfg has no nonempty component fitting inside a higher-indexed maximal clique.
    auto is_canonical(const CoverContext & ctx, const Configuration & cfg) -> bool;

    namespace detail
    {
        // Scratch state for the pruning test, so that the search loop does
        // not allocate.
        class PruningCheck
        {
            private:
                const CoverContext * _ctx = nullptr;
                std::size_t _words = 0;
                std::vector<BitWord> _all;
                std::vector<BitWord> _signatures;
                std::vector<unsigned char> _have_signature;
                std::vector<BitWord> _decided;
                std::vector<BitWord> _touched;

            public:
                PruningCheck() = default;
                explicit PruningCheck(const CoverContext & ctx);

                /// Writes the indices of maximal cliques containing component k of cfg.
                auto component_cliques(const Configuration & cfg, CliqueIndex k, std::span<BitWord> out) const -> void;

                auto rigid_free(const Configuration & cfg, CliqueIndex k) -> bool;

                auto operator() (const Configuration & cfg, std::span<const CliqueIndex> decisions) -> bool;
        };
    }

    /**
     * Lazy enumeration of every maximal clique-partition exactly once.
     *
     * Depth-first over the pruned decision tree: one decision per shared
     * vertex, candidates tried in ascending clique index. next() returns the
     * current answer and advances to the following one, so at most one answer
     * is materialised at a time. Holds a reference to the context, which must
     * outlive it.
     */
    class PartitionEnumerator
    {
        public:
            static constexpr CliqueIndex unassigned = std::numeric_limits<CliqueIndex>::max();

        private:
            const CoverContext * _ctx;
            std::vector<Configuration> _cfg;
            std::vector<CliqueIndex> _choice;
            std::size_t _depth = 0;
            std::size_t _floor = 0;
            std::size_t _target = 0;
            bool _finished = false;
            bool _pending_single = false;
            detail::PruningCheck _check;

            PartitionEnumerator(const CoverContext & ctx, std::span<const CliqueIndex> prefix, std::size_t target);

            auto find_next() -> void;

        public:
            explicit PartitionEnumerator(const CoverContext & ctx);

            /**
             * An enumerator over the subtree below a fixed decision prefix, as
             * produced by frontier(). Draining every frontier subtree yields
             * each answer exactly once overall.
             */
            static auto restricted(const CoverContext & ctx, std::span<const CliqueIndex> prefix) -> PartitionEnumerator;

            /// Decision prefixes of the surviving search nodes at the given depth (capped at the number of shared vertices).
            static auto frontier(const CoverContext & ctx, std::size_t depth) -> std::vector<std::vector<CliqueIndex>>;

            auto has_next() const -> bool
            {
                return ! _finished;
            }

            auto next() -> std::optional<Partition>;

            /// Moves past the current answer without building it.
            auto skip() -> void;

            /// The configuration next() would return, valid while has_next().
            auto current() const -> const Configuration &;

            /// Decisions made so far, one per shared vertex up to the current depth.
            auto decisions() const -> std::span<const CliqueIndex>
            {
                return { _choice.data(), _depth };
            }

            auto context() const -> const CoverContext &
            {
                return *_ctx;
            }
    };

    auto count_partitions(const CoverContext & ctx) -> BigCount;

    /**
     * Counts by draining the frontier subtrees at split_depth on a pool of
     * worker threads, each with its own enumerator, and summing.
     */
    auto count_partitions_parallel(const CoverContext & ctx, unsigned threads, std::size_t split_depth = 1) -> BigCount;
}
