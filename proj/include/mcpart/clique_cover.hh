#pragma once

#include <mcpart/bitset.hh>
#include <mcpart/count.hh>
#include <mcpart/graph.hh>

#include <optional>
#include <vector>

namespace mcpart
{
    /**
     * The maximal clique cover of a graph together with the per-vertex
     * metadata the partition enumerator works from.
     *
     * Clique indices are 0-based positions in cliques(). A clique index is
     * rigid when some vertex belongs to that clique only; such a component
     * can never become empty. Shared vertices are those in two or more
     * maximal cliques, in the order decisions are made for them.
     */
    class CoverContext
    {
        private:
            Graph _graph;
            std::vector<VertexSet> _cliques;
            std::vector<CliqueSet> _cliques_of;
            CliqueSet _rigid;
            std::vector<Vertex> _shared;

            friend auto build_cover_context(Graph, std::vector<VertexSet>, std::optional<std::vector<Vertex>>) -> CoverContext;

        public:
            auto graph() const -> const Graph &
            {
                return _graph;
            }

            auto clique_count() const -> std::size_t
            {
                return _cliques.size();
            }

            auto cliques() const -> const std::vector<VertexSet> &
            {
                return _cliques;
            }

            auto clique(CliqueIndex i) const -> const VertexSet &
            {
                return _cliques[i];
            }

            auto cliques_of(Vertex v) const -> const CliqueSet &
            {
                return _cliques_of[v];
            }

            /// Number of maximal cliques containing v.
            auto degree(Vertex v) const -> std::size_t
            {
                return _cliques_of[v].count();
            }

            auto rigid() const -> const CliqueSet &
            {
                return _rigid;
            }

            auto shared() const -> const std::vector<Vertex> &
            {
                return _shared;
            }

            auto empty_clique_set() const -> CliqueSet
            {
                return CliqueSet(_cliques.size());
            }
    };

    /**
     * Every maximal clique exactly once, sorted lexicographically by ascending
     * member ids. Isolated vertices give singleton cliques.
     */
    auto maximal_cliques(const Graph & graph) -> std::vector<VertexSet>;

    /**
     * Assembles the cover metadata. The cliques must be exactly the maximal
     * cliques of the graph, in the order to be used for indexing. The shared
     * vertices default to ascending id order; a custom order must be a
     * permutation of the shared vertices.
     *
     * Throws InvariantError if some vertex lies in no clique.
     */
    auto build_cover_context(Graph graph, std::vector<VertexSet> cliques,
            std::optional<std::vector<Vertex>> shared_order = std::nullopt) -> CoverContext;

    /// Maximal cliques in canonical order, shared vertices ascending.
    auto build_cover_context(const Graph & graph) -> CoverContext;

    /// Indices of the maximal cliques containing every member; empty iff members is not a clique.
    auto cliques_of_set(const CoverContext & ctx, const VertexSet & members) -> CliqueSet;

    /// Product of the clique degrees over all vertices.
    auto count_upper_bound(const CoverContext & ctx) -> BigCount;
}
