#pragma once

#include <mcpart/bitset.hh>
#include <mcpart/errors.hh>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcpart
{
    /**
     * Immutable undirected simple graph on the dense vertex ids 0..n-1.
     * Adjacency is symmetric and loop-free; both are checked on construction.
     */
    class Graph
    {
        private:
            std::size_t _size = 0;
            std::vector<VertexSet> _adjacency;
            std::vector<std::string> _labels;

        public:
            Graph() = default;

            /// Labels may be empty, in which case vertices are labelled by their decimal id.
            Graph(std::size_t size, const std::vector<std::pair<Vertex, Vertex>> & edges,
                    std::vector<std::string> labels = {});

            auto size() const -> std::size_t
            {
                return _size;
            }

            auto adjacent(Vertex a, Vertex b) const -> bool
            {
                return _adjacency[a].contains(b);
            }

            auto neighbourhood(Vertex v) const -> const VertexSet &
            {
                return _adjacency[v];
            }

            auto degree(Vertex v) const -> std::size_t
            {
                return _adjacency[v].count();
            }

            auto edge_count() const -> std::size_t;

            /// Edges as (smaller id, larger id), sorted.
            auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

            auto label(Vertex v) const -> std::string;

            auto has_labels() const -> bool
            {
                return ! _labels.empty();
            }

            auto empty_set() const -> VertexSet
            {
                return VertexSet(_size);
            }

            auto all_vertices() const -> VertexSet
            {
                return VertexSet::full(_size);
            }
    };

    /**
     * Whitespace-separated "u v" lines; a single-token line declares a vertex.
     * Vertex ids are assigned by first appearance and labels are kept.
     */
    auto parse_edge_list(std::string_view text) -> Graph;

    /// DIMACS "p edge n m" / "e u v" with 1-based ids; labels become "1".."n".
    auto parse_dimacs(std::string_view text) -> Graph;

    /// Edge list that parse_edge_list reads back with the same id assignment.
    auto serialize_edge_list(const Graph & graph) -> std::string;

    auto serialize_dimacs(const Graph & graph) -> std::string;

    /// True iff every pair of members is adjacent. Throws std::invalid_argument on an empty set.
    auto is_clique(const Graph & graph, const VertexSet & members) -> bool;
}
