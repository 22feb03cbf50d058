#pragma once

#include <mcpart/bitset.hh>
#include <mcpart/graph.hh>

#include <compare>
#include <string>
#include <vector>

namespace mcpart
{
    /**
     * A set of nonempty vertex sets, held in canonical order: blocks sorted by
     * their smallest member. Two partitions with the same blocks compare equal
     * regardless of the order the blocks were supplied in.
     */
    class Partition
    {
        private:
            std::vector<VertexSet> _blocks;

        public:
            Partition() = default;

            /// Throws std::invalid_argument if a block is empty.
            explicit Partition(std::vector<VertexSet> blocks);

            auto blocks() const -> const std::vector<VertexSet> &
            {
                return _blocks;
            }

            auto size() const -> std::size_t
            {
                return _blocks.size();
            }

            friend auto operator== (const Partition &, const Partition &) -> bool = default;
            friend auto operator<=> (const Partition & a, const Partition & b) -> std::strong_ordering;
    };

    auto operator<=> (const Partition & a, const Partition & b) -> std::strong_ordering;

    /**
     * One JSONL record: an array of blocks, each an array of vertex labels as
     * strings, with no whitespace. For example [["1","2","3"],["4","5"],["6","7"]].
     */
    auto to_json_line(const Graph & graph, const Partition & partition) -> std::string;
}
