#include <mcpart/partition.hh>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

using namespace mcpart;

Partition::Partition(std::vector<VertexSet> blocks) :
    _blocks(std::move(blocks))
{
    for (auto & b : _blocks)
        if (b.empty())
            throw std::invalid_argument("Partition: empty block");

    std::sort(_blocks.begin(), _blocks.end(), [] (const VertexSet & a, const VertexSet & b) {
            return a.first() < b.first();
            });
}

auto mcpart::operator<=> (const Partition & a, const Partition & b) -> std::strong_ordering
{
    return std::lexicographical_compare_three_way(
            a._blocks.begin(), a._blocks.end(), b._blocks.begin(), b._blocks.end());
}

auto mcpart::to_json_line(const Graph & graph, const Partition & partition) -> std::string
{
    auto result = nlohmann::json::array();
    for (auto & block : partition.blocks()) {
        auto labels = nlohmann::json::array();
        block.for_each([&] (Vertex v) { labels.push_back(graph.label(v)); });
        result.push_back(std::move(labels));
    }
    return result.dump();
}
