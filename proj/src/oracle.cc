#include <mcpart/oracle.hh>

using namespace mcpart;

auto mcpart::brute_force_all_partitions(const CoverContext & ctx, std::uint64_t leaf_cap) -> std::set<Partition>
{
    std::set<Partition> result;
    auto & graph = ctx.graph();
    auto & shared = ctx.shared();
    if (ctx.clique_count() == 0)
        return result;

    std::vector<std::vector<CliqueIndex>> options;
    std::uint64_t leaves = 1;
    for (auto v : shared) {
        options.push_back(ctx.cliques_of(v).members());
        if (leaves > leaf_cap / options.back().size())
            throw SizeLimitError("brute_force_all_partitions: more than " + std::to_string(leaf_cap) + " leaves");
        leaves *= options.back().size();
    }

    // Every leaf is a partition into cliques by construction, so a leaf is
    // rejected early when two of its blocks merge into a clique. Survivors
    // still go through the full is_maximal_partition check.
    auto mergeable = [&] (const VertexSet & a, const VertexSet & b) {
        bool all = true;
        a.for_each([&] (Vertex u) { all = all && b.is_subset_of(graph.neighbourhood(u)); });
        return all;
    };

    std::vector<std::size_t> digit(shared.size(), 0);
    std::vector<VertexSet> blocks;
    while (true) {
        blocks = ctx.cliques();
        for (std::size_t k = 0 ; k < shared.size() ; ++k)
            for (auto i : options[k])
                if (i != options[k][digit[k]])
                    blocks[i].erase(shared[k]);

        std::erase_if(blocks, [] (const VertexSet & b) { return b.empty(); });
        bool merge = false;
        for (std::size_t a = 0 ; a < blocks.size() && ! merge ; ++a)
            for (std::size_t b = a + 1 ; b < blocks.size() && ! merge ; ++b)
                merge = mergeable(blocks[a], blocks[b]);

        if (! merge) {
            Partition candidate(blocks);
            if (is_maximal_partition(graph, candidate))
                result.insert(std::move(candidate));
        }

        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == options[k].size())
            digit[k++] = 0;
        if (k == digit.size())
            break;
    }

    return result;
}

auto mcpart::is_maximal_partition(const Graph & graph, const Partition & partition) -> bool
{
    auto covered = graph.empty_set();
    std::size_t total = 0;
    for (auto & block : partition.blocks()) {
        if (block.size() != graph.size() || block.empty() || ! is_clique(graph, block))
            return false;
        covered.unite_with(block);
        total += block.count();
    }
    if (total != graph.size() || covered.count() != graph.size())
        return false;

    auto & blocks = partition.blocks();
    for (std::size_t a = 0 ; a < blocks.size() ; ++a)
        for (std::size_t b = a + 1 ; b < blocks.size() ; ++b)
            if (is_clique(graph, blocks[a] | blocks[b]))
                return false;
    return true;
}

auto mcpart::brute_force_set_partitions(const Graph & graph) -> std::set<Partition>
{
    // the empty graph has no cliques, so nothing is reported, as above
    std::set<Partition> result;
    if (graph.size() == 0)
        return result;

    std::vector<VertexSet> blocks;
    auto place = [&] (auto & self, Vertex v) -> void {
        if (v == graph.size()) {
            Partition candidate(blocks);
            if (is_maximal_partition(graph, candidate))
                result.insert(std::move(candidate));
            return;
        }

        // indices, since the recursion appends to blocks
        for (std::size_t b = 0, end = blocks.size() ; b < end ; ++b)
            if (blocks[b].is_subset_of(graph.neighbourhood(v))) {
                blocks[b].insert(v);
                self(self, v + 1);
                blocks[b].erase(v);
            }

        blocks.emplace_back(graph.size(), std::initializer_list<Vertex>{ v });
        self(self, v + 1);
        blocks.pop_back();
    };
    place(place, 0);
    return result;
}
