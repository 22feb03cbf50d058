#include <mcpart/clique_cover.hh>

#include <algorithm>

using namespace mcpart;

namespace
{
    // Bron-Kerbosch with Tomita pivoting: the pivot maximises |P & N(pivot)|
    // over P | X, and only P - N(pivot) is branched on.
    auto expand(
            const Graph & graph,
            VertexSet & r,
            VertexSet p,
            VertexSet x,
            std::vector<VertexSet> & result) -> void
    {
        if (p.empty()) {
            if (x.empty())
                result.push_back(r);
            return;
        }

        Vertex pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        (p | x).for_each([&] (Vertex u) {
            auto score = (p & graph.neighbourhood(u)).count();
            if (! have_pivot || score > best) {
                pivot = u;
                best = score;
                have_pivot = true;
            }
        });

        auto branch = p;
        branch.subtract(graph.neighbourhood(pivot));
        branch.for_each([&] (Vertex v) {
            r.insert(v);
            expand(graph, r, p & graph.neighbourhood(v), x & graph.neighbourhood(v), result);
            r.erase(v);
            p.erase(v);
            x.insert(v);
        });
    }
}

auto mcpart::maximal_cliques(const Graph & graph) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    if (graph.size() == 0)
        return result;

    auto r = graph.empty_set();
    expand(graph, r, graph.all_vertices(), graph.empty_set(), result);
    std::sort(result.begin(), result.end());
    return result;
}

auto mcpart::build_cover_context(Graph graph, std::vector<VertexSet> cliques,
        std::optional<std::vector<Vertex>> shared_order) -> CoverContext
{
    auto n = graph.size();
    auto m = cliques.size();

    CoverContext ctx;
    ctx._cliques_of.assign(n, CliqueSet(m));
    ctx._rigid = CliqueSet(m);

    for (CliqueIndex i = 0 ; i < m ; ++i) {
        if (cliques[i].size() != n)
            throw std::invalid_argument("build_cover_context: clique universe does not match graph");
        cliques[i].for_each([&] (Vertex v) { ctx._cliques_of[v].insert(i); });
    }

    std::vector<Vertex> shared;
    for (Vertex v = 0 ; v < n ; ++v) {
        auto d = ctx._cliques_of[v].count();
        if (d == 0)
            throw InvariantError("build_cover_context: vertex " + graph.label(v) + " is covered by no clique");
        else if (d == 1)
            ctx._rigid.insert(ctx._cliques_of[v].first());
        else
            shared.push_back(v);
    }

    if (shared_order) {
        auto sorted = *shared_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != shared)
            throw std::invalid_argument("build_cover_context: shared order is not a permutation of the shared vertices");
        shared = std::move(*shared_order);
    }

    ctx._graph = std::move(graph);
    ctx._cliques = std::move(cliques);
    ctx._shared = std::move(shared);
    return ctx;
}

auto mcpart::build_cover_context(const Graph & graph) -> CoverContext
{
    return build_cover_context(graph, maximal_cliques(graph));
}

auto mcpart::cliques_of_set(const CoverContext & ctx, const VertexSet & members) -> CliqueSet
{
    if (members.empty())
        throw std::invalid_argument("cliques_of_set: empty vertex set");

    auto result = CliqueSet::full(ctx.clique_count());
    members.for_each([&] (Vertex v) { result.intersect_with(ctx.cliques_of(v)); });
    return result;
}

auto mcpart::count_upper_bound(const CoverContext & ctx) -> BigCount
{
    BigCount result = 1;
    for (Vertex v = 0 ; v < ctx.graph().size() ; ++v)
        result *= ctx.degree(v);
    return result;
}
