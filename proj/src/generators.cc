#include <mcpart/generators.hh>

#include <stdexcept>

using namespace mcpart;

namespace
{
    using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

    auto add_clique(EdgeList & edges, const std::vector<Vertex> & members) -> void
    {
        for (std::size_t a = 0 ; a < members.size() ; ++a)
            for (std::size_t b = a + 1 ; b < members.size() ; ++b)
                edges.emplace_back(members[a], members[b]);
    }

    auto range(Vertex first, Vertex last) -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (auto v = first ; v < last ; ++v)
            result.push_back(v);
        return result;
    }
}

auto mcpart::gen_gn(std::size_t n) -> Graph
{
    if (n < 2)
        throw std::invalid_argument("gen_gn: n must be at least 2");

    EdgeList edges;
    add_clique(edges, range(0, n));
    for (Vertex i = 0 ; i < n ; ++i)
        edges.emplace_back(i, n + i);
    return Graph(2 * n, edges);
}

auto mcpart::gen_hn(std::size_t n) -> Graph
{
    if (n < 2)
        throw std::invalid_argument("gen_hn: n must be at least 2");

    EdgeList edges;
    add_clique(edges, range(0, 2 * n));
    add_clique(edges, range(2 * n, 4 * n));
    add_clique(edges, range(n, 3 * n));
    return Graph(4 * n, edges);
}

auto mcpart::gen_gmn(std::size_t m, std::size_t n) -> Graph
{
    if (m < 2 || n < 2)
        throw std::invalid_argument("gen_gmn: m and n must be at least 2");

    EdgeList edges;
    for (Vertex i = 0 ; i < n ; ++i)
        add_clique(edges, range(i, i + m));
    return Graph(m + n - 1, edges);
}

auto mcpart::gen_two_clique(std::size_t n) -> Graph
{
    if (n < 1)
        throw std::invalid_argument("gen_two_clique: n must be at least 1");

    EdgeList edges;
    auto first = range(0, n), second = range(0, n);
    first.push_back(n);
    second.push_back(n + 1);
    add_clique(edges, first);
    add_clique(edges, second);
    return Graph(n + 2, edges);
}
