#include <mcpart/graph.hh>

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

using namespace mcpart;

namespace
{
    auto tokenise(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> result;
        std::size_t pos = 0;
        auto is_space = [] (char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
        while (pos < line.size()) {
            while (pos < line.size() && is_space(line[pos]))
                ++pos;
            auto start = pos;
            while (pos < line.size() && ! is_space(line[pos]))
                ++pos;
            if (pos > start)
                result.push_back(line.substr(start, pos - start));
        }
        return result;
    }

    template <typename Fn_>
    auto for_each_line(std::string_view text, Fn_ && fn) -> void
    {
        std::size_t line_number = 0, pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_number;
            fn(line_number, tokenise(text.substr(pos, end - pos)));
            pos = end + 1;
        }
    }

    auto parse_count(std::string_view token, std::size_t line, const char * what) -> std::size_t
    {
        std::size_t result = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), result);
        if (ec != std::errc{ } || ptr != token.data() + token.size())
            throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(token) + "'");
        return result;
    }
}

Graph::Graph(std::size_t size, const std::vector<std::pair<Vertex, Vertex>> & edges, std::vector<std::string> labels) :
    _size(size),
    _adjacency(size, VertexSet(size)),
    _labels(std::move(labels))
{
    if (! _labels.empty() && _labels.size() != size)
        throw std::invalid_argument("Graph: label count does not match vertex count");

    for (auto & [a, b] : edges) {
        if (a >= size || b >= size)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(a));
        _adjacency[a].insert(b);
        _adjacency[b].insert(a);
    }
}

auto Graph::edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto & a : _adjacency)
        total += a.count();
    return total / 2;
}

auto Graph::edges() const -> std::vector<std::pair<Vertex, Vertex>>
{
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex a = 0 ; a < _size ; ++a)
        _adjacency[a].for_each([&] (Vertex b) {
            if (a < b)
                result.emplace_back(a, b);
        });
    return result;
}

auto Graph::label(Vertex v) const -> std::string
{
    return _labels.empty() ? std::to_string(v) : _labels[v];
}

auto mcpart::parse_edge_list(std::string_view text) -> Graph
{
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;

    auto id_of = [&] (std::string_view token) -> Vertex {
        auto [it, inserted] = ids.emplace(std::string(token), labels.size());
        if (inserted)
            labels.emplace_back(token);
        return it->second;
    };

    for_each_line(text, [&] (std::size_t line, const std::vector<std::string_view> & tokens) {
        if (tokens.empty() || tokens.front().starts_with('#'))
            return;
        if (tokens.size() == 1)
            id_of(tokens[0]);
        else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                throw ParseError(line, "self-loop on vertex '" + std::string(tokens[0]) + "'");
            auto a = id_of(tokens[0]);
            auto b = id_of(tokens[1]);
            edges.emplace_back(a, b);
        }
        else
            throw ParseError(line, "expected one or two tokens, got " + std::to_string(tokens.size()));
    });

    auto n = labels.size();
    return Graph(n, edges, std::move(labels));
}

auto mcpart::parse_dimacs(std::string_view text) -> Graph
{
    bool seen_problem = false;
    std::size_t n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    for_each_line(text, [&] (std::size_t line, const std::vector<std::string_view> & tokens) {
        if (tokens.empty() || tokens[0] == "c")
            return;
        if (tokens[0] == "p") {
            if (seen_problem)
                throw ParseError(line, "duplicate 'p' line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                throw ParseError(line, "expected 'p edge <n> <m>'");
            n = parse_count(tokens[2], line, "vertex count");
            parse_count(tokens[3], line, "edge count");
            seen_problem = true;
        }
        else if (tokens[0] == "e") {
            if (! seen_problem)
                throw ParseError(line, "'e' line before 'p' line");
            if (tokens.size() != 3)
                throw ParseError(line, "expected 'e <u> <v>'");
            auto a = parse_count(tokens[1], line, "vertex");
            auto b = parse_count(tokens[2], line, "vertex");
            for (auto v : { a, b })
                if (v < 1 || v > n)
                    throw ParseError(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (a == b)
                throw ParseError(line, "self-loop on vertex " + std::to_string(a));
            edges.emplace_back(a - 1, b - 1);
        }
        else
            throw ParseError(line, "unrecognised line type '" + std::string(tokens[0]) + "'");
    });

    if (! seen_problem)
        throw ParseError(0, "missing 'p edge <n> <m>' line");

    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t v = 1 ; v <= n ; ++v)
        labels.push_back(std::to_string(v));
    return Graph(n, edges, std::move(labels));
}

auto mcpart::serialize_edge_list(const Graph & graph) -> std::string
{
    auto edges = graph.edges();

    // If reading the edges back would not reproduce the id order, or some
    // vertex is isolated, declare every vertex up front.
    std::vector<Vertex> appearance;
    VertexSet seen = graph.empty_set();
    for (auto & [a, b] : edges)
        for (auto v : { a, b })
            if (! seen.contains(v)) {
                seen.insert(v);
                appearance.push_back(v);
            }
    bool in_order = appearance.size() == graph.size();
    for (std::size_t i = 0 ; in_order && i < appearance.size() ; ++i)
        in_order = appearance[i] == i;

    std::ostringstream out;
    if (! in_order)
        for (Vertex v = 0 ; v < graph.size() ; ++v)
            out << graph.label(v) << '\n';
    for (auto & [a, b] : edges)
        out << graph.label(a) << ' ' << graph.label(b) << '\n';
    return out.str();
}

auto mcpart::serialize_dimacs(const Graph & graph) -> std::string
{
    auto edges = graph.edges();
    std::ostringstream out;
    out << "p edge " << graph.size() << ' ' << edges.size() << '\n';
    for (auto & [a, b] : edges)
        out << "e " << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

auto mcpart::is_clique(const Graph & graph, const VertexSet & members) -> bool
{
    if (members.empty())
        throw std::invalid_argument("is_clique: empty vertex set");

    bool result = true;
    members.for_each([&] (Vertex v) {
        if (! result)
            return;
        // every other member must be a neighbour of v
        auto others = members;
        others.erase(v);
        if (! others.is_subset_of(graph.neighbourhood(v)))
            result = false;
    });
    return result;
}
