#include "hypdiv/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace hypdiv {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n * n, 0)
{
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw ContractError("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (u < 1 || v > n)
            throw ContractError("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} out of range 1.." +
                                std::to_string(n));
        auto & cell = adjacency_[(u - 1) * n + (v - 1)];
        if (cell)
            throw ContractError("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        cell = adjacency_[(v - 1) * n + (u - 1)] = 1;
        edges_.emplace_back(u, v);
    }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
    if (u < 1 || v < 1 || u > n_ || v > n_)
        return false;
    return adjacency_[(u - 1) * n_ + (v - 1)] != 0;
}

std::size_t Graph::degree(std::size_t v) const
{
    std::size_t d = 0;
    for (std::size_t u = 1; u <= n_; ++u)
        d += adjacent(v, u);
    return d;
}

std::vector<Graph::Edge> Graph::sorted_edges() const
{
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Graph::Edge> edges;

    auto read_pair = [&](const std::string & s, std::size_t & a, std::size_t & b) {
        std::istringstream fields(s);
        std::string x, y, extra;
        if (!(fields >> x >> y) || (fields >> extra))
            throw ParseError(number, "expected two numbers");
        for (auto [token, out] : {std::pair{&x, &a}, std::pair{&y, &b}}) {
            auto [ptr, ec] = std::from_chars(token->data(), token->data() + token->size(), *out);
            if (ec != std::errc{} || ptr != token->data() + token->size())
                throw ParseError(number, "'" + *token + "' is not a non-negative integer");
        }
    };

    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::size_t a = 0, b = 0;
        read_pair(line, a, b);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (edges.size() == m)
            throw ParseError(number, "more than m = " + std::to_string(m) + " edges");
        if (!(1 <= a && a < b && b <= n))
            throw ParseError(number, "edge must satisfy 1 <= u < v <= n");
        edges.emplace_back(a, b);
    }
    if (!have_header)
        throw ParseError(1, "missing header 'n m'");
    if (edges.size() != m)
        throw ParseError(number, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    }
    catch (const ContractError & e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_graph(const Graph & g)
{
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::size_t maximum_independent_set_size(const Graph & g)
{
    if (g.n() > 30)
        throw ContractError("exhaustive independent set limited to 30 vertices");
    std::vector<std::uint32_t> neighbours(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        neighbours[u - 1] |= 1u << (v - 1);
        neighbours[v - 1] |= 1u << (u - 1);
    }
    std::size_t best = 0;
    const std::uint64_t total = std::uint64_t{1} << g.n();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto set = static_cast<std::uint32_t>(mask);
        const auto size = static_cast<std::size_t>(std::popcount(set));
        if (size <= best)
            continue;
        bool independent = true;
        for (std::size_t v = 0; v < g.n() && independent; ++v)
            if (((set >> v) & 1) && (neighbours[v] & set))
                independent = false;
        if (independent)
            best = size;
    }
    return best;
}

} // namespace hypdiv
