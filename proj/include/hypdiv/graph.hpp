#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypdiv/error.hpp"

namespace hypdiv {

/// Simple undirected graph on vertices 1..n. Edges keep their input order
/// (the reductions depend on it) and are stored with u < v.
class Graph
{
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;

    /// Throws ContractError on loops, duplicate edges or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge> & edges() const { return edges_; }

    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    /// Edge set as sorted pairs, for order-insensitive comparison.
    std::vector<Edge> sorted_edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> adjacency_;  // n*n, 0-based
};

/// `n m` header, then m lines `u v` with 1 <= u < v <= n. `#` and blank lines skipped.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph & g);

/// Size of a maximum independent set, by exhaustive search (n <= 30).
std::size_t maximum_independent_set_size(const Graph & g);

} // namespace hypdiv
