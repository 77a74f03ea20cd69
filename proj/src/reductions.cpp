#include "hypdiv/reductions.hpp"
#include "hypdiv/solver.hpp"

namespace hypdiv {

namespace {

    PartialVector ones_at(std::size_t d, std::initializer_list<std::size_t> coordinates_1based)
    {
        PartialVector v(d);
        for (auto c : coordinates_1based)
            v.set(c - 1, Cell::One);
        return v;
    }

} // namespace

Instance reduce_is_to_diversity(const Graph & g, std::size_t k)
{
    const auto n = g.n(), m = g.m();
    if (n < 2)
        throw ContractError("the reduction needs n >= 2 (r = 2n - 4 would be negative)");

    const auto d = m + n * (n - 1);
    std::vector<PartialVector> rows;
    rows.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        PartialVector a(d);
        for (std::size_t j = 0; j < m; ++j) {
            const auto [u, v] = g.edges()[j];
            if (u == i || v == i)
                a.set(j, Cell::One);
        }
        const auto block = m + (i - 1) * (n - 1);
        const auto set_count = n - 1 - g.degree(i);
        for (std::size_t c = 0; c < set_count; ++c)
            a.set(block + c, Cell::One);
        rows.push_back(std::move(a));
    }
    return Instance(d, k, 2 * n - 4, std::move(rows));
}

std::string to_string(R2Mode mode) { return mode == R2Mode::Verbatim ? "verbatim" : "disjoint-pairs"; }

Instance reduce_is_to_r2(const Graph & g, std::size_t k, R2Mode mode)
{
    const auto n = g.n();
    const auto d = 2 * n;
    // the two coordinates owned by vertex i (1-based)
    auto first = [mode](std::size_t i) { return mode == R2Mode::Verbatim ? i : 2 * i - 1; };
    auto second = [mode](std::size_t i) { return mode == R2Mode::Verbatim ? i + 1 : 2 * i; };

    std::vector<PartialVector> rows;
    rows.reserve(n + 2 * g.m());
    for (std::size_t i = 1; i <= n; ++i)
        rows.push_back(ones_at(d, {first(i), second(i)}));
    for (auto [i, j] : g.edges()) {
        rows.push_back(ones_at(d, {first(i), second(i), first(j)}));
        rows.push_back(ones_at(d, {first(j), second(j), first(i)}));
    }
    return Instance(d, g.m() + k, 2, std::move(rows));
}

std::vector<PartialVector> embed_subdivided(const Graph & h)
{
    const auto n = h.n(), m = h.m();
    const auto d = n + m;
    std::vector<PartialVector> rows;
    rows.reserve(n + 2 * m);
    for (std::size_t i = 1; i <= n; ++i)
        rows.push_back(ones_at(d, {i}));
    for (std::size_t l = 1; l <= m; ++l) {
        const auto [i, j] = h.edges()[l - 1];
        rows.push_back(ones_at(d, {i, j}));
        rows.push_back(ones_at(d, {i, j, n + l}));
    }
    return rows;
}

Graph subdivide_with_leaves(const Graph & h)
{
    const auto n = h.n();
    std::vector<Graph::Edge> edges;
    for (std::size_t l = 1; l <= h.m(); ++l) {
        const auto [i, j] = h.edges()[l - 1];
        const auto middle = n + 2 * l - 1, leaf = n + 2 * l;
        edges.emplace_back(i, middle);
        edges.emplace_back(j, middle);
        edges.emplace_back(middle, leaf);
    }
    return Graph(n + 2 * h.m(), std::move(edges));
}

Graph subdivide_twice(const Graph & g)
{
    const auto n = g.n();
    std::vector<Graph::Edge> edges;
    for (std::size_t l = 1; l <= g.m(); ++l) {
        const auto [i, j] = g.edges()[l - 1];
        const auto near_i = n + 2 * l - 1, near_j = n + 2 * l;
        edges.emplace_back(i, near_i);
        edges.emplace_back(near_i, near_j);
        edges.emplace_back(near_j, j);
    }
    return Graph(n + 2 * g.m(), std::move(edges));
}

Graph distance_graph(const std::vector<PartialVector> & rows, std::size_t r)
{
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].fully_known())
            throw ContractError("distance graph: row " + std::to_string(i) + " has unknown entries");
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto dist = delta(rows[i], rows[j]);
            if (dist >= 1 && dist <= r)
                edges.emplace_back(i + 1, j + 1);
        }
    return Graph(rows.size(), std::move(edges));
}

std::vector<R2HarnessRecord> run_r2_harness(const std::vector<Graph> & graphs, const std::vector<std::size_t> & ks)
{
    OracleLimits limits;
    limits.max_rows = 64;

    std::vector<R2HarnessRecord> out;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const auto & g = graphs[gi];
        const auto alpha = maximum_independent_set_size(g);
        const auto expected = subdivide_twice(g).sorted_edges();
        for (auto mode : {R2Mode::Verbatim, R2Mode::DisjointPairs}) {
            for (auto k : ks) {
                const auto instance = reduce_is_to_r2(g, k, mode);
                R2HarnessRecord rec;
                rec.graph_index = gi;
                rec.n = g.n();
                rec.m = g.m();
                rec.k = k;
                rec.mode = mode;
                rec.independent_set_exists = alpha >= k;
                rec.diversity_yes = oracle_solve(instance, limits).answer == Answer::Yes;
                rec.agree = rec.independent_set_exists == rec.diversity_yes;
                rec.distance_graph_matches = distance_graph(instance.rows(), 2).sorted_edges() == expected;
                out.push_back(rec);
            }
        }
    }
    return out;
}

} // namespace hypdiv
