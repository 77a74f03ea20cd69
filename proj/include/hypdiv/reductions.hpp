#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypdiv/core.hpp"
#include "hypdiv/graph.hpp"

namespace hypdiv {

/// Independent Set (G, k) to the diversity instance (M, k, 2n-4) with
/// d = m + n(n-1): incidence bits on the first m coordinates, then n-1
/// private coordinates per vertex, the first n-1-deg(v_i) of them set.
/// Adjacent pairs end up at distance 2n-4, others at 2n-2.
/// Throws ContractError for n < 2.
Instance reduce_is_to_diversity(const Graph & g, std::size_t k);

enum class R2Mode {
    Verbatim,       ///< v_i on {i, i+1}
    DisjointPairs,  ///< v_i on {2i-1, 2i}
};

std::string to_string(R2Mode mode);

/// Independent Set (G, k) to (M, |E|+k, 2) with d = 2n. Rows: the n vertex
/// rows, then e¹, e² for every edge in input order.
Instance reduce_is_to_r2(const Graph & g, std::size_t k, R2Mode mode);

/// Rows r_1..r_n (unit vectors), then for each edge e_l = {v_i, v_j} the row
/// r_e on {i, j} followed by r_e' on {i, j, n+l}. Dimension n + m.
std::vector<PartialVector> embed_subdivided(const Graph & h);

/// H with every edge subdivided once and a leaf hung on each subdivision
/// vertex, numbered to match embed_subdivided: v_i -> i, the subdivision
/// vertex of e_l -> n+2l-1, its leaf -> n+2l.
Graph subdivide_with_leaves(const Graph & h);

/// G' of the r = 2 reduction: every edge subdivided twice, numbered like
/// reduce_is_to_r2's rows: v_i -> i, e¹ of e_l -> n+2l-1, e² -> n+2l.
Graph subdivide_twice(const Graph & g);

/// Vertices = rows (row i is vertex i+1); {i, j} is an edge iff the Hamming
/// distance lies in [1, r]. Throws ContractError on unknown entries.
Graph distance_graph(const std::vector<PartialVector> & rows, std::size_t r);

/// One cell of the r = 2 reduction harness.
struct R2HarnessRecord
{
    std::size_t graph_index = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    R2Mode mode = R2Mode::Verbatim;
    bool independent_set_exists = false;  ///< exhaustive IS(G) >= k
    bool diversity_yes = false;           ///< oracle on (M, |E|+k, 2)
    bool agree = false;
    bool distance_graph_matches = false;  ///< distance-<=2 graph of M equals G'
};

/// Runs both coordinate schemes for every graph and k, recording agreement
/// rather than asserting it.
std::vector<R2HarnessRecord> run_r2_harness(const std::vector<Graph> & graphs, const std::vector<std::size_t> & ks);

} // namespace hypdiv
