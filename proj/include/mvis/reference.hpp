#pragma once

#include "mvis/geodesic.hpp"
#include "mvis/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

// Slow, obviously-correct implementations used as test oracles and as the
// serial baselines in the benchmark. Nothing here shares code with the
// optimised kernels beyond the Graph type.
namespace mvis::reference
{

/// One plain BFS per source, no parallelism.
AllPairs bfs_all_pairs(const Graph & g);

/// Every shortest u,v-path as an explicit vertex sequence.
std::vector<std::vector<Vertex>> geodesics(const Graph & g, Vertex u, Vertex v);

VertexSet interval(const Graph & g, Vertex u, Vertex v);

/// Convexity by explicit geodesic enumeration.
bool is_convex(const Graph & g, const VertexSet & s);

/// Longest convex path by trying every simple path. Small graphs only.
int longest_convex_path(const Graph & g);

/// Mutual visibility by explicit geodesic enumeration.
bool is_mv_set(const Graph & g, const VertexSet & x);
bool is_imv_set(const Graph & g, const VertexSet & x);

/// Validity of every subset of V(g), indexed by bitmask. Requires n <= 24.
std::vector<char> subset_table(const Graph & g, const std::function<bool(const VertexSet &)> & valid);

/// Largest valid subset size.
int max_valid(const std::vector<char> & table);
/// Fewest valid sets partitioning V(g); -1 if impossible.
int min_partition(std::size_t n, const std::vector<char> & table);

int mu(const Graph & g);
int mu_i(const Graph & g);
int alpha(const Graph & g);
int omega(const Graph & g);
int chi(const Graph & g);
int chi_defective1(const Graph & g);
int chi_mu(const Graph & g);
int chi_mu_i(const Graph & g);

}
