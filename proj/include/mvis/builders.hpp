#pragma once

#include "mvis/graph.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvis
{

/// Parse tree of the family syntax, e.g. `strong(path:12,path:12)`,
/// `subdivision(complete:4)`, `hamming:3,3,3`.
///
/// Atoms: path:n cycle:n complete:n empty:n star:n (K_{1,n}) biclique:r,s
/// petersen tree:seed,n hamming:d1,...,dk.
/// Combinators: cartesian strong lex direct corona (two arguments each) and
/// subdivision (one argument).
struct FamilySpec
{
    std::string name;
    std::vector<long long> params;
    std::vector<FamilySpec> args;
    std::size_t position = 0;

    std::string to_string() const;
};

/// Throws InputError carrying the character offset of the problem.
FamilySpec parse_family(std::string_view text);

/// Number of vertices the spec would produce, without building it.
std::size_t family_order(const FamilySpec & spec);

/// Graphs above this order are refused.
inline constexpr std::size_t kMaxBuildOrder = 1'000'000;

Graph build(const FamilySpec & spec);
Graph build(std::string_view text);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph biclique(std::size_t r, std::size_t s);
Graph petersen_graph();
Graph hamming_graph(std::span<const std::size_t> dims);

/// Decodes a Pruefer sequence over 0..n-1 (n = code.size() + 2).
Graph tree_from_pruefer(std::span<const Vertex> code);
/// Uniform labelled tree on n vertices from a seeded Pruefer sequence.
Graph random_tree(std::uint64_t seed, std::size_t n);

/// Product vertices are ordered row-major, (g, h) -> g * n(h) + h, and
/// labelled "(g,h)" with the factor labels.
Graph cartesian_product(const Graph & g, const Graph & h);
Graph strong_product(const Graph & g, const Graph & h);
Graph lexicographic_product(const Graph & g, const Graph & h);
Graph direct_product(const Graph & g, const Graph & h);

/// G first, then copy j of H (attached to vertex j of G) at n(G) + j*n(H) + h.
Graph corona(const Graph & g, const Graph & h);

/// Originals keep indices 0..n-1; the vertex subdividing the k-th edge (in
/// lexicographic edge order) is n + k and labelled "e_{u,v}".
Graph subdivision(const Graph & g);

enum class FiberKind
{
    g_fiber, ///< G^h = {(g, h) : g in V(G)} for a fixed h
    h_fiber, ///< ^gH = {(g, h) : h in V(H)} for a fixed g
};

/// Throws PreconditionError when `product` was not built by a product builder.
VertexSet fiber(const Graph & product, FiberKind which, Vertex at);

/// Seeded connected G(n, p)-style graph: a random spanning tree plus each
/// remaining pair independently with probability p.
Graph random_connected_graph(std::mt19937_64 & rng, std::size_t n, double p);

/// Like random_connected_graph but only adds edges that keep it triangle-free.
Graph random_triangle_free_graph(std::mt19937_64 & rng, std::size_t n, double p);

}
