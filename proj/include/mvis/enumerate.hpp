#pragma once

#include "mvis/graph.hpp"

#include <vector>

namespace mvis
{

/// Canonical labelling by colour refinement plus exhaustive individualisation
/// (no automorphism pruning, so it is meant for small graphs). Two graphs are
/// isomorphic iff their codes are equal.
struct CanonicalForm
{
    /// order[i] is the original vertex placed at position i.
    std::vector<Vertex> order;
    /// Upper-triangle adjacency bits in canonical order, packed row by row.
    std::vector<bits::Word> code;
};

CanonicalForm canonical_form(const Graph & g);
bool isomorphic(const Graph & a, const Graph & b);

/// The graph relabelled into canonical order.
Graph canonical_graph(const Graph & g);

/// Every connected graph on n vertices up to isomorphism, in canonical form and
/// sorted by canonical code. Refuses n > 9.
std::vector<Graph> connected_graphs(std::size_t n);

/// Connected graphs on 1..n vertices, concatenated by order.
std::vector<Graph> connected_graphs_up_to(std::size_t n);

}
