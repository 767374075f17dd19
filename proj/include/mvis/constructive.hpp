#pragma once

#include "mvis/chromatic.hpp"
#include "mvis/graph.hpp"
#include "mvis/ramsey.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mvis
{

/// A closed-form construction produced something that fails validation.
class ConstructionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// A colouring of `graph` built by one of the constructions below. It has
/// already passed validate_coloring in `mode` and uses at most claimed_k
/// classes; a construction that would break either throws ConstructionError.
struct ConstructedColoring
{
    Graph graph;
    Coloring coloring;
    std::string source;
    int claimed_k = 0;
    ColoringMode mode = ColoringMode::imv;
    /// Free-form remarks, e.g. when a fallback path was taken.
    std::vector<std::string> notes;
};

/// IMV colouring of C_n (vertex i is v_{i+1}) with ceil(n/3) classes, or 3
/// classes for n in {3, 5}.
ConstructedColoring cycle_imv(std::size_t n);

/// Turns an MV colouring of a tree into an IMV colouring with the same number
/// of classes by recolouring around monochromatic edges.
ConstructedColoring tree_exchange(const Graph & tree, const Coloring & start);

/// IMV colouring of a connected triangle-free graph with at most
/// ceil((n - mu_i) / 2) + 1 classes, built around a maximum IMV set.
ConstructedColoring trianglefree_imv(const Graph & g, const SearchOptions & opt = {});

/// Refines every class of an MV colouring by an optimal proper colouring of
/// the subgraph it induces.
ConstructedColoring product_coloring(const Graph & g, const Coloring & mv, const SearchOptions & opt = {});

/// {G^h, rest} for the first vertex h of the right factor. `gh` must come from
/// lexicographic_product.
ConstructedColoring lex_mv_2coloring(const Graph & gh);

/// An optimal proper colouring of a lexicographic product with a non-edgeless
/// right factor, which is automatically IMV there.
ConstructedColoring lex_imv(const Graph & gh, const SearchOptions & opt = {});

/// MV colouring of g □ K_n that gives (v, h) the colour of v in `imv`.
ConstructedColoring cartesian_prism_mv(const Graph & g, std::size_t n, const Coloring & imv);

/// IMV colouring of the strong product of P_t and P_r (t >= r >= 3) for
/// r divisible by 4 or r in 3..7. Throws PreconditionError otherwise.
ConstructedColoring strong_paths_imv(std::size_t t, std::size_t r);

/// MV colouring of the strong product of P_t and P_r (min(t, r) >= 2) built
/// from unions of columns (or rows when t < r).
ConstructedColoring strong_paths_mv(std::size_t t, std::size_t r);

/// IMV colouring of the subdivision of the partition's host: the original
/// vertices form one class and each edge class becomes one class. Throws
/// PreconditionError naming a monochromatic K_4 (complete host) or C_4
/// (bipartite host) if there is one.
ConstructedColoring subdiv_imv_from_partition(const EdgePartition & p);

/// A 1-defective colouring of a diameter-2 graph, re-validated as MV.
ConstructedColoring defective_to_mv(const Graph & g, const Coloring & c);

/// Row-by-row rendering of a colouring of a product of two paths, colours
/// printed 1-based and separated by single spaces.
std::string render_grid(const Coloring & c, std::size_t rows, std::size_t cols);

}
