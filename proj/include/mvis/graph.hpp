#pragma once

#include "mvis/bitset.hpp"
#include "mvis/common.hpp"

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvis
{

using Edge = std::pair<Vertex, Vertex>;

class Graph;

enum class ProductKind
{
    cartesian,
    strong,
    lexicographic,
    direct,
};

const char * to_string(ProductKind k);

/// Attached by the product builders. Vertex (g, h) has index g * n(right) + h.
struct ProductInfo
{
    ProductKind kind;
    std::shared_ptr<const Graph> left;
    std::shared_ptr<const Graph> right;
    /// Lexicographic products whose left factor has an isolated vertex fall
    /// outside the standard distance formula.
    bool left_has_isolated = false;
};

/// Immutable simple undirected graph on vertices 0..n-1. Stores both sorted
/// neighbour lists and adjacency bit rows.
class Graph
{
public:
    Graph() = default;

    /// Throws InputError on self-loops, out-of-range endpoints or repeated edges.
    Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

    std::size_t order() const { return n_; }
    std::size_t size() const { return m_; }
    std::size_t words() const { return words_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    const bits::Word * row(Vertex v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
    bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    std::size_t max_degree() const;
    std::size_t min_degree() const;

    /// All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Display label; falls back to the decimal index.
    std::string label(Vertex v) const;
    const std::vector<std::string> & labels() const { return labels_; }

    const std::optional<ProductInfo> & product() const { return product_; }
    Graph with_product(ProductInfo info) const;

    VertexSet neighborhood(Vertex v) const;
    VertexSet all() const { return VertexSet::full(n_); }

    /// Subgraph induced by `s`; the i-th vertex of the result is the i-th
    /// smallest member of `s`. Labels are carried over.
    Graph induced(const VertexSet & s) const;
    Graph complement() const;

    bool is_connected() const;
    bool is_bipartite() const;
    bool is_complete() const { return 2 * m_ == n_ * (n_ - (n_ ? 1 : 0)); }
    bool is_tree() const { return n_ >= 1 && m_ + 1 == n_ && is_connected(); }
    bool is_independent(const VertexSet & s) const;
    std::optional<std::array<Vertex, 3>> find_triangle() const;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<bits::Word> rows_;
    std::vector<std::string> labels_;
    std::optional<ProductInfo> product_;
};

/// Edge-list text format: a header line `n m`, then m lines `u v` with
/// 0 <= u < v < n. Anything after `#` on a line is ignored.
Graph read_edge_list(std::istream & in);
Graph read_edge_list_file(const std::string & path);
void write_edge_list(std::ostream & out, const Graph & g);

}
