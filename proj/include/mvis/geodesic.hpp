#pragma once

#include "mvis/bitset.hpp"
#include "mvis/graph.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace mvis
{

inline constexpr int kInfinite = std::numeric_limits<int>::max();

/// All-pairs hop distances; kInfinite marks disconnected pairs.
class DistanceMatrix
{
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinite) {}

    std::size_t order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int & at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool connected(Vertex u, Vertex v) const { return (*this)(u, v) != kInfinite; }
    const int * row(Vertex u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }
    int * row(Vertex u) { return d_.data() + static_cast<std::size_t>(u) * n_; }

    friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> d_;
};

/// Number of distinct shortest u,v-paths. Counts saturate at UINT64_MAX.
class GeodesicCounts
{
public:
    GeodesicCounts() = default;
    explicit GeodesicCounts(std::size_t n) : n_(n), sigma_(n * n, 0) {}

    std::uint64_t operator()(Vertex u, Vertex v) const { return sigma_[static_cast<std::size_t>(u) * n_ + v]; }
    std::uint64_t * row(Vertex u) { return sigma_.data() + static_cast<std::size_t>(u) * n_; }

    friend bool operator==(const GeodesicCounts &, const GeodesicCounts &) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> sigma_;
};

struct AllPairs
{
    DistanceMatrix distances;
    GeodesicCounts counts;
};

/// One BFS per source; sources are distributed across OpenMP threads once the
/// graph is large enough for that to pay off.
AllPairs bfs_all_pairs(const Graph & g);

/// Distances plus per-vertex distance spheres, the shared substrate of every
/// geodesic query. Keeps a pointer to `g`, which must outlive the index.
class GeodesicIndex
{
public:
    explicit GeodesicIndex(const Graph & g);

    const Graph & graph() const { return *g_; }
    std::size_t order() const { return g_->order(); }
    std::size_t words() const { return g_->words(); }
    const DistanceMatrix & distances() const { return ap_.distances; }
    const GeodesicCounts & counts() const { return ap_.counts; }
    int distance(Vertex u, Vertex v) const { return ap_.distances(u, v); }
    bool connected() const { return connected_; }
    /// Max finite eccentricity.
    int max_distance() const { return max_distance_; }

    /// {w : d(u, w) = r}; empty when r exceeds the eccentricity of u.
    const bits::Word * sphere(Vertex u, int r) const
    {
        if (r < 0 || r > max_distance_)
            return empty_.data();
        return spheres_.data() + (static_cast<std::size_t>(u) * (max_distance_ + 1) + r) * words();
    }

private:
    const Graph * g_;
    AllPairs ap_;
    bool connected_ = true;
    int max_distance_ = 0;
    std::vector<bits::Word> spheres_;
    std::vector<bits::Word> empty_;
};

/// Vertices on at least one u,v-geodesic. Throws PreconditionError if u and v
/// are disconnected.
VertexSet interval(const GeodesicIndex & gi, Vertex u, Vertex v);
VertexSet interval(const Graph & g, Vertex u, Vertex v);

/// Whether every geodesic of g between two members of s stays inside s.
/// Compares distances and geodesic counts of the induced subgraph with g.
bool is_convex(const Graph & g, const VertexSet & s);
bool is_convex(const GeodesicIndex & gi, const VertexSet & s);

/// Vertex count of a longest path subgraph that is convex in g; 1 for K_1.
/// Throws PreconditionError on disconnected input.
int longest_convex_path(const Graph & g);
int longest_convex_path(const GeodesicIndex & gi);

/// A longest convex path as a vertex sequence.
std::vector<Vertex> find_longest_convex_path(const GeodesicIndex & gi);

/// Throws PreconditionError on disconnected input.
int diameter(const Graph & g);

/// Length (in vertices) of a longest diagonal of the strong product of g and h.
int diag(const Graph & g, const Graph & h);

}
