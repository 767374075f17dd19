#include "mvis/geodesic.hpp"

#include <algorithm>

#include <omp.h>

namespace mvis
{

namespace
{
    constexpr std::size_t kParallelThreshold = 256;

    std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
    {
        std::uint64_t s = a + b;
        return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
    }

    void bfs_from(const Graph & g, Vertex s, int * dist, std::uint64_t * sigma, std::vector<Vertex> & queue)
    {
        queue.clear();
        dist[s] = 0;
        sigma[s] = 1;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == kInfinite) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1)
                    sigma[w] = saturating_add(sigma[w], sigma[v]);
            }
        }
    }
}

AllPairs bfs_all_pairs(const Graph & g)
{
    const auto n = g.order();
    AllPairs ap{DistanceMatrix(n), GeodesicCounts(n)};
    if (n < kParallelThreshold) {
        std::vector<Vertex> queue;
        queue.reserve(n);
        for (Vertex s = 0; s < n; ++s)
            bfs_from(g, s, ap.distances.row(s), ap.counts.row(s), queue);
        return ap;
    }

#pragma omp parallel
    {
        std::vector<Vertex> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (long s = 0; s < static_cast<long>(n); ++s)
            bfs_from(g, static_cast<Vertex>(s), ap.distances.row(static_cast<Vertex>(s)), ap.counts.row(static_cast<Vertex>(s)), queue);
    }
    return ap;
}

GeodesicIndex::GeodesicIndex(const Graph & g) : g_(&g), ap_(bfs_all_pairs(g)), empty_(g.words(), 0)
{
    const auto n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            int d = ap_.distances(u, v);
            if (d == kInfinite)
                connected_ = false;
            else
                max_distance_ = std::max(max_distance_, d);
        }
    const auto layers = static_cast<std::size_t>(max_distance_) + 1;
    spheres_.assign(n * layers * words(), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            int d = ap_.distances(u, v);
            if (d != kInfinite)
                bits::set(spheres_.data() + (static_cast<std::size_t>(u) * layers + d) * words(), v);
        }
}

VertexSet interval(const GeodesicIndex & gi, Vertex u, Vertex v)
{
    int d = gi.distance(u, v);
    if (d == kInfinite)
        throw PreconditionError("interval: vertices " + std::to_string(u) + " and " + std::to_string(v) + " are disconnected");
    VertexSet s(gi.order());
    for (int k = 0; k <= d; ++k) {
        const auto * a = gi.sphere(u, k);
        const auto * b = gi.sphere(v, d - k);
        for (std::size_t i = 0; i < gi.words(); ++i)
            s.data()[i] |= a[i] & b[i];
    }
    return s;
}

VertexSet interval(const Graph & g, Vertex u, Vertex v)
{
    GeodesicIndex gi(g);
    return interval(gi, u, v);
}

bool is_convex(const GeodesicIndex & gi, const VertexSet & s)
{
    auto members = s.to_vector();
    if (members.size() <= 1)
        return true;
    Graph h = gi.graph().induced(s);
    AllPairs sub = bfs_all_pairs(h);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto a = static_cast<Vertex>(i), b = static_cast<Vertex>(j);
            if (sub.distances(a, b) != gi.distance(members[i], members[j]))
                return false;
            if (sub.counts(a, b) != gi.counts()(members[i], members[j]))
                return false;
        }
    return true;
}

bool is_convex(const Graph & g, const VertexSet & s)
{
    GeodesicIndex gi(g);
    return is_convex(gi, s);
}

namespace
{
    struct ConvexPathSearch
    {
        const GeodesicIndex & gi;
        int limit;
        std::vector<Vertex> path;
        std::vector<Vertex> best;

        // A path v_0..v_k is convex iff every pair of its vertices is joined by
        // a unique geodesic and that geodesic is the subpath between them.
        bool extends(Vertex w) const
        {
            const auto len = static_cast<int>(path.size());
            for (int i = 0; i < len; ++i) {
                if (gi.distance(path[static_cast<std::size_t>(i)], w) != len - i)
                    return false;
                if (gi.counts()(path[static_cast<std::size_t>(i)], w) != 1)
                    return false;
            }
            return true;
        }

        void grow()
        {
            if (path.size() > best.size())
                best = path;
            if (static_cast<int>(best.size()) >= limit)
                return;
            for (Vertex w : gi.graph().neighbors(path.back())) {
                if (!extends(w))
                    continue;
                path.push_back(w);
                grow();
                path.pop_back();
                if (static_cast<int>(best.size()) >= limit)
                    return;
            }
        }
    };
}

std::vector<Vertex> find_longest_convex_path(const GeodesicIndex & gi)
{
    if (!gi.connected())
        throw PreconditionError("longest_convex_path: graph is disconnected");
    if (gi.order() == 0)
        return {};
    ConvexPathSearch search{gi, gi.max_distance() + 1, {}, {}};
    for (Vertex s = 0; s < gi.order() && static_cast<int>(search.best.size()) < search.limit; ++s) {
        search.path = {s};
        search.grow();
    }
    return search.best;
}

int longest_convex_path(const GeodesicIndex & gi)
{
    return static_cast<int>(find_longest_convex_path(gi).size());
}

int longest_convex_path(const Graph & g)
{
    GeodesicIndex gi(g);
    return longest_convex_path(gi);
}

int diameter(const Graph & g)
{
    GeodesicIndex gi(g);
    if (!gi.connected())
        throw PreconditionError("diameter: graph is disconnected");
    return gi.max_distance();
}

int diag(const Graph & g, const Graph & h)
{
    return std::min(longest_convex_path(g), longest_convex_path(h));
}

}
