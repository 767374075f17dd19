#include "mvis/reference.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace mvis::reference
{

AllPairs bfs_all_pairs(const Graph & g)
{
    const auto n = g.order();
    AllPairs ap{DistanceMatrix(n), GeodesicCounts(n)};
    for (Vertex s = 0; s < n; ++s) {
        std::deque<Vertex> q{s};
        ap.distances.at(s, s) = 0;
        ap.counts.row(s)[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (ap.distances(s, w) == kInfinite) {
                    ap.distances.at(s, w) = ap.distances(s, v) + 1;
                    q.push_back(w);
                }
                if (ap.distances(s, w) == ap.distances(s, v) + 1)
                    ap.counts.row(s)[w] += ap.counts(s, v);
            }
        }
    }
    return ap;
}

namespace
{
    std::vector<int> distances_from(const Graph & g, Vertex s)
    {
        std::vector<int> d(g.order(), -1);
        std::deque<Vertex> q{s};
        d[s] = 0;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex w : g.neighbors(v))
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    q.push_back(w);
                }
        }
        return d;
    }

    void extend(const Graph & g, const std::vector<int> & to_v, Vertex v, std::vector<Vertex> & path, std::vector<std::vector<Vertex>> & out)
    {
        Vertex last = path.back();
        if (last == v) {
            out.push_back(path);
            return;
        }
        for (Vertex w : g.neighbors(last))
            if (to_v[w] == to_v[last] - 1) {
                path.push_back(w);
                extend(g, to_v, v, path, out);
                path.pop_back();
            }
    }
}

std::vector<std::vector<Vertex>> geodesics(const Graph & g, Vertex u, Vertex v)
{
    auto to_v = distances_from(g, v);
    std::vector<std::vector<Vertex>> out;
    if (to_v[u] < 0)
        return out;
    std::vector<Vertex> path{u};
    extend(g, to_v, v, path, out);
    return out;
}

VertexSet interval(const Graph & g, Vertex u, Vertex v)
{
    VertexSet s(g.order());
    for (auto & p : geodesics(g, u, v))
        for (Vertex w : p)
            s.insert(w);
    return s;
}

bool is_convex(const Graph & g, const VertexSet & s)
{
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            for (auto & p : reference::geodesics(g, members[i], members[j]))
                for (Vertex w : p)
                    if (!s.contains(w))
                        return false;
    return true;
}

namespace
{
    void all_paths(const Graph & g, std::vector<Vertex> & path, std::vector<char> & on, int & best)
    {
        if (static_cast<int>(path.size()) > best && reference::is_convex(g, VertexSet(g.order(), path))) {
            // A path subgraph must not have chords, or it would not be a path.
            bool chordless = true;
            for (std::size_t i = 0; i < path.size() && chordless; ++i)
                for (std::size_t j = i + 2; j < path.size() && chordless; ++j)
                    chordless = !g.adjacent(path[i], path[j]);
            if (chordless)
                best = static_cast<int>(path.size());
        }
        for (Vertex w : g.neighbors(path.back()))
            if (!on[w]) {
                on[w] = 1;
                path.push_back(w);
                all_paths(g, path, on, best);
                path.pop_back();
                on[w] = 0;
            }
    }
}

int longest_convex_path(const Graph & g)
{
    int best = 0;
    std::vector<char> on(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<Vertex> path{s};
        on[s] = 1;
        all_paths(g, path, on, best);
        on[s] = 0;
    }
    return best;
}

bool is_mv_set(const Graph & g, const VertexSet & x)
{
    auto members = x.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            bool seen = false;
            for (auto & p : reference::geodesics(g, members[i], members[j])) {
                bool clear = true;
                for (std::size_t t = 1; t + 1 < p.size(); ++t)
                    clear = clear && !x.contains(p[t]);
                if (clear) {
                    seen = true;
                    break;
                }
            }
            if (!seen)
                return false;
        }
    return true;
}

bool is_imv_set(const Graph & g, const VertexSet & x)
{
    auto members = x.to_vector();
    for (Vertex a : members)
        for (Vertex b : members)
            if (g.adjacent(a, b))
                return false;
    return is_mv_set(g, x);
}

std::vector<char> subset_table(const Graph & g, const std::function<bool(const VertexSet &)> & valid)
{
    const auto n = g.order();
    if (n > 24)
        throw PreconditionError("reference::subset_table: n > 24");
    std::vector<char> table(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1U)
                s.insert(v);
        table[mask] = valid(s) ? 1 : 0;
    }
    return table;
}

int max_valid(const std::vector<char> & table)
{
    int best = 0;
    for (std::uint32_t mask = 0; mask < table.size(); ++mask)
        if (table[mask])
            best = std::max(best, std::popcount(mask));
    return best;
}

int min_partition(std::size_t n, const std::vector<char> & table)
{
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    constexpr int kNone = 1 << 20;
    std::vector<int> f(std::size_t{1} << n, kNone);
    f[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        // Enumerate subsets t of rest; the class is t | low.
        for (std::uint32_t t = rest;; t = (t - 1) & rest) {
            std::uint32_t cls = t | low;
            if (table[cls] && f[s ^ cls] + 1 < f[s])
                f[s] = f[s ^ cls] + 1;
            if (t == 0)
                break;
        }
    }
    return f[full] >= kNone ? -1 : f[full];
}

namespace
{
    bool independent(const Graph & g, const VertexSet & s)
    {
        for (auto [u, v] : g.edges())
            if (s.contains(u) && s.contains(v))
                return false;
        return true;
    }

    bool clique(const Graph & g, const VertexSet & s)
    {
        auto m = s.to_vector();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (!g.adjacent(m[i], m[j]))
                    return false;
        return true;
    }

    bool defective1(const Graph & g, const VertexSet & s)
    {
        bool ok = true;
        s.for_each([&](Vertex v) {
            int same = 0;
            for (Vertex w : g.neighbors(v))
                same += s.contains(w) ? 1 : 0;
            ok = ok && same <= 1;
        });
        return ok;
    }
}

int mu(const Graph & g) { return max_valid(subset_table(g, [&](const VertexSet & s) { return is_mv_set(g, s); })); }
int mu_i(const Graph & g) { return max_valid(subset_table(g, [&](const VertexSet & s) { return is_imv_set(g, s); })); }
int alpha(const Graph & g) { return max_valid(subset_table(g, [&](const VertexSet & s) { return independent(g, s); })); }
int omega(const Graph & g) { return max_valid(subset_table(g, [&](const VertexSet & s) { return clique(g, s); })); }

int chi(const Graph & g)
{
    return min_partition(g.order(), subset_table(g, [&](const VertexSet & s) { return independent(g, s); }));
}

int chi_defective1(const Graph & g)
{
    return min_partition(g.order(), subset_table(g, [&](const VertexSet & s) { return defective1(g, s); }));
}

int chi_mu(const Graph & g)
{
    return min_partition(g.order(), subset_table(g, [&](const VertexSet & s) { return is_mv_set(g, s); }));
}

int chi_mu_i(const Graph & g)
{
    return min_partition(g.order(), subset_table(g, [&](const VertexSet & s) { return is_imv_set(g, s); }));
}

}
