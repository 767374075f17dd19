#include "mvis/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mvis
{

namespace
{
    using Colouring = std::vector<int>;

    int count_colours(const Colouring & c)
    {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    // 1-dimensional Weisfeiler-Leman refinement. New colours are ranks of
    // (old colour, sorted neighbour colours), so the result only depends on
    // the isomorphism class of (g, c).
    Colouring refine(const Graph & g, Colouring c)
    {
        const auto n = g.order();
        int cells = count_colours(c);
        while (true) {
            std::vector<std::vector<int>> sig(n);
            for (Vertex v = 0; v < n; ++v) {
                sig[v].reserve(g.degree(v) + 1);
                sig[v].push_back(c[v]);
                std::vector<int> nb;
                for (Vertex w : g.neighbors(v))
                    nb.push_back(c[w]);
                std::sort(nb.begin(), nb.end());
                sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            }
            std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            Colouring next(n);
            for (Vertex v = 0; v < n; ++v)
                next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            int now = static_cast<int>(distinct.size());
            c = std::move(next);
            if (now == cells)
                return c;
            cells = now;
        }
    }

    std::vector<bits::Word> code_for(const Graph & g, const std::vector<Vertex> & order)
    {
        const auto n = order.size();
        std::vector<bits::Word> code(bits::words_for(n * (n - (n ? 1 : 0)) / 2), 0);
        std::size_t bit = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++bit)
                if (g.adjacent(order[i], order[j]))
                    code[bit >> 6] |= bits::Word{1} << (bit & 63);
        return code;
    }

    struct Search
    {
        const Graph & g;
        CanonicalForm best;
        bool have = false;

        void run(Colouring c)
        {
            c = refine(g, std::move(c));
            const auto n = g.order();
            const int cells = count_colours(c);
            if (cells == static_cast<int>(n)) {
                std::vector<Vertex> order(n);
                for (Vertex v = 0; v < n; ++v)
                    order[static_cast<std::size_t>(c[v])] = v;
                auto code = code_for(g, order);
                if (!have || code > best.code) {
                    best = {std::move(order), std::move(code)};
                    have = true;
                }
                return;
            }
            // first non-singleton cell
            std::vector<int> size(static_cast<std::size_t>(cells), 0);
            for (int x : c)
                ++size[static_cast<std::size_t>(x)];
            int target = 0;
            while (size[static_cast<std::size_t>(target)] == 1)
                ++target;
            for (Vertex v = 0; v < n; ++v) {
                if (c[v] != target)
                    continue;
                Colouring split(n);
                for (Vertex u = 0; u < n; ++u)
                    split[u] = 2 * c[u] + (c[u] == target && u != v ? 1 : 0);
                run(std::move(split));
            }
        }
    };
}

CanonicalForm canonical_form(const Graph & g)
{
    Search s{g, {}, false};
    s.run(Colouring(g.order(), 0));
    return s.best;
}

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a).code == canonical_form(b).code;
}

namespace
{
    Graph relabel(const Graph & g, const CanonicalForm & cf)
    {
        std::vector<Vertex> pos(g.order());
        for (std::size_t i = 0; i < cf.order.size(); ++i)
            pos[cf.order[i]] = static_cast<Vertex>(i);
        std::vector<Edge> es;
        for (auto [u, v] : g.edges()) {
            auto a = pos[u], b = pos[v];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        return Graph(g.order(), es);
    }
}

Graph canonical_graph(const Graph & g)
{
    return relabel(g, canonical_form(g));
}

std::vector<Graph> connected_graphs(std::size_t n)
{
    if (n == 0)
        return {};
    if (n > 9)
        throw PreconditionError("connected_graphs: refusing n > 9");
    std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
    for (std::size_t k = 1; k < n; ++k) {
        // Every connected graph has a vertex whose removal leaves it connected,
        // so extending connected graphs by one vertex reaches all of them.
        std::map<std::vector<bits::Word>, Graph> seen;
        for (const auto & g : level) {
            auto base = g.edges();
            for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
                auto es = base;
                for (Vertex u = 0; u < k; ++u)
                    if (mask >> u & 1U)
                        es.emplace_back(u, static_cast<Vertex>(k));
                Graph h(k + 1, es);
                auto cf = canonical_form(h);
                if (seen.count(cf.code))
                    continue;
                auto canon = relabel(h, cf);
                seen.emplace(std::move(cf.code), std::move(canon));
            }
        }
        level.clear();
        for (auto & [code, g] : seen)
            level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> connected_graphs_up_to(std::size_t n)
{
    std::vector<Graph> all;
    for (std::size_t k = 1; k <= n; ++k) {
        auto level = connected_graphs(k);
        all.insert(all.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return all;
}

}
