#include "mvis/constructive.hpp"

#include "mvis/builders.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/visibility.hpp"

#include <algorithm>
#include <sstream>

namespace mvis
{

namespace
{
    ConstructedColoring finish(Graph g, std::vector<int> colors, std::string source, int claimed, ColoringMode mode,
                               std::vector<std::string> notes = {})
    {
        Coloring c(std::move(colors));
        auto report = validate_coloring(g, c, mode);
        if (!report.valid)
            throw ConstructionError(source + ": produced an invalid " + to_string(mode) + " coloring (" + report.violation + ")");
        if (c.k() > claimed)
            throw ConstructionError(source + ": used " + std::to_string(c.k()) + " classes, more than the claimed "
                                    + std::to_string(claimed));
        return {std::move(g), std::move(c), std::move(source), claimed, mode, std::move(notes)};
    }

    int ceil_div(long a, long b) { return static_cast<int>((a + b - 1) / b); }

    void require_valid(const Graph & g, const Coloring & c, ColoringMode mode, const char * who)
    {
        auto report = validate_coloring(g, c, mode);
        if (!report.valid)
            throw PreconditionError(std::string(who) + ": input is not a valid " + to_string(mode) + " coloring (" + report.violation + ")");
    }

    const ProductInfo & require_product(const Graph & gh, ProductKind kind, const char * who)
    {
        if (!gh.product() || gh.product()->kind != kind)
            throw PreconditionError(std::string(who) + ": expected a " + to_string(kind) + " product");
        return *gh.product();
    }

    std::size_t monochromatic_edges(const Graph & g, const std::vector<int> & colors)
    {
        std::size_t count = 0;
        for (auto [u, v] : g.edges())
            count += colors[u] == colors[v] ? 1 : 0;
        return count;
    }
}

ConstructedColoring cycle_imv(std::size_t n)
{
    if (n < 3)
        throw PreconditionError("cycle_imv: need n >= 3");
    // colour[i - 1] is the class of v_i.
    std::vector<int> colour(n, 0);
    auto put = [&](std::size_t i, int c) { colour[i - 1] = c; };
    if (n == 3) {
        put(1, 0), put(2, 1), put(3, 2);
    }
    else if (n == 4) {
        put(1, 0), put(3, 0), put(2, 1), put(4, 1);
    }
    else if (n == 5) {
        put(1, 0), put(3, 0), put(2, 1), put(4, 1), put(5, 2);
    }
    else {
        const std::size_t k = n / 3;
        if (n % 3 == 2) {
            for (std::size_t i = 1; i < k; ++i)
                put(i, static_cast<int>(i - 1)), put(i + k, static_cast<int>(i - 1)), put(i + 2 * k, static_cast<int>(i - 1));
            put(k, static_cast<int>(k - 1)), put(2 * k, static_cast<int>(k - 1)), put(3 * k + 1, static_cast<int>(k - 1));
            put(3 * k, static_cast<int>(k)), put(3 * k + 2, static_cast<int>(k));
        }
        else {
            for (std::size_t i = 1; i <= k; ++i)
                put(i, static_cast<int>(i - 1)), put(i + k, static_cast<int>(i - 1)), put(i + 2 * k, static_cast<int>(i - 1));
            if (n % 3 == 1)
                put(3 * k + 1, static_cast<int>(k));
        }
    }
    const int claimed = (n == 3 || n == 5) ? 3 : ceil_div(static_cast<long>(n), 3);
    return finish(cycle_graph(n), std::move(colour), "cycle-imv", claimed, ColoringMode::imv);
}

ConstructedColoring tree_exchange(const Graph & t, const Coloring & start)
{
    if (!t.is_tree() || t.order() < 3)
        throw PreconditionError("tree_exchange: need a tree on at least three vertices");
    require_valid(t, start, ColoringMode::mv, "tree_exchange");

    const auto n = t.order();
    GeodesicIndex gi(t);
    auto on_path = [&](Vertex from, Vertex mid, Vertex to) { return gi.distance(from, mid) + gi.distance(mid, to) == gi.distance(from, to); };
    auto is_mv = [&](const std::vector<int> & colors) { return validate_coloring(t, Coloring(colors), ColoringMode::mv).valid; };

    std::vector<int> colors = start.colors();
    std::size_t mono = monochromatic_edges(t, colors);
    while (mono > 0) {
        Vertex a = 0, b = 0;
        for (auto [u, v] : t.edges())
            if (colors[u] == colors[v]) {
                a = u;
                b = v;
                break;
            }
        const int alpha_colour = colors[a];

        std::vector<std::vector<int>> candidates;
        for (auto [x, other] : {std::pair{a, b}, std::pair{b, a}}) {
            std::vector<Vertex> side;
            for (Vertex w = 0; w < n; ++w)
                if (gi.distance(w, x) < gi.distance(w, other))
                    side.push_back(w);
            if (side.size() < 2)
                continue;
            std::vector<int> present;
            for (Vertex w : side)
                if (colors[w] != alpha_colour)
                    present.push_back(colors[w]);
            std::sort(present.begin(), present.end());
            present.erase(std::unique(present.begin(), present.end()), present.end());
            for (int j : present) {
                std::vector<Vertex> ys;
                for (Vertex w : side)
                    if (colors[w] == j)
                        ys.push_back(w);
                std::vector<std::pair<Vertex, Vertex>> blocked_pairs;
                for (Vertex y : ys)
                    for (Vertex z : ys)
                        if (z != y && on_path(y, z, x))
                            blocked_pairs.emplace_back(y, z);
                if (blocked_pairs.empty()) {
                    auto c = colors;
                    c[x] = j;
                    for (Vertex y : ys)
                        c[y] = alpha_colour;
                    candidates.push_back(std::move(c));
                }
                for (auto [y, z] : blocked_pairs) {
                    auto c = colors;
                    c[x] = j;
                    c[z] = alpha_colour;
                    candidates.push_back(std::move(c));
                }
            }
        }

        bool moved = false;
        for (auto & c : candidates) {
            std::size_t m = monochromatic_edges(t, c);
            if (m < mono && is_mv(c)) {
                colors = std::move(c);
                mono = m;
                moved = true;
                break;
            }
        }
        if (!moved) {
            auto exact = chi_mu_i(t);
            return finish(t, exact.coloring.colors(), "tree-exchange", start.k(), ColoringMode::imv,
                          {"exchange step found no improving recolouring at edge " + std::to_string(a) + "-" + std::to_string(b)
                           + "; fell back to the exact solver"});
        }
    }
    return finish(t, std::move(colors), "tree-exchange", start.k(), ColoringMode::imv);
}

ConstructedColoring trianglefree_imv(const Graph & g, const SearchOptions & opt)
{
    const auto n = g.order();
    if (n < 2 || !g.is_connected())
        throw PreconditionError("trianglefree_imv: need a connected graph on at least two vertices");
    if (auto tri = g.find_triangle())
        throw PreconditionError("trianglefree_imv: graph has the triangle " + std::to_string((*tri)[0]) + "," + std::to_string((*tri)[1]) + ","
                                + std::to_string((*tri)[2]));

    const VertexSet m = mu_i(g, opt).witness;
    const int claimed = ceil_div(static_cast<long>(n - m.size()), 2) + 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!m.contains(v))
            rest.push_back(v);

    std::vector<int> colour(n, 0);
    if (rest.size() == 2 && g.adjacent(rest[0], rest[1])) {
        for (Vertex v = 0; v < n; ++v)
            colour[v] = g.adjacent(rest[0], v) ? 0 : 1;
        return finish(g, std::move(colour), "tfree-imv", claimed, ColoringMode::imv);
    }

    int next = 1;
    std::vector<Vertex> remaining = rest;
    auto leaves_k2 = [&](Vertex u, Vertex v) {
        std::vector<Vertex> left;
        for (Vertex w : remaining)
            if (w != u && w != v)
                left.push_back(w);
        return left.size() == 2 && g.adjacent(left[0], left[1]);
    };
    auto is_claw = [&]() -> std::optional<Vertex> {
        if (remaining.size() != 4)
            return std::nullopt;
        for (Vertex centre : remaining) {
            bool ok = true;
            for (Vertex w : remaining)
                for (Vertex x : remaining)
                    if (w < x && g.adjacent(w, x) != (w == centre || x == centre))
                        ok = false;
            if (ok)
                return centre;
        }
        return std::nullopt;
    };
    while (!remaining.empty()) {
        if (remaining.size() == 1) {
            colour[remaining[0]] = next++;
            break;
        }
        bool peeled = false;
        for (std::size_t i = 0; i < remaining.size() && !peeled; ++i)
            for (std::size_t j = i + 1; j < remaining.size() && !peeled; ++j) {
                Vertex u = remaining[i], v = remaining[j];
                if (g.adjacent(u, v) || leaves_k2(u, v))
                    continue;
                colour[u] = colour[v] = next++;
                remaining.erase(remaining.begin() + static_cast<long>(j));
                remaining.erase(remaining.begin() + static_cast<long>(i));
                peeled = true;
            }
        if (peeled)
            continue;
        if (auto centre = is_claw()) {
            for (Vertex w : remaining)
                if (w != *centre)
                    colour[w] = next;
            ++next;
            remaining = {*centre};
            continue;
        }
        throw ConstructionError("trianglefree_imv: no admissible pair to peel");
    }
    return finish(g, std::move(colour), "tfree-imv", claimed, ColoringMode::imv);
}

ConstructedColoring product_coloring(const Graph & g, const Coloring & mv, const SearchOptions & opt)
{
    require_valid(g, mv, ColoringMode::mv, "product_coloring");
    const auto n = g.order();
    std::vector<int> colour(n, 0);
    const auto classes = mv.classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        VertexSet s(n, classes[i]);
        auto inner = chi(g.induced(s), opt).coloring;
        for (std::size_t t = 0; t < classes[i].size(); ++t)
            colour[classes[i][t]] = static_cast<int>(i * n) + inner[static_cast<Vertex>(t)];
    }
    const int claimed = chi(g, opt).k * mv.k();
    return finish(g, std::move(colour), "product-coloring", claimed, ColoringMode::imv);
}

ConstructedColoring lex_mv_2coloring(const Graph & gh)
{
    const auto & info = require_product(gh, ProductKind::lexicographic, "lex_mv_2coloring");
    const Graph & g = *info.left;
    const Graph & h = *info.right;
    if (g.order() < 2 || h.order() < 2 || !g.is_connected())
        throw PreconditionError("lex_mv_2coloring: need a connected left factor and both factors on at least two vertices");
    if (g.is_complete() && h.is_complete())
        throw PreconditionError("lex_mv_2coloring: both factors are complete, so the product is complete and one class suffices");
    std::vector<int> colour(gh.order(), 1);
    for (Vertex v = 0; v < gh.order(); ++v)
        if (v % h.order() == 0)
            colour[v] = 0;
    return finish(gh, std::move(colour), "lex-mv2", 2, ColoringMode::mv);
}

ConstructedColoring lex_imv(const Graph & gh, const SearchOptions & opt)
{
    const auto & info = require_product(gh, ProductKind::lexicographic, "lex_imv");
    if (info.left->order() < 2 || !info.left->is_connected())
        throw PreconditionError("lex_imv: left factor must be connected with at least two vertices");
    if (info.right->size() == 0)
        throw PreconditionError("lex_imv: right factor is edgeless");
    auto proper = chi(gh, opt);
    return finish(gh, proper.coloring.colors(), "lex-imv", proper.k, ColoringMode::imv);
}

ConstructedColoring cartesian_prism_mv(const Graph & g, std::size_t n, const Coloring & imv)
{
    if (n < 1)
        throw PreconditionError("cartesian_prism_mv: need n >= 1");
    require_valid(g, imv, ColoringMode::imv, "cartesian_prism_mv");
    Graph p = cartesian_product(g, complete_graph(n));
    std::vector<int> colour(p.order());
    for (Vertex v = 0; v < p.order(); ++v)
        colour[v] = imv[static_cast<Vertex>(v / n)];
    return finish(std::move(p), std::move(colour), "prism-mv", imv.k(), ColoringMode::mv);
}

namespace
{
    // Colour (1-based) of row i, column j in the 4k-column pattern.
    int strong_pattern(std::size_t i, std::size_t j, std::size_t k)
    {
        const std::size_t p = (j - 1) / k;
        const std::size_t l = (j - 1) % k + 1;
        const int odd = static_cast<int>(2 * l - 1);
        const int diagonal = (p == 0 || p == 3) ? odd : odd + 1;
        const int partner = diagonal == odd ? odd + 1 : odd;
        const bool same_parity = (i + 1000000 - j) % 2 == 0;
        return same_parity ? diagonal : partner;
    }
}

ConstructedColoring strong_paths_imv(std::size_t t, std::size_t r)
{
    if (r < 3 || t < r)
        throw PreconditionError("strong_paths_imv: need t >= r >= 3");
    const bool four_k = r % 4 == 0 && r >= 8;
    if (!four_k && r > 7)
        throw PreconditionError("strong_paths_imv: no closed form for r = " + std::to_string(r) + "; use the exact solver");
    Graph g = strong_product(path_graph(t), path_graph(r));
    std::vector<int> colour(g.order());
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= r; ++j) {
            // Small widths reuse the first r columns of the 8-column scheme,
            // whose rows repeat with period two.
            int c = four_k ? strong_pattern(i, j, r / 4) : strong_pattern((i - 1) % 2 + 1, j, 2);
            colour[(i - 1) * r + (j - 1)] = c - 1;
        }
    const int claimed = four_k ? static_cast<int>(r / 2) : 4;
    return finish(std::move(g), std::move(colour), "strongpaths-imv", claimed, ColoringMode::imv);
}

ConstructedColoring strong_paths_mv(std::size_t t, std::size_t r)
{
    if (std::min(t, r) < 2)
        throw PreconditionError("strong_paths_mv: need min(t, r) >= 2");
    const std::size_t big = std::max(t, r), small = std::min(t, r);
    auto band = [&](std::size_t j) -> int {
        if (small == 2)
            return big == 2 ? 0 : static_cast<int>(j - 1);
        if (small == 3)
            return j == 2 ? 1 : 0;
        if (small % 2 == 0)
            return static_cast<int>((j - 1) % (small / 2));
        return j == small ? static_cast<int>((small - 1) / 2) : static_cast<int>((j - 1) % ((small - 1) / 2));
    };
    Graph g = strong_product(path_graph(t), path_graph(r));
    std::vector<int> colour(g.order());
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= r; ++j)
            colour[(i - 1) * r + (j - 1)] = t >= r ? band(j) : band(i);
    const int claimed = (t == 2 && r == 2) ? 1 : small == 2 ? 2 : ceil_div(static_cast<long>(small), 2);
    return finish(std::move(g), std::move(colour), "strongpaths-mv", claimed, ColoringMode::mv);
}

ConstructedColoring subdiv_imv_from_partition(const EdgePartition & p)
{
    if (p.host != HostKind::complete)
        throw PreconditionError("subdiv_imv_from_partition: host must be a complete graph");
    Graph host = p.host_graph();
    if (host.edges() != p.edges || p.class_of.size() != p.edges.size())
        throw PreconditionError("subdiv_imv_from_partition: partition does not cover the host edges in order");
    if (auto k4 = find_monochromatic_k4(p))
        throw PreconditionError("subdiv_imv_from_partition: monochromatic K_4 on " + std::to_string((*k4)[0]) + "," + std::to_string((*k4)[1]) + ","
                                + std::to_string((*k4)[2]) + "," + std::to_string((*k4)[3]));
    Graph s = subdivision(host);
    std::vector<int> colour(s.order(), 0);
    for (std::size_t k = 0; k < p.edges.size(); ++k)
        colour[host.order() + k] = 1 + p.class_of[k];
    return finish(std::move(s), std::move(colour), "subdiv-imv", p.classes + 1, ColoringMode::imv);
}

ConstructedColoring defective_to_mv(const Graph & g, const Coloring & c)
{
    if (!g.is_connected() || g.order() < 2 || diameter(g) != 2)
        throw PreconditionError("defective_to_mv: graph must have diameter 2");
    require_valid(g, c, ColoringMode::defective1, "defective_to_mv");
    return finish(g, c.colors(), "defective-mv", c.k(), ColoringMode::mv);
}

std::string render_grid(const Coloring & c, std::size_t rows, std::size_t cols)
{
    if (rows * cols != c.order())
        throw InputError("render_grid: coloring does not have rows*cols vertices");
    std::ostringstream out;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            out << (j ? " " : "") << c[static_cast<Vertex>(i * cols + j)] + 1;
        out << '\n';
    }
    return out.str();
}

}
