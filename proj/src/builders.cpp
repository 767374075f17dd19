#include "mvis/builders.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <set>

namespace mvis
{

std::string FamilySpec::to_string() const
{
    std::string s = name;
    for (std::size_t i = 0; i < params.size(); ++i)
        s += (i ? "," : ":") + std::to_string(params[i]);
    if (!args.empty()) {
        s += "(";
        for (std::size_t i = 0; i < args.size(); ++i)
            s += (i ? "," : "") + args[i].to_string();
        s += ")";
    }
    return s;
}

namespace
{
    class Parser
    {
    public:
        explicit Parser(std::string_view text) : text_(text) {}

        FamilySpec parse()
        {
            auto spec = parse_spec();
            skip_space();
            if (pos_ != text_.size())
                fail("unexpected '" + std::string(1, text_[pos_]) + "'");
            return spec;
        }

    private:
        [[noreturn]] void fail(const std::string & msg) const
        {
            throw InputError("family spec: " + msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
        }

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        bool peek(char c)
        {
            skip_space();
            return pos_ < text_.size() && text_[pos_] == c;
        }

        bool peek_digit_after_comma()
        {
            std::size_t p = pos_;
            if (p >= text_.size() || text_[p] != ',')
                return false;
            ++p;
            while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
                ++p;
            return p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '-');
        }

        long long parse_int()
        {
            skip_space();
            std::size_t start = pos_;
            if (pos_ < text_.size() && text_[pos_] == '-')
                ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_ || (pos_ == start + 1 && text_[start] == '-'))
                fail("expected an integer");
            if (pos_ - start > 15)
                fail("integer too large");
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        }

        FamilySpec parse_spec()
        {
            skip_space();
            FamilySpec spec;
            spec.position = pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            if (start == pos_)
                fail("expected a family name");
            spec.name = std::string(text_.substr(start, pos_ - start));
            if (peek(':')) {
                ++pos_;
                spec.params.push_back(parse_int());
                while (peek_digit_after_comma()) {
                    ++pos_;
                    spec.params.push_back(parse_int());
                }
            }
            if (peek('(')) {
                ++pos_;
                spec.args.push_back(parse_spec());
                while (peek(',')) {
                    ++pos_;
                    spec.args.push_back(parse_spec());
                }
                if (!peek(')'))
                    fail("expected ')'");
                ++pos_;
            }
            return spec;
        }

        std::string_view text_;
        std::size_t pos_ = 0;
    };

    [[noreturn]] void spec_error(const FamilySpec & s, const std::string & msg)
    {
        throw InputError("family spec: " + msg + " at position " + std::to_string(s.position) + " ('" + s.to_string() + "')");
    }

    void check_shape(const FamilySpec & s, std::size_t min_params, std::size_t max_params, std::size_t args)
    {
        if (s.params.size() < min_params || s.params.size() > max_params)
            spec_error(s, "'" + s.name + "' takes " + (min_params == max_params ? std::to_string(min_params) : std::to_string(min_params) + "+")
                              + " size parameter(s), got " + std::to_string(s.params.size()));
        if (s.args.size() != args)
            spec_error(s, "'" + s.name + "' takes " + std::to_string(args) + " argument(s), got " + std::to_string(s.args.size()));
    }

    void validate(const FamilySpec & s)
    {
        const auto & n = s.name;
        if (n == "path" || n == "complete" || n == "star" || n == "empty")
            check_shape(s, 1, 1, 0);
        else if (n == "cycle") {
            check_shape(s, 1, 1, 0);
            if (s.params[0] < 3)
                spec_error(s, "cycle needs at least 3 vertices");
        }
        else if (n == "biclique" || n == "tree")
            check_shape(s, 2, 2, 0);
        else if (n == "petersen")
            check_shape(s, 0, 0, 0);
        else if (n == "hamming")
            check_shape(s, 1, 64, 0);
        else if (n == "cartesian" || n == "strong" || n == "lex" || n == "direct" || n == "corona")
            check_shape(s, 0, 0, 2);
        else if (n == "subdivision")
            check_shape(s, 0, 0, 1);
        else
            spec_error(s, "unknown family '" + n + "'");

        for (std::size_t i = 0; i < s.params.size(); ++i) {
            if (n == "tree" && i == 0) {
                if (s.params[i] < 0)
                    spec_error(s, "tree seed must be non-negative");
                continue;
            }
            if (s.params[i] < 1)
                spec_error(s, "size parameters must be >= 1");
        }
        for (auto & a : s.args)
            validate(a);
    }

    std::size_t checked_mul(std::size_t a, std::size_t b)
    {
        if (a != 0 && b > kMaxBuildOrder * 4 / a)
            return kMaxBuildOrder + 1;
        return a * b;
    }

    std::size_t order_of(const FamilySpec & s)
    {
        auto p = [&](std::size_t i) { return static_cast<std::size_t>(std::min<long long>(s.params[i], kMaxBuildOrder + 1)); };
        const auto & n = s.name;
        if (n == "path" || n == "cycle" || n == "complete" || n == "empty")
            return p(0);
        if (n == "star")
            return p(0) + 1;
        if (n == "biclique")
            return p(0) + p(1);
        if (n == "tree")
            return p(1);
        if (n == "petersen")
            return 10;
        if (n == "hamming") {
            std::size_t total = 1;
            for (std::size_t i = 0; i < s.params.size(); ++i)
                total = checked_mul(total, p(i));
            return total;
        }
        if (n == "subdivision") {
            auto g = order_of(s.args[0]);
            // edges are bounded by n(n-1)/2; the exact figure needs the graph
            return g > kMaxBuildOrder ? g : g + checked_mul(g, g > 0 ? g - 1 : 0) / 2;
        }
        auto a = order_of(s.args[0]);
        auto b = order_of(s.args[1]);
        if (n == "corona")
            return a + checked_mul(a, b);
        return checked_mul(a, b);
    }

    std::vector<std::string> product_labels(const Graph & g, const Graph & h)
    {
        std::vector<std::string> labels;
        labels.reserve(g.order() * h.order());
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = 0; b < h.order(); ++b)
                labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
        return labels;
    }

    template <typename Adjacent>
    Graph product(const Graph & g, const Graph & h, ProductKind kind, Adjacent && adjacent)
    {
        const auto nh = h.order();
        const auto n = g.order() * nh;
        std::vector<Edge> es;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (adjacent(u / nh, u % nh, v / nh, v % nh))
                    es.emplace_back(u, v);
        bool isolated = false;
        for (Vertex a = 0; a < g.order(); ++a)
            isolated = isolated || g.degree(a) == 0;
        Graph out(n, es, product_labels(g, h));
        return out.with_product(ProductInfo{kind, std::make_shared<const Graph>(g), std::make_shared<const Graph>(h),
                                            kind == ProductKind::lexicographic && isolated});
    }

    double unit(std::mt19937_64 & rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}

FamilySpec parse_family(std::string_view text)
{
    auto spec = Parser(text).parse();
    validate(spec);
    return spec;
}

std::size_t family_order(const FamilySpec & spec) { return order_of(spec); }

Graph build(const FamilySpec & s)
{
    validate(s);
    if (order_of(s) > kMaxBuildOrder)
        spec_error(s, "graph would exceed " + std::to_string(kMaxBuildOrder) + " vertices");
    auto p = [&](std::size_t i) { return static_cast<std::size_t>(s.params[i]); };
    const auto & n = s.name;
    if (n == "path")
        return path_graph(p(0));
    if (n == "cycle")
        return cycle_graph(p(0));
    if (n == "complete")
        return complete_graph(p(0));
    if (n == "empty")
        return empty_graph(p(0));
    if (n == "star")
        return star_graph(p(0));
    if (n == "biclique")
        return biclique(p(0), p(1));
    if (n == "petersen")
        return petersen_graph();
    if (n == "tree")
        return random_tree(static_cast<std::uint64_t>(s.params[0]), p(1));
    if (n == "hamming") {
        std::vector<std::size_t> dims;
        for (std::size_t i = 0; i < s.params.size(); ++i)
            dims.push_back(p(i));
        return hamming_graph(dims);
    }
    if (n == "subdivision") {
        auto g = build(s.args[0]);
        if (g.order() + g.size() > kMaxBuildOrder)
            spec_error(s, "graph would exceed " + std::to_string(kMaxBuildOrder) + " vertices");
        return subdivision(g);
    }
    auto a = build(s.args[0]);
    auto b = build(s.args[1]);
    if (n == "cartesian")
        return cartesian_product(a, b);
    if (n == "strong")
        return strong_product(a, b);
    if (n == "lex")
        return lexicographic_product(a, b);
    if (n == "direct")
        return direct_product(a, b);
    return corona(a, b);
}

Graph build(std::string_view text) { return build(parse_family(text)); }

Graph path_graph(std::size_t n)
{
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    es.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph(n, es);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            es.emplace_back(i, j);
    return Graph(n, es);
}

Graph empty_graph(std::size_t n) { return Graph(n, std::vector<Edge>{}); }

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> es;
    for (Vertex i = 1; i <= leaves; ++i)
        es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph biclique(std::size_t r, std::size_t s)
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < r; ++i)
        for (Vertex j = 0; j < s; ++j)
            es.emplace_back(i, static_cast<Vertex>(r + j));
    return Graph(r + s, es);
}

Graph petersen_graph()
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    for (auto & [u, v] : es)
        if (u > v)
            std::swap(u, v);
    return Graph(10, es);
}

Graph hamming_graph(std::span<const std::size_t> dims)
{
    if (dims.empty())
        throw InputError("hamming needs at least one dimension");
    Graph g = complete_graph(dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i)
        g = cartesian_product(g, complete_graph(dims[i]));
    return g;
}

Graph tree_from_pruefer(std::span<const Vertex> code)
{
    const std::size_t n = code.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : code) {
        if (v >= n)
            throw InputError("Pruefer code entry " + std::to_string(v) + " out of range");
        ++degree[v];
    }
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    std::vector<Edge> es;
    for (Vertex v : code) {
        Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        es.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1)
            leaves.insert(v);
    }
    Vertex a = *leaves.begin();
    Vertex b = *std::next(leaves.begin());
    es.emplace_back(a, b);
    std::sort(es.begin(), es.end());
    return Graph(n, es);
}

Graph random_tree(std::uint64_t seed, std::size_t n)
{
    if (n == 0)
        throw InputError("tree needs at least one vertex");
    if (n == 1)
        return empty_graph(1);
    if (n == 2)
        return path_graph(2);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto & c : code)
        c = static_cast<Vertex>(rng() % n);
    return tree_from_pruefer(code);
}

Graph cartesian_product(const Graph & g, const Graph & h)
{
    return product(g, h, ProductKind::cartesian, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        return (a == c && h.adjacent(b, d)) || (b == d && g.adjacent(a, c));
    });
}

Graph strong_product(const Graph & g, const Graph & h)
{
    return product(g, h, ProductKind::strong, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        bool ga = a == c || g.adjacent(a, c);
        bool hb = b == d || h.adjacent(b, d);
        return ga && hb;
    });
}

Graph lexicographic_product(const Graph & g, const Graph & h)
{
    return product(g, h, ProductKind::lexicographic, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        return g.adjacent(a, c) || (a == c && h.adjacent(b, d));
    });
}

Graph direct_product(const Graph & g, const Graph & h)
{
    return product(g, h, ProductKind::direct, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        return g.adjacent(a, c) && h.adjacent(b, d);
    });
}

Graph corona(const Graph & g, const Graph & h)
{
    const auto ng = g.order(), nh = h.order();
    std::vector<Edge> es = g.edges();
    std::vector<std::string> labels;
    for (Vertex v = 0; v < ng; ++v)
        labels.push_back(g.label(v));
    for (Vertex j = 0; j < ng; ++j) {
        auto base = static_cast<Vertex>(ng + j * nh);
        for (Vertex x = 0; x < nh; ++x) {
            labels.push_back(h.label(x) + "@" + g.label(j));
            es.emplace_back(j, base + x);
        }
        for (auto [a, b] : h.edges())
            es.emplace_back(base + a, base + b);
    }
    return Graph(ng + ng * nh, es, std::move(labels));
}

Graph subdivision(const Graph & g)
{
    const auto n = g.order();
    auto original = g.edges();
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v)
        labels.push_back(g.label(v));
    for (std::size_t k = 0; k < original.size(); ++k) {
        auto [u, v] = original[k];
        auto s = static_cast<Vertex>(n + k);
        es.emplace_back(u, s);
        es.emplace_back(v, s);
        labels.push_back("e_{" + g.label(u) + "," + g.label(v) + "}");
    }
    return Graph(n + original.size(), es, std::move(labels));
}

VertexSet fiber(const Graph & p, FiberKind which, Vertex at)
{
    if (!p.product())
        throw PreconditionError("fiber: graph was not built by a product combinator");
    const auto ng = p.product()->left->order();
    const auto nh = p.product()->right->order();
    VertexSet s(p.order());
    if (which == FiberKind::h_fiber) {
        if (at >= ng)
            throw InputError("fiber: left coordinate " + std::to_string(at) + " out of range");
        for (Vertex h = 0; h < nh; ++h)
            s.insert(static_cast<Vertex>(at * nh + h));
    }
    else {
        if (at >= nh)
            throw InputError("fiber: right coordinate " + std::to_string(at) + " out of range");
        for (Vertex g = 0; g < ng; ++g)
            s.insert(static_cast<Vertex>(g * nh + at));
    }
    return s;
}

namespace
{
    std::vector<Edge> random_tree_edges(std::mt19937_64 & rng, std::size_t n)
    {
        if (n <= 1)
            return {};
        if (n == 2)
            return {{0, 1}};
        std::vector<Vertex> code(n - 2);
        for (auto & c : code)
            c = static_cast<Vertex>(rng() % n);
        return tree_from_pruefer(code).edges();
    }
}

Graph random_connected_graph(std::mt19937_64 & rng, std::size_t n, double p)
{
    auto es = random_tree_edges(rng, n);
    std::vector<char> present(n * n, 0);
    for (auto [u, v] : es)
        present[u * n + v] = 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!present[u * n + v] && unit(rng) < p)
                es.emplace_back(u, v);
    std::sort(es.begin(), es.end());
    return Graph(n, es);
}

Graph random_triangle_free_graph(std::mt19937_64 & rng, std::size_t n, double p)
{
    auto es = random_tree_edges(rng, n);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : es)
        adj[u][v] = adj[v][u] = 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (adj[u][v] || unit(rng) >= p)
                continue;
            bool closes = false;
            for (Vertex w = 0; w < n && !closes; ++w)
                closes = adj[u][w] && adj[v][w];
            if (closes)
                continue;
            adj[u][v] = adj[v][u] = 1;
            es.emplace_back(u, v);
        }
    std::sort(es.begin(), es.end());
    return Graph(n, es);
}

}
