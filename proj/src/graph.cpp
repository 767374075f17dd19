#include "mvis/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace mvis
{

const char * to_string(ProductKind k)
{
    switch (k) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lex";
    case ProductKind::direct: return "direct";
    }
    return "?";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) :
    n_(n),
    words_(bits::words_for(n)),
    adjacency_(n),
    rows_(n * bits::words_for(n), 0),
    labels_(std::move(labels))
{
    if (!labels_.empty() && labels_.size() != n)
        throw InputError("label count " + std::to_string(labels_.size()) + " does not match order " + std::to_string(n));

    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." + std::to_string(n ? n - 1 : 0));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw InputError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        bits::set(rows_.data() + static_cast<std::size_t>(u) * words_, v);
        bits::set(rows_.data() + static_cast<std::size_t>(v) * words_, u);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        ++m_;
    }
    for (auto & a : adjacency_)
        std::sort(a.begin(), a.end());
}

std::size_t Graph::max_degree() const
{
    std::size_t d = 0;
    for (auto & a : adjacency_)
        d = std::max(d, a.size());
    return d;
}

std::size_t Graph::min_degree() const
{
    if (n_ == 0)
        return 0;
    std::size_t d = n_;
    for (auto & a : adjacency_)
        d = std::min(d, a.size());
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const
{
    if (labels_.empty())
        return std::to_string(v);
    return labels_[v];
}

Graph Graph::with_product(ProductInfo info) const
{
    Graph g = *this;
    g.product_ = std::move(info);
    return g;
}

VertexSet Graph::neighborhood(Vertex v) const
{
    VertexSet s(n_);
    std::copy(row(v), row(v) + words_, s.data());
    return s;
}

Graph Graph::induced(const VertexSet & s) const
{
    auto members = s.to_vector();
    std::vector<Vertex> index(n_, static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < members.size(); ++i)
        index[members[i]] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges())
        if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1))
            es.emplace_back(index[u], index[v]);
    std::vector<std::string> labels;
    if (has_labels())
        for (Vertex v : members)
            labels.push_back(labels_[v]);
    return Graph(members.size(), es, std::move(labels));
}

Graph Graph::complement() const
{
    std::vector<Edge> es;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                es.emplace_back(u, v);
    return Graph(n_, es, labels_);
}

bool Graph::is_connected() const
{
    if (n_ <= 1)
        return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

bool Graph::is_bipartite() const
{
    std::vector<int> side(n_, -1);
    for (Vertex s = 0; s < n_; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : adjacency_[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                }
                else if (side[w] == side[v])
                    return false;
            }
        }
    }
    return true;
}

bool Graph::is_independent(const VertexSet & s) const
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && bits::intersects(row(v), s.data(), words_))
            ok = false;
    });
    return ok;
}

std::optional<std::array<Vertex, 3>> Graph::find_triangle() const
{
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adjacency_[u]) {
            if (v <= u)
                continue;
            auto w = bits::next(row(u), words_, 0);
            while (w < n_ && !bits::test(row(v), static_cast<Vertex>(w)))
                w = bits::next(row(u), words_, w + 1);
            if (w < n_) {
                std::array<Vertex, 3> t{u, v, static_cast<Vertex>(w)};
                std::sort(t.begin(), t.end());
                return t;
            }
        }
    return std::nullopt;
}

namespace
{
    std::string strip_comment(const std::string & line)
    {
        auto pos = line.find('#');
        return pos == std::string::npos ? line : line.substr(0, pos);
    }

    bool blank(const std::string & s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }
}

Graph read_edge_list(std::istream & in)
{
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> es;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line))
            continue;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a >> b))
            throw InputError("edge list line " + std::to_string(lineno) + ": expected two integers");
        std::string extra;
        if (ls >> extra)
            throw InputError("edge list line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        if (n < 0) {
            if (a < 0 || b < 0)
                throw InputError("edge list header: negative counts");
            n = a;
            m = b;
            continue;
        }
        if (!(0 <= a && a < b && b < n))
            throw InputError("edge list line " + std::to_string(lineno) + ": need 0 <= u < v < n");
        es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0)
        throw InputError("edge list: missing 'n m' header");
    if (static_cast<long long>(es.size()) != m)
        throw InputError("edge list: header announces " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
    return Graph(static_cast<std::size_t>(n), es);
}

Graph read_edge_list_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

}
