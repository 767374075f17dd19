#include "mvis/ramsey.hpp"

#include "mvis/builders.hpp"

#include <bit>

namespace mvis
{

Graph EdgePartition::host_graph() const { return host == HostKind::complete ? complete_graph(r) : biclique(r, s); }

std::string EdgePartition::host_spec() const
{
    if (host == HostKind::complete)
        return "complete:" + std::to_string(r);
    return "biclique:" + std::to_string(r) + "," + std::to_string(s);
}

namespace
{
    using Row = std::uint64_t;

    enum class Forbidden
    {
        k4,
        c4,
    };

    class EdgeSearch
    {
    public:
        EdgeSearch(Forbidden kind, std::size_t n, std::vector<Edge> edges, int q, std::uint64_t budget) :
            kind_(kind), n_(n), edges_(std::move(edges)), q_(q), counter_(budget), adj_(static_cast<std::size_t>(q) * n, 0),
            class_of_(edges_.size(), -1)
        {
        }

        bool run() { return place(0, 0); }
        const std::vector<int> & classes() const { return class_of_; }
        std::uint64_t nodes() const { return counter_.nodes(); }

    private:
        Row & adj(int c, Vertex v) { return adj_[static_cast<std::size_t>(c) * n_ + v]; }

        // Would colouring uv with c close a forbidden subgraph inside class c?
        bool closes(int c, Vertex u, Vertex v)
        {
            if (kind_ == Forbidden::k4) {
                Row common = adj(c, u) & adj(c, v);
                for (Row m = common; m; m &= m - 1) {
                    auto w = static_cast<Vertex>(std::countr_zero(m));
                    if (adj(c, w) & common)
                        return true;
                }
                return false;
            }
            // u is on the left, v on the right: look for a left vertex w that
            // already sees v and shares another right neighbour with u.
            for (Vertex w = 0; w < n_; ++w)
                if (w != u && (adj(c, w) >> v & 1U) && (adj(c, w) & adj(c, u)))
                    return true;
            return false;
        }

        bool place(std::size_t i, int used)
        {
            counter_.tick();
            if (i == edges_.size())
                return true;
            auto [u, v] = edges_[i];
            const int limit = std::min(q_, used + 1);
            for (int c = 0; c < limit; ++c) {
                if (closes(c, u, v))
                    continue;
                adj(c, u) |= Row{1} << v;
                adj(c, v) |= Row{1} << u;
                class_of_[i] = c;
                if (place(i + 1, std::max(used, c + 1)))
                    return true;
                adj(c, u) &= ~(Row{1} << v);
                adj(c, v) &= ~(Row{1} << u);
            }
            class_of_[i] = -1;
            return false;
        }

        Forbidden kind_;
        std::size_t n_;
        std::vector<Edge> edges_;
        int q_;
        detail::NodeCounter counter_;
        std::vector<Row> adj_;
        std::vector<int> class_of_;
    };

    std::optional<EdgePartition> search(EdgePartition shell, Forbidden kind, int q, const RamseyOptions & opt, const char * name)
    {
        if (q < 1)
            throw InputError(std::string(name) + ": need at least one class");
        const auto n = shell.order();
        if (n > 64)
            throw PreconditionError(std::string(name) + ": hosts above 64 vertices are not supported");
        shell.edges = shell.host_graph().edges();
        EdgeSearch s(kind, n, shell.edges, q, opt.node_budget);
        try {
            if (!s.run())
                return std::nullopt;
        }
        catch (const detail::BudgetHit & hit) {
            throw BudgetExhausted(name, 1, q, hit.nodes);
        }
        shell.class_of = s.classes();
        int k = 0;
        for (int c : shell.class_of)
            k = std::max(k, c + 1);
        shell.classes = k;
        return shell;
    }

    template <typename Find>
    int smallest_q(std::size_t edges, const char * name, Find && find)
    {
        const int upper = std::max<int>(1, static_cast<int>(edges));
        for (int q = 1; q <= upper; ++q) {
            try {
                if (find(q))
                    return q;
            }
            catch (const BudgetExhausted & e) {
                throw BudgetExhausted(name, q, upper, e.nodes());
            }
        }
        return upper;
    }
}

std::optional<EdgePartition> find_k4free_partition(std::size_t n, int q, const RamseyOptions & opt)
{
    if (n < 2)
        throw InputError("find_k4free_partition: need n >= 2");
    if (n > 12 && !opt.allow_large)
        throw PreconditionError("find_k4free_partition: n > 12 is refused without the large-instance override");
    EdgePartition p;
    p.host = HostKind::complete;
    p.r = n;
    return search(std::move(p), Forbidden::k4, q, opt, "find_k4free_partition");
}

int rho(std::size_t n, const RamseyOptions & opt)
{
    return smallest_q(n * (n - 1) / 2, "rho", [&](int q) { return find_k4free_partition(n, q, opt).has_value(); });
}

std::optional<EdgePartition> find_c4free_partition(std::size_t r, std::size_t s, int q, const RamseyOptions & opt)
{
    if (r < 1 || s < 1)
        throw InputError("find_c4free_partition: need r, s >= 1");
    if (r * s > 36 && !opt.allow_large)
        throw PreconditionError("find_c4free_partition: r*s > 36 is refused without the large-instance override");
    EdgePartition p;
    p.host = HostKind::biclique;
    p.r = r;
    p.s = s;
    return search(std::move(p), Forbidden::c4, q, opt, "find_c4free_partition");
}

int rho_rs(std::size_t r, std::size_t s, const RamseyOptions & opt)
{
    return smallest_q(r * s, "rho_rs", [&](int q) { return find_c4free_partition(r, s, q, opt).has_value(); });
}

namespace
{
    std::vector<std::vector<int>> class_matrix(const EdgePartition & p)
    {
        const auto n = p.order();
        std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            auto [u, v] = p.edges[i];
            m[u][v] = m[v][u] = p.class_of[i];
        }
        return m;
    }
}

std::optional<std::array<Vertex, 4>> find_monochromatic_k4(const EdgePartition & p)
{
    const auto m = class_matrix(p);
    const auto n = static_cast<Vertex>(p.order());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const int k = m[a][b];
                    if (k >= 0 && m[a][c] == k && m[a][d] == k && m[b][c] == k && m[b][d] == k && m[c][d] == k)
                        return std::array<Vertex, 4>{a, b, c, d};
                }
    return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_monochromatic_c4(const EdgePartition & p)
{
    const auto m = class_matrix(p);
    const auto n = static_cast<Vertex>(p.order());
    // Any 4-cycle of a bipartite host alternates sides; in K_{r,s} that means
    // two left and two right vertices.
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    if (c == a || c == b || d == a || d == b)
                        continue;
                    const int k = m[a][c];
                    if (k >= 0 && m[a][d] == k && m[b][c] == k && m[b][d] == k)
                        return std::array<Vertex, 4>{a, b, c, d};
                }
    return std::nullopt;
}

}
