#include "mvis/chromatic.hpp"

#include "mvis/geodesic.hpp"
#include "mvis/visibility.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace mvis
{

Coloring::Coloring(std::vector<int> colors) : color_(std::move(colors))
{
    std::vector<int> used(color_.begin(), color_.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int & c : color_)
        c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
    k_ = static_cast<int>(used.size());
}

Coloring Coloring::from_classes(std::size_t n, const std::vector<std::vector<Vertex>> & classes)
{
    std::vector<int> colors(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (Vertex v : classes[c]) {
            if (v >= n)
                throw InputError("coloring: vertex " + std::to_string(v) + " out of range");
            if (colors[v] != -1)
                throw InputError("coloring: vertex " + std::to_string(v) + " appears in two classes");
            colors[v] = static_cast<int>(c);
        }
    for (Vertex v = 0; v < n; ++v)
        if (colors[v] == -1)
            throw InputError("coloring: vertex " + std::to_string(v) + " is uncoloured");
    return Coloring(std::move(colors));
}

std::vector<std::vector<Vertex>> Coloring::classes() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k_));
    for (Vertex v = 0; v < color_.size(); ++v)
        out[static_cast<std::size_t>(color_[v])].push_back(v);
    return out;
}

VertexSet Coloring::class_set(int c) const
{
    VertexSet s(color_.size());
    for (Vertex v = 0; v < color_.size(); ++v)
        if (color_[v] == c)
            s.insert(v);
    return s;
}

const char * to_string(ColoringMode m)
{
    switch (m) {
    case ColoringMode::proper: return "proper";
    case ColoringMode::defective1: return "defective1";
    case ColoringMode::mv: return "mv";
    case ColoringMode::imv: return "imv";
    }
    return "?";
}

ColoringMode parse_coloring_mode(const std::string & s)
{
    if (s == "proper")
        return ColoringMode::proper;
    if (s == "defective1")
        return ColoringMode::defective1;
    if (s == "mv")
        return ColoringMode::mv;
    if (s == "imv")
        return ColoringMode::imv;
    throw InputError("unknown coloring mode '" + s + "'");
}

ColoringReport validate_coloring(const Graph & g, const Coloring & c, ColoringMode mode)
{
    ColoringReport r;
    if (c.order() != g.order()) {
        r.valid = false;
        r.violation = "coloring covers " + std::to_string(c.order()) + " vertices, graph has " + std::to_string(g.order());
        return r;
    }
    auto fail = [&](int cls, std::vector<Vertex> who, std::string what) {
        r.valid = false;
        r.bad_class = cls;
        r.culprits = std::move(who);
        r.violation = std::move(what);
        return r;
    };

    if (mode == ColoringMode::proper || mode == ColoringMode::imv) {
        for (auto [u, v] : g.edges())
            if (c[u] == c[v])
                return fail(c[u], {u, v}, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
        if (mode == ColoringMode::proper)
            return r;
    }
    if (mode == ColoringMode::defective1) {
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<Vertex> same;
            for (Vertex w : g.neighbors(v))
                if (c[w] == c[v])
                    same.push_back(w);
            if (same.size() > 1)
                return fail(c[v], {v, same[0], same[1]},
                            "vertex " + std::to_string(v) + " has " + std::to_string(same.size()) + " neighbours of its own colour");
        }
        return r;
    }

    GeodesicIndex gi(g);
    for (int cls = 0; cls < c.k(); ++cls) {
        auto set = c.class_set(cls);
        if (auto bad = find_invisible_pair(gi, set))
            return fail(cls, {bad->first, bad->second},
                        "class " + std::to_string(cls) + ": vertices " + std::to_string(bad->first) + " and " + std::to_string(bad->second)
                            + " are not mutually visible");
    }
    return r;
}

namespace
{
    using Mask = std::uint64_t;
    constexpr int kMaxClasses = 64;

    /// Proper colour classes.
    class ProperClasses
    {
    public:
        ProperClasses(const Graph & g, int k) : g_(g), w_(g.words()), sets_(static_cast<std::size_t>(k) * g.words(), 0) {}

        bool can_add(int c, Vertex v) const { return !bits::intersects(g_.row(v), set(c), w_); }
        void add(int c, Vertex v) { bits::set(set(c), v); }
        void pop(int c, Vertex v) { bits::reset(set(c), v); }

    private:
        bits::Word * set(int c) { return sets_.data() + static_cast<std::size_t>(c) * w_; }
        const bits::Word * set(int c) const { return sets_.data() + static_cast<std::size_t>(c) * w_; }

        const Graph & g_;
        std::size_t w_;
        std::vector<bits::Word> sets_;
    };

    /// Classes inducing subgraphs of maximum degree at most one.
    class Defective1Classes
    {
    public:
        Defective1Classes(const Graph & g, int k) : g_(g), w_(g.words()), sets_(static_cast<std::size_t>(k) * g.words(), 0) {}

        bool can_add(int c, Vertex v) const
        {
            const auto * s = set(c);
            int same = 0;
            for (std::size_t i = 0; i < w_; ++i)
                same += std::popcount(g_.row(v)[i] & s[i]);
            if (same > 1)
                return false;
            if (same == 1) {
                auto w = static_cast<Vertex>(bits::next(g_.row(v), w_, 0));
                while (!bits::test(s, w))
                    w = static_cast<Vertex>(bits::next(g_.row(v), w_, w + 1));
                if (bits::intersects(g_.row(w), s, w_))
                    return false;
            }
            return true;
        }
        void add(int c, Vertex v) { bits::set(set(c), v); }
        void pop(int c, Vertex v) { bits::reset(set(c), v); }

    private:
        bits::Word * set(int c) { return sets_.data() + static_cast<std::size_t>(c) * w_; }
        const bits::Word * set(int c) const { return sets_.data() + static_cast<std::size_t>(c) * w_; }

        const Graph & g_;
        std::size_t w_;
        std::vector<bits::Word> sets_;
    };

    /// MV or IMV classes backed by incremental witness tables.
    class VisibleClasses
    {
    public:
        VisibleClasses(VisibilityKernel & kernel, bool independent, int k)
        {
            sets_.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                sets_.emplace_back(kernel, independent);
        }

        bool can_add(int c, Vertex v) { return sets_[static_cast<std::size_t>(c)].can_add(v); }
        void add(int c, Vertex v) { sets_[static_cast<std::size_t>(c)].add(v); }
        void pop(int c, Vertex) { sets_[static_cast<std::size_t>(c)].pop(); }

    private:
        std::vector<IncrementalVisibleSet> sets_;
    };

    /// k-colourability under a hereditary class property. Vertices are chosen
    /// by fewest remaining classes, then by degree, then by index; a vertex may
    /// open only the next unused class.
    template <typename Classes>
    class PartitionSearch
    {
    public:
        PartitionSearch(const Graph & g, Classes & classes, int k, detail::NodeCounter & counter) :
            g_(g), classes_(classes), k_(k), counter_(counter), n_(g.order()), color_(g.order(), -1), domain_(g.order(), 0)
        {
        }

        std::optional<Coloring> run()
        {
            if (n_ == 0)
                return Coloring(std::vector<int>{});
            if (solve(0))
                return Coloring(color_);
            return std::nullopt;
        }

    private:
        Vertex select() const
        {
            Vertex best = static_cast<Vertex>(n_);
            int best_opts = kMaxClasses + 2;
            for (Vertex v = 0; v < n_; ++v) {
                if (color_[v] != -1)
                    continue;
                int opts = std::popcount(domain_[v]) + (used_ < k_ ? 1 : 0);
                if (opts < best_opts || (opts == best_opts && g_.degree(v) > g_.degree(best))) {
                    best = v;
                    best_opts = opts;
                }
            }
            return best;
        }

        bool solve(std::size_t assigned)
        {
            counter_.tick();
            if (assigned == n_)
                return true;
            const Vertex v = select();
            Mask options = domain_[v];
            const bool may_open = used_ < k_;
            if (!options && !may_open)
                return false;

            auto try_class = [&](int c, bool opening) {
                classes_.add(c, v);
                color_[v] = c;
                if (opening)
                    ++used_;
                const std::size_t mark = trail_.size();
                const Mask bit = Mask{1} << c;
                bool wiped = false;
                for (Vertex u = 0; u < n_ && !wiped; ++u) {
                    if (color_[u] != -1)
                        continue;
                    const bool had = opening || (domain_[u] & bit);
                    if (!had)
                        continue;
                    const bool keep = classes_.can_add(c, u);
                    if (opening ? keep : !keep) {
                        trail_.emplace_back(u, domain_[u]);
                        domain_[u] ^= bit;
                    }
                    wiped = domain_[u] == 0 && used_ == k_;
                }
                bool ok = !wiped && solve(assigned + 1);
                if (ok)
                    return true;
                while (trail_.size() > mark) {
                    domain_[trail_.back().first] = trail_.back().second;
                    trail_.pop_back();
                }
                if (opening)
                    --used_;
                color_[v] = -1;
                classes_.pop(c, v);
                return false;
            };

            for (Mask m = options; m; m &= m - 1)
                if (try_class(std::countr_zero(m), false))
                    return true;
            if (may_open && try_class(used_, true))
                return true;
            return false;
        }

        const Graph & g_;
        Classes & classes_;
        int k_;
        detail::NodeCounter & counter_;
        std::size_t n_;
        int used_ = 0;
        std::vector<int> color_;
        std::vector<Mask> domain_;
        std::vector<std::pair<Vertex, Mask>> trail_;
    };

    template <typename MakeClasses>
    ColoringResult minimise(const Graph & g, int lower, const Coloring & upper, const char * name, const SearchOptions & opt,
                            MakeClasses && make)
    {
        lower = std::max(lower, g.order() ? 1 : 0);
        if (upper.k() <= lower)
            return {upper.k(), upper};
        detail::NodeCounter counter(opt.node_budget);
        int k = lower;
        try {
            for (; k < upper.k(); ++k) {
                if (k > kMaxClasses)
                    throw PreconditionError(std::string(name) + ": search beyond 64 classes is not supported");
                auto classes = make(k);
                PartitionSearch search(g, classes, k, counter);
                if (auto c = search.run())
                    return {c->k(), *c};
            }
        }
        catch (const detail::BudgetHit & hit) {
            throw BudgetExhausted(name, k, upper.k(), hit.nodes);
        }
        return {upper.k(), upper};
    }

    /// First-fit over the degree order.
    template <typename Classes>
    Coloring greedy(const Graph & g, Classes & classes, std::size_t n)
    {
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<int> color(n, -1);
        int used = 0;
        for (Vertex v : order) {
            int c = 0;
            while (c < used && !classes.can_add(c, v))
                ++c;
            if (c == used)
                ++used;
            classes.add(c, v);
            color[v] = c;
        }
        return Coloring(std::move(color));
    }

    int ceil_div(long a, long b) { return static_cast<int>((a + b - 1) / b); }

    // Cheap lower bounds shared by both visibility colourings.
    int convex_path_bound(const GeodesicIndex & gi) { return ceil_div(longest_convex_path(gi), 2); }

    constexpr std::size_t kOrderBoundLimit = 16;

    ColoringResult visible_coloring(const Graph & g, bool independent, const SearchOptions & opt)
    {
        const char * name = independent ? "chi_mu_i" : "chi_mu";
        const auto n = g.order();
        if (n == 0)
            return {0, Coloring(std::vector<int>{})};
        GeodesicIndex gi(g);
        if (!gi.connected())
            throw PreconditionError(std::string(name) + ": graph is disconnected");
        VisibilityKernel kernel(gi);

        int lower = convex_path_bound(gi);
        if (independent) {
            lower = std::max<int>(lower, static_cast<int>(omega(g, opt).value));
            if (g.size() > 0)
                lower = std::max(lower, 2);
            if (!g.is_bipartite() || gi.max_distance() >= 4)
                lower = std::max(lower, 3);
            lower = std::max(lower, ceil_div(static_cast<long>(n), alpha(g, opt).value));
        }
        if (n <= kOrderBoundLimit) {
            auto best = independent ? mu_i(g, opt) : mu(g, opt);
            lower = std::max(lower, ceil_div(static_cast<long>(n), best.value));
        }

        VisibleClasses scratch(kernel, independent, static_cast<int>(n));
        Coloring upper = greedy(g, scratch, n);
        return minimise(g, lower, upper, name, opt, [&](int k) { return VisibleClasses(kernel, independent, k); });
    }
}

ColoringResult chi(const Graph & g, const SearchOptions & opt)
{
    const auto n = g.order();
    ProperClasses scratch(g, static_cast<int>(n));
    Coloring upper = greedy(g, scratch, n);
    int lower = static_cast<int>(omega(g, opt).value);
    if (n > 0)
        lower = std::max(lower, ceil_div(static_cast<long>(n), alpha(g, opt).value));
    return minimise(g, lower, upper, "chi", opt, [&](int k) { return ProperClasses(g, k); });
}

ColoringResult chi_defective1(const Graph & g, const SearchOptions & opt)
{
    const auto n = g.order();
    Defective1Classes scratch(g, static_cast<int>(n));
    Coloring upper = greedy(g, scratch, n);
    int lower = ceil_div(omega(g, opt).value, 2);
    return minimise(g, lower, upper, "chi_defective1", opt, [&](int k) { return Defective1Classes(g, k); });
}

ColoringResult chi_mu(const Graph & g, const SearchOptions & opt) { return visible_coloring(g, false, opt); }
ColoringResult chi_mu_i(const Graph & g, const SearchOptions & opt) { return visible_coloring(g, true, opt); }

std::optional<Coloring> mv_coloring_with(const Graph & g, int k, bool independent, const SearchOptions & opt)
{
    if (k <= 0)
        return g.order() == 0 ? std::optional<Coloring>(Coloring(std::vector<int>{})) : std::nullopt;
    if (k > kMaxClasses)
        throw PreconditionError("mv_coloring_with: more than 64 classes is not supported");
    GeodesicIndex gi(g);
    if (!gi.connected())
        throw PreconditionError("mv_coloring_with: graph is disconnected");
    if (independent && omega(g, opt).value > k)
        return std::nullopt;
    VisibilityKernel kernel(gi);
    VisibleClasses classes(kernel, independent, k);
    detail::NodeCounter counter(opt.node_budget);
    try {
        PartitionSearch search(g, classes, k, counter);
        return search.run();
    }
    catch (const detail::BudgetHit & hit) {
        throw BudgetExhausted("mv_coloring_with", 0, k, hit.nodes);
    }
}

namespace
{
    void note(std::vector<TaggedBound> & list, long value, const char * tag) { list.push_back({value, tag}); }

    template <typename F>
    void attempt(F && f)
    {
        try {
            f();
        }
        catch (const BudgetExhausted &) {
        }
    }

    void settle(BoundReport & r)
    {
        for (auto & b : r.lower_all)
            if (b.value > r.lower.value)
                r.lower = b;
        r.upper = r.upper_all.front();
        for (auto & b : r.upper_all)
            if (b.value < r.upper.value)
                r.upper = b;
    }
}

BoundReport lower_bounds(const Graph & g, const std::optional<VertexSet> & convex, const SearchOptions & opt)
{
    BoundReport r;
    const auto n = static_cast<long>(g.order());
    GeodesicIndex gi(g);
    if (!gi.connected())
        throw PreconditionError("lower_bounds: graph is disconnected");
    note(r.lower_all, n ? 1 : 0, "trivial");
    if (n == 0) {
        r.upper_all.push_back({0, "trivial"});
        settle(r);
        return r;
    }
    attempt([&] { note(r.lower_all, omega(g, opt).value, "clique"); });
    attempt([&] { note(r.lower_all, chi(g, opt).k, "chromatic"); });
    attempt([&] { note(r.lower_all, chi_mu(g, opt).k, "mv-chromatic"); });
    attempt([&] { note(r.lower_all, ceil_div(n, mu_i(g, opt).value), "order-over-mu_i"); });
    attempt([&] { note(r.lower_all, ceil_div(n, mu(g, opt).value), "order-over-mu"); });
    note(r.lower_all, convex_path_bound(gi), "convex-path");
    if (!g.is_bipartite() || gi.max_distance() >= 4)
        note(r.lower_all, 3, "bipartite-diameter");
    if (convex) {
        if (!is_convex(gi, *convex))
            throw PreconditionError("lower_bounds: supplied vertex set is not convex");
        attempt([&] { note(r.lower_all, chi_mu(g.induced(*convex), opt).k, "convex-subgraph"); });
    }
    r.upper_all.push_back({n, "singletons"});
    settle(r);
    return r;
}

BoundReport upper_bounds(const Graph & g, const SearchOptions & opt)
{
    BoundReport r;
    const auto n = static_cast<long>(g.order());
    note(r.lower_all, n ? 1 : 0, "trivial");
    note(r.upper_all, n, "singletons");
    if (n == 0) {
        settle(r);
        return r;
    }
    GeodesicIndex gi(g);
    if (!gi.connected())
        throw PreconditionError("upper_bounds: graph is disconnected");
    {
        VisibilityKernel kernel(gi);
        VisibleClasses scratch(kernel, true, static_cast<int>(n));
        note(r.upper_all, greedy(g, scratch, g.order()).k(), "greedy");
    }
    attempt([&] {
        long cm = chi_mu(g, opt).k;
        attempt([&] { note(r.upper_all, chi(g, opt).k * cm, "chi-times-chi_mu"); });
        if (g.is_bipartite())
            note(r.upper_all, 2 * cm, "bipartite");
    });
    if (!g.find_triangle() && n >= 2) {
        attempt([&] { note(r.upper_all, ceil_div(n - mu_i(g, opt).value, 2) + 1, "triangle-free-mu_i"); });
        note(r.upper_all, ceil_div(n - static_cast<long>(g.max_degree()), 2) + 1, "triangle-free-max-degree");
    }
    settle(r);
    return r;
}

}
