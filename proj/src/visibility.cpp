#include "mvis/visibility.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace mvis
{

std::vector<Vertex> VisibilityWitness::path() const
{
    std::vector<Vertex> p;
    p.reserve(interior.size() + 2);
    p.push_back(u);
    p.insert(p.end(), interior.begin(), interior.end());
    p.push_back(v);
    return p;
}

VisibilityKernel::VisibilityKernel(const GeodesicIndex & gi) :
    gi_(&gi), w_(gi.words()), layers_((static_cast<std::size_t>(gi.max_distance()) + 1) * gi.words(), 0)
{
}

int VisibilityKernel::sweep(Vertex u, Vertex v, const bits::Word * blocked)
{
    const int d = gi_->distance(u, v);
    if (d == kInfinite)
        return -1;
    if (d <= 1)
        return d;
    const Graph & g = gi_->graph();
    bits::Word * prev = layers_.data();
    std::fill(prev, prev + w_, 0);
    bits::set(prev, u);
    for (int k = 1; k < d; ++k) {
        bits::Word * cur = prev + w_;
        std::fill(cur, cur + w_, 0);
        bits::for_each(prev, w_, [&](Vertex x) {
            const auto * r = g.row(x);
            for (std::size_t i = 0; i < w_; ++i)
                cur[i] |= r[i];
        });
        const auto * a = gi_->sphere(u, k);
        const auto * b = gi_->sphere(v, d - k);
        bits::Word any = 0;
        for (std::size_t i = 0; i < w_; ++i) {
            cur[i] &= a[i] & b[i] & ~blocked[i];
            any |= cur[i];
        }
        if (!any)
            return -1;
        prev = cur;
    }
    return d;
}

bool VisibilityKernel::visible(Vertex u, Vertex v, const bits::Word * blocked) { return sweep(u, v, blocked) >= 0; }

bool VisibilityKernel::visible(Vertex u, Vertex v, const bits::Word * blocked, bits::Word * interior)
{
    std::fill(interior, interior + w_, 0);
    const int d = sweep(u, v, blocked);
    if (d < 0)
        return false;
    const Graph & g = gi_->graph();
    auto lowest_in = [&](int k, const bits::Word * mask) {
        const bits::Word * layer = layers_.data() + static_cast<std::size_t>(k) * w_;
        for (std::size_t i = 0; i < w_; ++i) {
            bits::Word x = layer[i] & (mask ? mask[i] : ~bits::Word{0});
            if (x)
                return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        }
        return static_cast<Vertex>(0);
    };
    if (d >= 2) {
        Vertex cur = lowest_in(d - 1, nullptr);
        for (int k = d - 1; k >= 1; --k) {
            bits::set(interior, cur);
            if (k > 1)
                cur = lowest_in(k - 1, g.row(cur));
        }
    }
    return true;
}

std::optional<std::vector<Vertex>> VisibilityKernel::witness(Vertex u, Vertex v, const bits::Word * blocked)
{
    std::vector<bits::Word> interior(w_);
    if (!visible(u, v, blocked, interior.data()))
        return std::nullopt;
    // Order the interior by distance from u.
    std::vector<Vertex> out;
    bits::for_each(interior.data(), w_, [&](Vertex x) { out.push_back(x); });
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return gi_->distance(u, a) < gi_->distance(u, b); });
    return out;
}

std::optional<VisibilityWitness> is_visible_pair(const GeodesicIndex & gi, const VertexSet & x, Vertex u, Vertex v)
{
    if (u == v)
        throw PreconditionError("is_visible_pair: u and v must differ");
    if (!x.contains(u) || !x.contains(v))
        throw PreconditionError("is_visible_pair: both vertices must belong to the set");
    VisibilityKernel kernel(gi);
    auto interior = kernel.witness(u, v, x.data());
    if (!interior)
        return std::nullopt;
    return VisibilityWitness{u, v, std::move(*interior)};
}

std::optional<VisibilityWitness> is_visible_pair(const Graph & g, const VertexSet & x, Vertex u, Vertex v)
{
    GeodesicIndex gi(g);
    return is_visible_pair(gi, x, u, v);
}

namespace
{
    constexpr std::size_t kParallelMembers = 48;
}

std::optional<std::pair<Vertex, Vertex>> find_invisible_pair(const GeodesicIndex & gi, const VertexSet & x, Execution exec)
{
    const auto members = x.to_vector();
    const auto k = static_cast<long>(members.size());
    if (exec == Execution::serial || members.size() < kParallelMembers) {
        VisibilityKernel kernel(gi);
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j)
                if (!kernel.visible(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)], x.data()))
                    return std::make_pair(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
        return std::nullopt;
    }

    // Rows are scanned in parallel; the smallest failing (i, j) wins so the
    // answer matches the serial scan.
    std::atomic<long> first_row{k};
    std::vector<long> failing_col(members.size(), -1);
#pragma omp parallel
    {
        VisibilityKernel kernel(gi);
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < k; ++i) {
            if (i > first_row.load(std::memory_order_relaxed))
                continue;
            for (long j = i + 1; j < k; ++j) {
                if (!kernel.visible(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)], x.data())) {
                    failing_col[static_cast<std::size_t>(i)] = j;
                    long seen = first_row.load();
                    while (i < seen && !first_row.compare_exchange_weak(seen, i)) {
                    }
                    break;
                }
            }
        }
    }
    long i = first_row.load();
    if (i == k)
        return std::nullopt;
    return std::make_pair(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(failing_col[static_cast<std::size_t>(i)])]);
}

bool is_mv_set(const GeodesicIndex & gi, const VertexSet & x, Execution exec) { return !find_invisible_pair(gi, x, exec); }

bool is_mv_set(const Graph & g, const VertexSet & x)
{
    if (x.size() <= 1)
        return true;
    GeodesicIndex gi(g);
    return is_mv_set(gi, x);
}

bool is_imv_set(const GeodesicIndex & gi, const VertexSet & x, Execution exec)
{
    return gi.graph().is_independent(x) && is_mv_set(gi, x, exec);
}

bool is_imv_set(const Graph & g, const VertexSet & x)
{
    if (!g.is_independent(x))
        return false;
    return is_mv_set(g, x);
}

IncrementalVisibleSet::IncrementalVisibleSet(VisibilityKernel & kernel, bool independent) :
    kernel_(&kernel),
    independent_(independent),
    n_(kernel.index().order()),
    w_(kernel.words()),
    blocked_(kernel.words(), 0)
{
}

bool IncrementalVisibleSet::attempt(Vertex v, bool commit)
{
    if (contains(v))
        return false;
    const Graph & g = kernel_->index().graph();
    if (independent_ && bits::intersects(g.row(v), blocked_.data(), w_))
        return false;

    bits::set(blocked_.data(), v);
    staged_pairs_.clear();
    auto stage = [&](Vertex a, Vertex b) {
        if (a > b)
            std::swap(a, b);
        staged_pairs_.emplace_back(a, b);
        if (staged_.size() < staged_pairs_.size() * w_)
            staged_.resize(staged_pairs_.size() * w_ * 2);
        bits::Word * slot = staged_.data() + (staged_pairs_.size() - 1) * w_;
        return kernel_->visible(a, b, blocked_.data(), slot);
    };

    bool ok = true;
    for (Vertex x : members_)
        if (!stage(x, v)) {
            ok = false;
            break;
        }
    const std::size_t fresh = staged_pairs_.size();
    for (std::size_t i = 0; ok && i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            Vertex a = std::min(members_[i], members_[j]);
            Vertex b = std::max(members_[i], members_[j]);
            if (bits::test(witness(a, b), v) && !stage(a, b)) {
                ok = false;
                break;
            }
        }

    if (!ok || !commit) {
        bits::reset(blocked_.data(), v);
        return ok;
    }

    if (table_.empty())
        table_.assign(n_ * n_ * w_, 0);
    marks_.push_back(trail_.size());
    for (std::size_t s = 0; s < staged_pairs_.size(); ++s) {
        auto [a, b] = staged_pairs_[s];
        bits::Word * dst = witness(a, b);
        if (s >= fresh) {
            trail_.push_back({a, b});
            trail_words_.insert(trail_words_.end(), dst, dst + w_);
        }
        std::copy_n(staged_.data() + s * w_, w_, dst);
    }
    members_.push_back(v);
    return true;
}

void IncrementalVisibleSet::pop()
{
    if (members_.empty())
        return;
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
        auto [a, b] = trail_.back();
        trail_.pop_back();
        std::copy_n(trail_words_.end() - static_cast<long>(w_), w_, witness(a, b));
        trail_words_.resize(trail_words_.size() - w_);
    }
    bits::reset(blocked_.data(), members_.back());
    members_.pop_back();
}

void IncrementalVisibleSet::clear()
{
    while (!members_.empty())
        pop();
}

namespace
{
    std::vector<Vertex> degree_order(const Graph & g)
    {
        std::vector<Vertex> order(g.order());
        std::iota(order.begin(), order.end(), Vertex{0});
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    class MaxVisibleSearch
    {
    public:
        MaxVisibleSearch(const Graph & g, VisibilityKernel & kernel, bool independent, std::uint64_t budget, std::size_t cap) :
            g_(g), set_(kernel, independent), independent_(independent), counter_(budget), cap_(cap)
        {
        }

        std::vector<Vertex> run()
        {
            auto cands = degree_order(g_);
            expand(cands);
            return best_;
        }

        std::uint64_t nodes() const { return counter_.nodes(); }
        const std::vector<Vertex> & best() const { return best_; }

    private:
        // bound[i] caps how many of cands[i..] can join simultaneously.
        std::vector<std::size_t> suffix_bounds(const std::vector<Vertex> & cands)
        {
            std::vector<std::size_t> bound(cands.size() + 1, 0);
            if (!independent_) {
                for (std::size_t i = 0; i < cands.size(); ++i)
                    bound[i] = cands.size() - i;
                return bound;
            }
            // Greedy clique cover: an independent set meets each clique once.
            const auto w = g_.words();
            cliques_.clear();
            std::size_t count = 0;
            for (std::size_t i = cands.size(); i-- > 0;) {
                Vertex c = cands[i];
                const auto * r = g_.row(c);
                std::size_t placed = count;
                for (std::size_t q = 0; q < count; ++q) {
                    const auto * cl = cliques_.data() + q * w;
                    bool fits = true;
                    for (std::size_t t = 0; t < w && fits; ++t)
                        fits = (cl[t] & ~r[t]) == 0;
                    if (fits) {
                        placed = q;
                        break;
                    }
                }
                if (placed == count) {
                    cliques_.resize((count + 1) * w, 0);
                    std::fill_n(cliques_.data() + count * w, w, 0);
                    ++count;
                }
                bits::set(cliques_.data() + placed * w, c);
                bound[i] = count;
            }
            return bound;
        }

        void expand(const std::vector<Vertex> & cands)
        {
            counter_.tick();
            const auto bound = suffix_bounds(cands);
            for (std::size_t i = 0; i < cands.size(); ++i) {
                if (set_.size() + bound[i] <= best_.size())
                    return;
                set_.add(cands[i]);
                if (set_.size() > best_.size()) {
                    best_ = set_.members();
                    if (best_.size() >= cap_) {
                        set_.pop();
                        return;
                    }
                }
                std::vector<Vertex> next;
                for (std::size_t j = i + 1; j < cands.size(); ++j)
                    if (set_.can_add(cands[j]))
                        next.push_back(cands[j]);
                if (!next.empty())
                    expand(next);
                set_.pop();
                if (best_.size() >= cap_)
                    return;
            }
        }

        const Graph & g_;
        IncrementalVisibleSet set_;
        bool independent_;
        detail::NodeCounter counter_;
        std::size_t cap_;
        std::vector<Vertex> best_;
        std::vector<bits::Word> cliques_;
    };

    InvariantResult max_visible(const Graph & g, bool independent, const SearchOptions & opt, const char * name)
    {
        const auto n = g.order();
        if (n == 0)
            return {0, VertexSet(0)};
        GeodesicIndex gi(g);
        if (!gi.connected())
            throw PreconditionError(std::string(name) + ": graph is disconnected");
        std::size_t cap = n;
        if (independent)
            cap = static_cast<std::size_t>(alpha(g, opt).value);
        else if (g.is_complete())
            return {static_cast<long>(n), g.all()};
        VisibilityKernel kernel(gi);
        MaxVisibleSearch search(g, kernel, independent, opt.node_budget, cap);
        try {
            auto best = search.run();
            std::sort(best.begin(), best.end());
            return {static_cast<long>(best.size()), VertexSet(n, best)};
        }
        catch (const detail::BudgetHit & hit) {
            throw BudgetExhausted(name, static_cast<long>(search.best().size()), static_cast<long>(cap), hit.nodes);
        }
    }

    /// Maximum clique by branch and bound with a greedy colouring bound.
    class CliqueSearch
    {
    public:
        CliqueSearch(const Graph & g, std::uint64_t budget) : g_(g), w_(g.words()), counter_(budget) {}

        std::vector<Vertex> run()
        {
            const auto n = g_.order();
            // Vertices are renumbered by descending degree so colouring classes
            // are filled by high-degree vertices first.
            order_ = degree_order(g_);
            pos_.assign(n, 0);
            for (Vertex i = 0; i < n; ++i)
                pos_[order_[i]] = i;
            rows_.assign(n * w_, 0);
            for (Vertex i = 0; i < n; ++i)
                for (Vertex u : g_.neighbors(order_[i]))
                    bits::set(rows_.data() + i * w_, pos_[u]);
            std::vector<bits::Word> p(w_, 0);
            for (Vertex i = 0; i < n; ++i)
                bits::set(p.data(), i);
            expand(p);
            std::vector<Vertex> out;
            for (Vertex i : best_)
                out.push_back(order_[i]);
            std::sort(out.begin(), out.end());
            return out;
        }

        std::size_t best_size() const { return best_.size(); }

    private:
        void expand(std::vector<bits::Word> & p)
        {
            counter_.tick();
            std::vector<Vertex> vs;
            std::vector<std::size_t> colour;
            {
                std::vector<bits::Word> uncoloured = p;
                std::vector<bits::Word> q(w_);
                std::size_t c = 0;
                while (bits::any(uncoloured.data(), w_)) {
                    ++c;
                    q = uncoloured;
                    while (true) {
                        auto v = bits::next(q.data(), w_, 0);
                        if (v >= w_ * 64)
                            break;
                        bits::reset(q.data(), static_cast<Vertex>(v));
                        bits::reset(uncoloured.data(), static_cast<Vertex>(v));
                        const auto * r = rows_.data() + v * w_;
                        for (std::size_t t = 0; t < w_; ++t)
                            q[t] &= ~r[t];
                        vs.push_back(static_cast<Vertex>(v));
                        colour.push_back(c);
                    }
                }
            }
            for (std::size_t i = vs.size(); i-- > 0;) {
                if (current_.size() + colour[i] <= best_.size())
                    return;
                Vertex v = vs[i];
                current_.push_back(v);
                std::vector<bits::Word> np(w_);
                const auto * r = rows_.data() + static_cast<std::size_t>(v) * w_;
                for (std::size_t t = 0; t < w_; ++t)
                    np[t] = p[t] & r[t];
                if (!bits::any(np.data(), w_)) {
                    if (current_.size() > best_.size())
                        best_ = current_;
                }
                else
                    expand(np);
                current_.pop_back();
                bits::reset(p.data(), v);
            }
        }

        const Graph & g_;
        std::size_t w_;
        detail::NodeCounter counter_;
        std::vector<Vertex> order_;
        std::vector<Vertex> pos_;
        std::vector<bits::Word> rows_;
        std::vector<Vertex> current_;
        std::vector<Vertex> best_;
    };

    InvariantResult max_clique(const Graph & g, const SearchOptions & opt, const char * name)
    {
        if (g.order() == 0)
            return {0, VertexSet(0)};
        CliqueSearch search(g, opt.node_budget);
        try {
            auto best = search.run();
            return {static_cast<long>(best.size()), VertexSet(g.order(), best)};
        }
        catch (const detail::BudgetHit & hit) {
            throw BudgetExhausted(name, static_cast<long>(search.best_size()), static_cast<long>(g.order()), hit.nodes);
        }
    }
}

InvariantResult mu(const Graph & g, const SearchOptions & opt) { return max_visible(g, false, opt, "mu"); }
InvariantResult mu_i(const Graph & g, const SearchOptions & opt) { return max_visible(g, true, opt, "mu_i"); }
InvariantResult omega(const Graph & g, const SearchOptions & opt) { return max_clique(g, opt, "omega"); }
InvariantResult alpha(const Graph & g, const SearchOptions & opt) { return max_clique(g.complement(), opt, "alpha"); }

}
