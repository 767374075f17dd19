#include "mvis/acceptance.hpp"

#include "mvis/builders.hpp"
#include "mvis/chromatic.hpp"
#include "mvis/constructive.hpp"
#include "mvis/enumerate.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/hardness.hpp"
#include "mvis/io.hpp"
#include "mvis/ramsey.hpp"
#include "mvis/reference.hpp"
#include "mvis/visibility.hpp"

#include <chrono>
#include <concepts>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#ifndef MVIS_SOURCE_DIR
#define MVIS_SOURCE_DIR "."
#endif

namespace mvis::acceptance
{

namespace
{
    constexpr std::size_t kKeptFailures = 5;

    class Recorder
    {
    public:
        explicit Recorder(SuiteResult & r) : r_(r) {}

        template <std::invocable Describe>
        bool expect(bool ok, Describe && describe)
        {
            ++r_.checks;
            if (!ok) {
                ++failed_;
                if (r_.failures.size() < kKeptFailures)
                    r_.failures.push_back(describe());
            }
            return ok;
        }

        bool expect(bool ok, const std::string & what)
        {
            return expect(ok, [&] { return what; });
        }

        void note(std::string text) { r_.notes.push_back(std::move(text)); }
        std::size_t failed() const { return failed_; }

    private:
        SuiteResult & r_;
        std::size_t failed_ = 0;
    };

    int ceil_div(long a, long b) { return static_cast<int>((a + b - 1) / b); }

    std::string edges_of(const Graph & g)
    {
        std::ostringstream out;
        out << "n=" << g.order() << " E={";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            out << (first ? "" : " ") << u << '-' << v;
            first = false;
        }
        out << '}';
        return out.str();
    }

    const std::vector<Graph> & connected_up_to_8()
    {
        static const std::vector<Graph> graphs = connected_graphs_up_to(8);
        return graphs;
    }

    std::vector<Graph> connected_between(std::size_t lo, std::size_t hi)
    {
        std::vector<Graph> out;
        for (auto & g : connected_up_to_8())
            if (g.order() >= lo && g.order() <= hi)
                out.push_back(g);
        return out;
    }

    std::vector<Graph> trees_between(std::size_t lo, std::size_t hi)
    {
        std::vector<Graph> out;
        for (auto & g : connected_between(lo, hi))
            if (g.is_tree())
                out.push_back(g);
        return out;
    }

    /// Every graph on 2 or 3 vertices up to isomorphism.
    std::vector<Graph> small_graphs()
    {
        return {build("empty:2"), build("complete:2"), build("empty:3"), Graph(3, std::vector<Edge>{{0, 1}}), build("path:3"),
                build("complete:3")};
    }

    // ---------------------------------------------------------------- AC1
    void cycles(Recorder & rec, const SuiteContext & ctx)
    {
        for (std::size_t n = 3; n <= 15; ++n) {
            const int imv_formula = (n == 3 || n == 5) ? 3 : ceil_div(static_cast<long>(n), 3);
            const int mv_formula = n == 3 ? 1 : n == 5 ? 2 : ceil_div(static_cast<long>(n), 3);
            Graph c = cycle_graph(n);
            const int imv = chi_mu_i(c, ctx.opt).k;
            const int mv = chi_mu(c, ctx.opt).k;
            rec.expect(imv == imv_formula, [&] { return "chi_mu_i(C" + std::to_string(n) + ") = " + std::to_string(imv) + ", formula " + std::to_string(imv_formula); });
            rec.expect(mv == mv_formula, [&] { return "chi_mu(C" + std::to_string(n) + ") = " + std::to_string(mv) + ", formula " + std::to_string(mv_formula); });
            auto built = cycle_imv(n);
            rec.expect(built.coloring.k() == imv_formula, [&] { return "cycle_imv(" + std::to_string(n) + ") used " + std::to_string(built.coloring.k()) + " classes"; });
        }
    }

    // ---------------------------------------------------------------- AC2
    void paths(Recorder & rec, const SuiteContext & ctx)
    {
        for (std::size_t n = 1; n <= 9; ++n) {
            const int k = chi_mu(path_graph(n), ctx.opt).k;
            rec.expect(k == ceil_div(static_cast<long>(n), 2), [&] { return "chi_mu(P" + std::to_string(n) + ") = " + std::to_string(k); });
        }
    }

    // ---------------------------------------------------------------- AC3
    void check_tree(Recorder & rec, const Graph & t, const SuiteContext & ctx, std::size_t & fallbacks)
    {
        auto mv = chi_mu(t, ctx.opt);
        const int imv = chi_mu_i(t, ctx.opt).k;
        rec.expect(imv == mv.k, [&] { return "chi_mu_i != chi_mu on " + edges_of(t); });
        auto ex = tree_exchange(t, mv.coloring);
        fallbacks += ex.notes.empty() ? 0 : 1;
        rec.expect(ex.coloring.k() == mv.k && ex.notes.empty(), [&] {
            return "tree_exchange on " + edges_of(t) + " gave " + std::to_string(ex.coloring.k()) + " classes"
                   + (ex.notes.empty() ? "" : " after fallback");
        });
    }

    void trees(Recorder & rec, const SuiteContext & ctx)
    {
        std::size_t fallbacks = 0, labelled = 0;
        for (std::size_t n = 3; n <= 8; ++n) {
            std::vector<Vertex> code(n - 2, 0);
            while (true) {
                check_tree(rec, tree_from_pruefer(code), ctx, fallbacks);
                ++labelled;
                std::size_t i = 0;
                while (i < code.size() && ++code[i] == n)
                    code[i++] = 0;
                if (i == code.size())
                    break;
            }
        }
        for (std::uint64_t seed = 0; seed < 500; ++seed)
            check_tree(rec, random_tree(seed, 9 + seed % 3), ctx, fallbacks);
        rec.note(std::to_string(labelled) + " labelled trees with 3..8 vertices and 500 random trees with 9..11 vertices; "
                 + std::to_string(fallbacks) + " exchange fallbacks");
    }

    // ---------------------------------------------------------------- AC4
    void bounds_sandwich(Recorder & rec, const SuiteContext & ctx)
    {
        std::vector<Graph> graphs = trees_between(1, 8);
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> unit(0.05, 0.95);
        for (int i = 0; i < 2000; ++i) {
            const std::size_t n = 2 + rng() % 7;
            graphs.push_back(random_connected_graph(rng, n, unit(rng)));
        }
        for (auto & g : graphs) {
            const int x = chi(g, ctx.opt).k;
            const int xm = chi_mu(g, ctx.opt).k;
            const int xi = chi_mu_i(g, ctx.opt).k;
            const long mi = mu_i(g, ctx.opt).value;
            const int low = std::max({x, xm, ceil_div(static_cast<long>(g.order()), mi)});
            rec.expect(low <= xi && xi <= x * xm, [&] {
                return "sandwich broken on " + edges_of(g) + ": chi=" + std::to_string(x) + " chi_mu=" + std::to_string(xm) + " chi_mu_i=" + std::to_string(xi)
                       + " mu_i=" + std::to_string(mi);
            });
        }
    }

    // ---------------------------------------------------------------- AC5
    void diameter_results(Recorder & rec, const SuiteContext & ctx)
    {
        std::size_t small_diam = 0, diam2 = 0;
        for (auto & g : connected_up_to_8()) {
            const int d = diameter(g);
            if (d > 3)
                continue;
            ++small_diam;
            rec.expect(mu_i(g, ctx.opt).value == alpha(g, ctx.opt).value, [&] { return "mu_i != alpha on " + edges_of(g); });
            rec.expect(chi_mu_i(g, ctx.opt).k == chi(g, ctx.opt).k, [&] { return "chi_mu_i != chi on " + edges_of(g); });
            if (d == 2) {
                ++diam2;
                rec.expect(chi_mu(g, ctx.opt).k <= chi_defective1(g, ctx.opt).k, [&] { return "chi_mu > chi_1 on " + edges_of(g); });
            }
        }
        Graph p = petersen_graph();
        rec.expect(chi_mu(p, ctx.opt).k == 2, "chi_mu(Petersen) != 2");
        rec.expect(chi(p, ctx.opt).k == 3, "chi(Petersen) != 3");
        rec.expect(chi_defective1(p, ctx.opt).k == 2, "chi_1(Petersen) != 2");
        rec.note(std::to_string(small_diam) + " graphs with diameter <= 3, " + std::to_string(diam2) + " of diameter 2");
    }

    // ---------------------------------------------------------------- AC6
    void characterisation(Recorder & rec, const SuiteContext & ctx)
    {
        std::size_t twos = 0;
        for (auto & g : connected_up_to_8()) {
            const bool two = chi_mu_i(g, ctx.opt).k == 2;
            const int d = diameter(g);
            const bool predicted = g.is_bipartite() && d >= 1 && d <= 3;
            twos += two ? 1 : 0;
            rec.expect(two == predicted, [&] { return "chi_mu_i == 2 disagrees with bipartite and diameter 1..3 on " + edges_of(g); });
        }
        rec.note(std::to_string(connected_up_to_8().size()) + " connected graphs, " + std::to_string(twos) + " with chi_mu_i = 2");
    }

    // ---------------------------------------------------------------- AC7
    void lexicographic(Recorder & rec, const SuiteContext & ctx)
    {
        for (auto & g : connected_between(2, 4))
            for (auto & h : small_graphs()) {
                Graph p = lexicographic_product(g, h);
                auto name = [&] { return "lex(" + edges_of(g) + ", " + edges_of(h) + ")"; };
                if (!(g.is_complete() && h.is_complete())) {
                    rec.expect(chi_mu(p, ctx.opt).k == 2, [&] { return "chi_mu != 2 for " + name(); });
                    rec.expect(lex_mv_2coloring(p).coloring.k() == 2, [&] { return "lex_mv_2coloring failed for " + name(); });
                }
                if (h.size() > 0) {
                    const int x = chi(p, ctx.opt).k;
                    rec.expect(chi_mu_i(p, ctx.opt).k == x, [&] { return "chi_mu_i != chi for " + name(); });
                    rec.expect(mu_i(p, ctx.opt).value == alpha(g, ctx.opt).value * alpha(h, ctx.opt).value, [&] { return "mu_i != alpha*alpha for " + name(); });
                    rec.expect(lex_imv(p, ctx.opt).coloring.k() == x, [&] { return "lex_imv class count for " + name(); });
                }
                GeodesicIndex gp(p), gg(g), gh(h);
                bool law = true;
                const auto nh = h.order();
                for (Vertex a = 0; a < p.order(); ++a)
                    for (Vertex b = 0; b < p.order(); ++b) {
                        const Vertex ga = a / nh, ha = a % nh, gb = b / nh, hb = b % nh;
                        int expected = 0;
                        if (ga == gb)
                            expected = ha == hb ? 0 : std::min(2, gh.distance(ha, hb));
                        else
                            expected = gg.distance(ga, gb);
                        law = law && gp.distance(a, b) == expected;
                    }
                rec.expect(law, [&] { return "distance law fails for " + name(); });
            }
    }

    // ---------------------------------------------------------------- AC8
    void subdivision_sandwich(Recorder & rec, const SuiteContext & ctx)
    {
        for (std::size_t n = 3; n <= 6; ++n) {
            const int r = rho(n);
            Graph s = subdivision(complete_graph(n));
            const int xm = chi_mu(s, ctx.opt).k;
            const int xi = chi_mu_i(s, ctx.opt).k;
            rec.expect(r <= xm && xm <= xi && xi <= r + 1, [&] {
                return "S(K" + std::to_string(n) + "): rho=" + std::to_string(r) + " chi_mu=" + std::to_string(xm) + " chi_mu_i=" + std::to_string(xi);
            });
            if (n == 4)
                rec.expect(xi == 3, "chi_mu_i(S(K4)) != 3");
            rec.note("S(K" + std::to_string(n) + "): rho=" + std::to_string(r) + " chi_mu=" + std::to_string(xm) + " chi_mu_i=" + std::to_string(xi)
                     + (xi == r + 1 ? " (chi_mu_i = rho + 1)" : " (chi_mu_i != rho + 1)"));
        }
        for (std::size_t a = 1; a <= 3; ++a)
            for (std::size_t b = a; b <= 3; ++b) {
                const int r = rho_rs(a, b);
                Graph s = subdivision(biclique(a, b));
                const int xm = chi_mu(s, ctx.opt).k;
                const int xi = chi_mu_i(s, ctx.opt).k;
                rec.expect(r <= xm && xm <= xi && xi <= r + 1, [&] {
                    return "S(K" + std::to_string(a) + "," + std::to_string(b) + "): rho=" + std::to_string(r) + " chi_mu=" + std::to_string(xm)
                           + " chi_mu_i=" + std::to_string(xi);
                });
            }
    }

    // ---------------------------------------------------------------- AC9
    void ramsey_values(Recorder & rec, const SuiteContext &)
    {
        rec.expect(rho(3) == 1, "rho(3) != 1");
        for (std::size_t n = 4; n <= 9; ++n) {
            rec.expect(rho(n) == 2, [&] { return "rho(" + std::to_string(n) + ") != 2"; });
            auto p = find_k4free_partition(n, 2);
            rec.expect(p && !find_monochromatic_k4(*p), [&] { return "no verified 2-class partition of K" + std::to_string(n); });
            rec.expect(!find_k4free_partition(n, 1), [&] { return "K" + std::to_string(n) + " reported K4-free"; });
        }
        for (std::size_t s = 1; s <= 6; ++s)
            rec.expect(rho_rs(1, s) == 1, [&] { return "rho(1," + std::to_string(s) + ") != 1"; });
        rec.expect(rho_rs(2, 2) == 2, "rho(2,2) != 2");
        auto c = find_c4free_partition(2, 3, 2);
        rec.expect(c && !find_monochromatic_c4(*c), "no verified 2-class partition of K2,3");
        rec.note("rho(18) >= 3 follows from R(4,4) = 18 and is not searched");
    }

    // ---------------------------------------------------------------- AC10
    void strong_paths(Recorder & rec, const SuiteContext & ctx)
    {
        auto golden = [&](const std::string & file, std::size_t size) {
            std::string expected;
            try {
                expected = io::read_text_file(ctx.golden_dir + "/" + file);
            }
            catch (const InputError & e) {
                rec.expect(false, std::string(e.what()));
                return;
            }
            auto built = strong_paths_imv(size, size);
            rec.expect(render_grid(built.coloring, size, size) == expected, [&] { return "grid differs from " + file; });
        };
        golden("strong_p12.txt", 12);
        golden("strong_p8.txt", 8);
        rec.expect(strong_paths_imv(12, 12).coloring.k() == 6, "P12 scheme does not use 6 colours");
        rec.expect(strong_paths_imv(8, 8).coloring.k() == 4, "P8 scheme does not use 4 colours");

        const int exact = chi_mu_i(strong_product(path_graph(8), path_graph(8)), ctx.opt).k;
        rec.expect(exact == 4, [&] { return "chi_mu_i(P8 x P8) = " + std::to_string(exact); });
        for (auto [t, r] : {std::pair<std::size_t, std::size_t>{16, 8}, {10, 5}, {7, 7}}) {
            auto c = strong_paths_imv(t, r);
            rec.expect(c.coloring.k() == 4, [&] { return "strong_paths_imv(" + std::to_string(t) + "," + std::to_string(r) + ") used " + std::to_string(c.coloring.k()); });
        }
        for (std::size_t t = 2; t <= 6; ++t)
            for (std::size_t r = 2; r <= t; ++r) {
                const int formula = (t == 2 && r == 2) ? 1 : r == 2 ? 2 : ceil_div(static_cast<long>(r), 2);
                const int k = chi_mu(strong_product(path_graph(t), path_graph(r)), ctx.opt).k;
                rec.expect(k == formula, [&] { return "chi_mu(P" + std::to_string(t) + " x P" + std::to_string(r) + ") = " + std::to_string(k); });
                rec.expect(strong_paths_mv(t, r).coloring.k() == formula, [&] { return "strong_paths_mv(" + std::to_string(t) + "," + std::to_string(r) + ")"; });
            }
    }

    // ---------------------------------------------------------------- AC11
    void cartesian(Recorder & rec, const SuiteContext & ctx)
    {
        auto factors = connected_between(1, 5);
        std::map<std::size_t, int> chi_mu_of;
        for (std::size_t i = 0; i < factors.size(); ++i)
            chi_mu_of[i] = chi_mu(factors[i], ctx.opt).k;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i; j < factors.size(); ++j) {
                const Graph & g = factors[i];
                const Graph & h = factors[j];
                Graph p = cartesian_product(g, h);
                GeodesicIndex gi(p);
                bool convex = true;
                for (Vertex v = 0; v < h.order(); ++v)
                    convex = convex && is_convex(gi, fiber(p, FiberKind::g_fiber, v));
                for (Vertex v = 0; v < g.order(); ++v)
                    convex = convex && is_convex(gi, fiber(p, FiberKind::h_fiber, v));
                rec.expect(convex, [&] { return "non-convex fiber in " + edges_of(g) + " x " + edges_of(h); });
                const int k = chi_mu(p, ctx.opt).k;
                rec.expect(k >= std::max(chi_mu_of[i], chi_mu_of[j]), [&] { return "chi_mu(G x H) below factor bound for " + edges_of(g) + " x " + edges_of(h); });
            }
        for (auto & g : connected_between(2, 5)) {
            auto imv = chi_mu_i(g, ctx.opt);
            for (std::size_t n = 1; n <= 3; ++n) {
                auto c = cartesian_prism_mv(g, n, imv.coloring);
                rec.expect(c.coloring.k() == imv.k, [&] { return "prism colouring of " + edges_of(g) + " uses " + std::to_string(c.coloring.k()); });
            }
        }
        for (auto & t : trees_between(3, 7))
            rec.expect(chi_mu(cartesian_product(t, complete_graph(2)), ctx.opt).k == chi_mu(t, ctx.opt).k, [&] { return "chi_mu(T x K2) != chi_mu(T) for " + edges_of(t); });

        for (auto [spec, expected] : {std::pair<const char *, int>{"hamming:2,2,2", 2}, {"hamming:2,2,3", 3}}) {
            Graph h = build(spec);
            const int d = diameter(h);
            const int x = chi(h, ctx.opt).k;
            rec.expect(d <= 3 && x == expected, [&] { return std::string(spec) + ": diameter " + std::to_string(d) + ", chi " + std::to_string(x); });
            rec.expect(chi_mu_i(h, ctx.opt).k == expected, [&] { return std::string(spec) + ": exact chi_mu_i differs"; });
        }
    }

    // ---------------------------------------------------------------- AC12
    void strong_lower(Recorder & rec, const SuiteContext & ctx)
    {
        auto factors = connected_between(1, 6);
        std::vector<int> cp, om;
        for (auto & g : factors) {
            cp.push_back(longest_convex_path(g));
            om.push_back(static_cast<int>(omega(g, ctx.opt).value));
        }
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i; j < factors.size(); ++j) {
                Graph p = strong_product(factors[i], factors[j]);
                const int bound = std::max(ceil_div(std::min(cp[i], cp[j]), 2), om[i] * om[j]);
                auto fewer = mv_coloring_with(p, bound - 1, true, ctx.opt);
                rec.expect(!fewer, [&] { return "IMV colouring of G x H with " + std::to_string(bound - 1) + " classes for " + edges_of(factors[i]) + " x " + edges_of(factors[j]); });
            }
    }

    // ---------------------------------------------------------------- AC13
    std::vector<Cnf3> cnf_corpus()
    {
        std::vector<Cnf3> corpus;
        corpus.push_back(Cnf3::from_ints(1, {{1}, {-1}}));
        corpus.push_back(Cnf3::from_ints(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}));
        corpus.push_back(Cnf3::from_ints(2, {{1}, {-1, 2}, {-2}}));
        corpus.push_back(Cnf3::from_ints(3, {{1, 2, 3}, {-1}, {-2}, {-3}}));
        corpus.push_back(Cnf3::from_ints(2, {{1, 2}}));
        std::mt19937_64 rng(13);
        for (int idx = 0; idx < 60; ++idx) {
            const int a = 1 + idx % 3;
            const int b = 1 + (idx / 3) % 4;
            std::vector<std::vector<int>> clauses;
            for (int j = 0; j < b; ++j) {
                const int size = (a == 3 && idx % 2 == 0) ? 3 : 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(a, 3)));
                std::vector<int> vars(static_cast<std::size_t>(a));
                for (int v = 0; v < a; ++v)
                    vars[static_cast<std::size_t>(v)] = v + 1;
                std::shuffle(vars.begin(), vars.end(), rng);
                std::vector<int> clause;
                for (int t = 0; t < size; ++t)
                    clause.push_back(rng() % 2 ? vars[static_cast<std::size_t>(t)] : -vars[static_cast<std::size_t>(t)]);
                clauses.push_back(std::move(clause));
            }
            corpus.push_back(Cnf3::from_ints(a, clauses));
        }
        return corpus;
    }

    void hardness(Recorder & rec, const SuiteContext & ctx)
    {
        auto four_clauses = Cnf3::from_ints(4, {{1, 2, -3}, {-1, -2, 4}, {-2, 3, 4}, {-1, -3, -4}});
        Graph gadget = build_sat_gadget(four_clauses);
        rec.expect(alpha(gadget, ctx.opt).value == 17, "alpha of the 4-variable gadget != 17");
        rec.expect(mu_i(gadget, ctx.opt).value == 17, "mu_i of the 4-variable gadget != 17");
        VertexSet m = sat_gadget_set(four_clauses, {true, false, true, false});
        rec.expect(m.size() == 17 && is_imv_set(gadget, m), "assignment set of the 4-variable gadget is not an IMV set of size 17");

        std::size_t sat = 0, unsat = 0, short_clauses = 0;
        auto corpus = cnf_corpus();
        for (auto & f : corpus) {
            auto r = verify_sat_reduction(f, ctx.opt);
            (r.satisfiable ? sat : unsat)++;
            short_clauses += r.uses_short_clauses ? 1 : 0;
            rec.expect(r.agrees, [&] {
                std::ostringstream out;
                write_dimacs(out, f);
                return "reduction disagrees (sat=" + std::to_string(r.satisfiable) + ", mu_i=" + std::to_string(r.mu_i) + ", alpha=" + std::to_string(r.alpha) + ") on " + out.str();
            });
            rec.expect(r.alpha == r.alpha_formula, [&] { return "alpha != 3a+b+1 on a formula with " + std::to_string(f.num_vars) + " variables"; });
            rec.expect(diameter(build_sat_gadget(f)) == 4, "gadget diameter != 4");
        }
        rec.expect(corpus.size() >= 50 && sat > 0 && unsat > 0, "corpus too small or one-sided");
        rec.note(std::to_string(corpus.size()) + " formulas: " + std::to_string(sat) + " satisfiable, " + std::to_string(unsat) + " unsatisfiable, "
                 + std::to_string(short_clauses) + " with clauses shorter than three literals (extension beyond the 3-literal proof)");

        std::vector<Graph> hs;
        for (auto & g : connected_between(1, 7)) {
            hs.push_back(g);
            hs.push_back(g.complement());
        }
        for (auto & h : hs) {
            Graph k = build_corona_reduction(h);
            rec.expect(mu_i(k, ctx.opt).value == alpha(h, ctx.opt).value, [&] { return "mu_i(K1 corona h) != alpha(h) for " + edges_of(h); });
            rec.expect(chi_mu_i(k, ctx.opt).k == chi(h, ctx.opt).k + 1, [&] { return "chi_mu_i(K1 corona h) != chi(h)+1 for " + edges_of(h); });
        }
        std::mt19937_64 rng(31);
        for (int i = 0; i < 20; ++i) {
            Graph g = random_connected_graph(rng, 1 + rng() % 4, 0.5);
            Graph h = random_connected_graph(rng, 1 + rng() % 4, 0.4);
            if (i % 2)
                h = h.complement();
            Graph c = corona(g, h);
            const long expected = static_cast<long>(g.order()) * alpha(h, ctx.opt).value;
            rec.expect(mu_i(c, ctx.opt).value == expected, [&] { return "corona law fails for " + edges_of(g) + " corona " + edges_of(h); });
        }
    }

    // ---------------------------------------------------------------- AC14
    void triangle_free(Recorder & rec, const SuiteContext & ctx)
    {
        std::mt19937_64 rng(14);
        std::uniform_real_distribution<double> unit(0.05, 0.6);
        for (int i = 0; i < 200; ++i) {
            const std::size_t n = 2 + rng() % 11;
            Graph g = random_triangle_free_graph(rng, n, unit(rng));
            const long mi = mu_i(g, ctx.opt).value;
            auto c = trianglefree_imv(g, ctx.opt);
            rec.expect(c.coloring.k() <= ceil_div(static_cast<long>(n) - mi, 2) + 1, [&] { return "trianglefree_imv exceeds its bound on " + edges_of(g); });
            const int exact = chi_mu_i(g, ctx.opt).k;
            rec.expect(exact <= ceil_div(static_cast<long>(n - g.max_degree()), 2) + 1, [&] { return "chi_mu_i exceeds the max-degree bound on " + edges_of(g); });
        }
    }

    // ---------------------------------------------------------------- AC15
    void oracles(Recorder & rec, const SuiteContext & ctx)
    {
        auto graphs = connected_between(1, 7);
        std::mt19937_64 rng(15);
        std::uniform_real_distribution<double> unit(0.1, 0.9);
        for (int i = 0; i < 500; ++i)
            graphs.push_back(random_connected_graph(rng, 1 + rng() % 9, unit(rng)));
        for (auto & g : graphs) {
            rec.expect(mu(g, ctx.opt).value == reference::mu(g), [&] { return "mu differs from enumeration on " + edges_of(g); });
            rec.expect(mu_i(g, ctx.opt).value == reference::mu_i(g), [&] { return "mu_i differs from enumeration on " + edges_of(g); });
            rec.expect(chi_mu(g, ctx.opt).k == reference::chi_mu(g), [&] { return "chi_mu differs from enumeration on " + edges_of(g); });
            rec.expect(chi_mu_i(g, ctx.opt).k == reference::chi_mu_i(g), [&] { return "chi_mu_i differs from enumeration on " + edges_of(g); });
        }
    }

    struct Suite
    {
        const char * id;
        const char * title;
        void (*run)(Recorder &, const SuiteContext &);
    };

    const std::vector<Suite> & suites()
    {
        static const std::vector<Suite> all = {
            {"ac1", "cycles: chi_mu and chi_mu_i formulas, cycle_imv", cycles},
            {"ac2", "paths: chi_mu(P_n) = ceil(n/2)", paths},
            {"ac3", "trees: chi_mu_i = chi_mu, exchange keeps class count", trees},
            {"ac4", "bounds: max(chi, chi_mu, n/mu_i) <= chi_mu_i <= chi*chi_mu", bounds_sandwich},
            {"ac5", "small diameter: mu_i = alpha, chi_mu_i = chi, chi_mu <= chi_1", diameter_results},
            {"ac6", "chi_mu_i = 2 iff bipartite with diameter 1..3", characterisation},
            {"ac7", "lexicographic products", lexicographic},
            {"ac8", "subdivided complete and complete bipartite graphs", subdivision_sandwich},
            {"ac9", "edge partition numbers rho", ramsey_values},
            {"ac10", "strong products of paths", strong_paths},
            {"ac11", "Cartesian products", cartesian},
            {"ac12", "strong product lower bound", strong_lower},
            {"ac13", "hardness reductions", hardness},
            {"ac14", "triangle-free upper bound", triangle_free},
            {"ac15", "branch and bound against exhaustive enumeration", oracles},
        };
        return all;
    }
}

const std::vector<std::string> & suite_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (auto & s : suites())
            out.emplace_back(s.id);
        return out;
    }();
    return ids;
}

std::string suite_title(const std::string & id)
{
    for (auto & s : suites())
        if (id == s.id)
            return s.title;
    throw InputError("unknown suite '" + id + "'");
}

SuiteResult run_suite(const std::string & id, const SuiteContext & ctx)
{
    const Suite * suite = nullptr;
    for (auto & s : suites())
        if (id == s.id)
            suite = &s;
    if (!suite)
        throw InputError("unknown suite '" + id + "'");
    SuiteResult r;
    r.id = suite->id;
    r.title = suite->title;
    Recorder rec(r);
    const auto start = std::chrono::steady_clock::now();
    try {
        suite->run(rec, ctx);
    }
    catch (const std::exception & e) {
        rec.expect(false, std::string("aborted: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = rec.failed() == 0 && r.checks > 0;
    return r;
}

std::string summary_line(const SuiteResult & r)
{
    std::ostringstream out;
    out << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  (" << r.checks << " checks, ";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << r.seconds << " s)";
    if (!r.passed && !r.failures.empty())
        out << ": " << r.failures.front();
    return out.str();
}

std::string default_golden_dir()
{
    if (const char * env = std::getenv("MVIS_GOLDEN_DIR"))
        return env;
    return std::string(MVIS_SOURCE_DIR) + "/tests/golden";
}

}
